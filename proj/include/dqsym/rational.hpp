#pragma once

#include <gmpxx.h>

namespace dqsym {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Int catalan(unsigned n);

}  // namespace dqsym
