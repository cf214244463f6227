#pragma once

#include <string>

#include "dqsym/bicomp.hpp"

namespace dqsym {

struct CheckResult {
    bool pass = false;
    std::string witness;  // minimal counterexample when the check fails
};

// E_{i,j,k} * m = 0 under the Hivert action, for 3 <= n <= nmax, all triples,
// all monomials of bidegree <= (2,2).
CheckResult verify_kernel(unsigned nmax);

// Both adjointness identities between the h and M structures, exhaustively
// over index triples of total bidegree <= bound.
CheckResult verify_duality(unsigned bound);

// Trace-based versus counting-based bigraded characters at bidegrees <= (3,3)
// for n <= nmax, and the induced-character identity for the fixed-exponent
// spans at n <= 4, bidegrees <= (2,2).
CheckResult verify_frobenius(unsigned nmax);

// Products of decreasing Lyndon multisets span freely at every bidegree with
// total degree <= bound.
CheckResult verify_lyndon(unsigned bound);

// The conjectured monomial basis is independent modulo the ideal and has the
// computed quotient dimensions at every bidegree.
CheckResult verify_basis(unsigned n);

// Counit laws, coassociativity, multiplicativity of the coproduct, and the
// specialization morphism, exhaustively at total bidegree <= bound.
CheckResult verify_hopf(unsigned bound);

}  // namespace dqsym
