#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqsym/bicomp.hpp"
#include "dqsym/rational.hpp"

namespace dqsym {

// Univariate series in q.  Either an exact polynomial (coefficients beyond the
// stored ones are zero) or a truncation (coefficients beyond the bound are
// undefined, never implicitly zero).
class UnivariateSeries {
public:
    static UnivariateSeries polynomial(std::vector<Rat> coeffs);
    static UnivariateSeries truncated(std::vector<Rat> coeffs, unsigned bound);

    bool is_exact() const { return !trunc_.has_value(); }
    // Largest exponent with a defined coefficient; exact polynomials define all.
    std::optional<unsigned> truncation() const { return trunc_; }
    unsigned degree() const;  // degree of an exact polynomial (0 for the zero one)

    Rat coeff(unsigned k) const;  // throws past the truncation bound

    std::string str(char var = 'q') const;

    bool operator==(const UnivariateSeries&) const = default;

private:
    std::vector<Rat> c_;
    std::optional<unsigned> trunc_;
};

// Coefficientwise agreement through degree maxdeg; both series must define
// that range.
bool agree_up_to(const UnivariateSeries& u, const UnivariateSeries& v, unsigned maxdeg);

// Bivariate truncated series in (q, t): a dense grid of coefficients for
// exponents (i, j) with i <= t1, j <= t2.
class BivariateSeries {
public:
    BivariateSeries(unsigned t1, unsigned t2);  // zero series
    static BivariateSeries one(unsigned t1, unsigned t2);

    unsigned trunc_q() const { return t1_; }
    unsigned trunc_t() const { return t2_; }
    const Rat& coeff(unsigned i, unsigned j) const;
    Rat& at(unsigned i, unsigned j);

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    BivariateSeries& operator*=(const Rat& c);
    friend BivariateSeries operator*(const BivariateSeries& u, const BivariateSeries& v);

    // Multiplicative inverse; requires a nonzero constant term.
    BivariateSeries inverse() const;

    // 1 / ((1 - q^k)(1 - t^k)) as a truncated series.
    static BivariateSeries geometric_pair(unsigned k, unsigned t1, unsigned t2);

    std::string str() const;
    bool operator==(const BivariateSeries&) const = default;

private:
    unsigned t1_, t2_;
    std::vector<Rat> grid_;  // (t1+1) x (t2+1), row-major in the q exponent
};

}  // namespace dqsym
