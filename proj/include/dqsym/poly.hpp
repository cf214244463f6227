#pragma once

#include <map>
#include <string>
#include <vector>

#include "dqsym/bicomp.hpp"
#include "dqsym/rational.hpp"

namespace dqsym {

// Monomial in the variables x_1..x_n, y_1..y_n, stored support-compressed:
// a strictly increasing support set and a bicomposition exponent of the same
// length, one nonzero column per support index.
struct Monomial {
    std::vector<unsigned> support;  // 1-based variable indices, strictly increasing
    Bicomposition exponent;

    static Monomial one() { return {}; }
    // Canonicalizes: sorts by index and drops zero columns.  Indices must be distinct.
    static Monomial from_pairs(std::vector<std::pair<unsigned, Bivector>> factors);

    Bidegree bidegree() const { return exponent.bidegree(); }
    std::string str() const;  // e.g. "x1^2*y1*y3*x4^2"; "1" for the empty monomial

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {  // bidegree, then support, then exponent
        if (bidegree() != o.bidegree()) return bidegree() < o.bidegree();
        if (support != o.support) return support < o.support;
        return exponent < o.exponent;
    }
};

Monomial mono_mul(const Monomial& u, const Monomial& v);

// Sparse polynomial over the rationals in n pairs of variables.
class Polynomial {
public:
    explicit Polynomial(unsigned n) : n_(n) {}
    static Polynomial monomial(unsigned n, Monomial m, Rat coeff = Rat(1));
    static Polynomial constant(unsigned n, Rat value);
    static Polynomial x(unsigned n, unsigned i);
    static Polynomial y(unsigned n, unsigned i);

    unsigned vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rat& c);  // accumulates, erases zeros

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rat& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    bool operator==(const Polynomial&) const = default;

    std::string str() const;

private:
    unsigned n_;
    std::map<Monomial, Rat> terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

// Substitutes d/dx_i, d/dy_i for the variables of p and applies the resulting
// differential operator to q.
Polynomial apply_diff(const Polynomial& p, const Polynomial& q);

// <p,q> = constant term of apply_diff(p,q).  Monomials are orthogonal and
// <m,m> is the product of factorials of the exponent entries.
Rat scalar_product(const Polynomial& p, const Polynomial& q);

Polynomial bidegree_component(const Polynomial& p, Bidegree d);

// All monomials of the given bidegree on variables 1..n, sorted.
std::vector<Monomial> monomial_basis(unsigned n, Bidegree d);

// k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<unsigned>> all_k_subsets(unsigned n, unsigned k);

}  // namespace dqsym
