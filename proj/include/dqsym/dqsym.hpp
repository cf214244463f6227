#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dqsym/bicomp.hpp"
#include "dqsym/poly.hpp"

namespace dqsym {

// Element of DQSym written in the bimonomial basis: finite map from index
// bicompositions to rational coefficients.  The n -> infinity Hopf algebra is
// the primary object; expansion at a finite n is a view.
class DQSymElt {
public:
    DQSymElt() = default;
    static DQSymElt basis(const Bicomposition& a) {
        DQSymElt u;
        u.add_term(a, Rat(1));
        return u;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Bicomposition, Rat>& terms() const { return terms_; }
    Rat coeff(const Bicomposition& a) const;
    void add_term(const Bicomposition& a, const Rat& c);

    DQSymElt& operator+=(const DQSymElt& o);
    DQSymElt& operator-=(const DQSymElt& o);
    DQSymElt& operator*=(const Rat& c);
    bool operator==(const DQSymElt&) const = default;

    std::string str(const char* name = "M") const;  // "2*M[1,0/0,1] + M[1/1]"

private:
    std::map<Bicomposition, Rat> terms_;
};

// Flat tensor-square element over index pairs.
class TensorElt {
public:
    using Key = std::pair<Bicomposition, Bicomposition>;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }
    Rat coeff(const Bicomposition& a, const Bicomposition& b) const;
    void add_term(const Key& k, const Rat& c);

    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    bool operator==(const TensorElt&) const = default;

    std::string str(const char* name = "M") const;

private:
    std::map<Key, Rat> terms_;
};

// Bimonomial quasi-symmetric polynomial: sum over all length(a)-subsets of
// 1..n of the support-shifted monomial; zero when length(a) > n.
Polynomial m_expand(const Bicomposition& a, unsigned n);
Polynomial expand(const DQSymElt& u, unsigned n);

// Product in the M basis: counted quasi-shuffle structure constants.
DQSymElt m_mult(const Bicomposition& a, const Bicomposition& b);
DQSymElt product(const DQSymElt& u, const DQSymElt& v);

// Deconcatenation coproduct and its counit.
TensorElt coproduct(const DQSymElt& u);
Rat counit(const DQSymElt& u);

// Componentwise product on tensors, (a (x) b)(c (x) d) = ac (x) bd.
TensorElt tensor_mult(const TensorElt& u, const TensorElt& v);

// Fundamental element written in the M basis: sum of M_a over refinements a of b.
DQSymElt f_basis(const Bicomposition& b);

// Change of basis M -> F by Moebius inversion along the refinement order; the
// keys of the result index F elements.
DQSymElt m_in_f(const DQSymElt& u);

// Specialization y_i = x_i: indices collapse to ordinary compositions.
using QSymElt = std::map<Composition, Rat>;
QSymElt pi_project(const DQSymElt& u);

// Product of the univariate quasi-shuffle algebra on compositions, used as the
// target of pi.
QSymElt qsym_mult(const QSymElt& u, const QSymElt& v);
std::string qsym_str(const QSymElt& u);

// Weakly lex-decreasing multisets of Lyndon bicompositions of total bidegree d.
std::vector<std::vector<Bicomposition>> lyndon_multisets(Bidegree d);

// True iff products of Lyndon multisets of total bidegree d form a basis of
// the bidegree-d component (square invertible transition matrix over the M's).
bool lyndon_freeness_check(Bidegree d);

}  // namespace dqsym
