#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dqsym/poly.hpp"

namespace dqsym {

class Permutation {
public:
    explicit Permutation(std::vector<unsigned> images);  // one-line notation, validated
    static Permutation identity(unsigned n);
    static Permutation parse(std::string_view text);  // "3 1 4 2"

    unsigned size() const { return static_cast<unsigned>(img_.size()); }
    unsigned operator()(unsigned i) const { return img_[i - 1]; }
    int sign() const;
    Permutation inverse() const;
    Permutation compose(const Permutation& o) const;  // (this o other)(i) = this(other(i))
    std::vector<unsigned> cycle_type() const;         // cycle lengths, decreasing

    std::string str() const;
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<unsigned> img_;
};

std::vector<Permutation> all_permutations(unsigned n);

// The natural diagonal action permutes x_i and y_i simultaneously; it is a
// ring automorphism.
Monomial natural_action(const Permutation& s, const Monomial& m);
Polynomial natural_action(const Permutation& s, const Polynomial& p);

// Hivert's diagonal action moves the support set of a monomial (re-sorted
// increasingly) while freezing the exponent bicomposition.  Linear, but not
// multiplicative; it factors through the Temperley-Lieb algebra.
Monomial hivert_action(const Permutation& s, const Monomial& m);
Polynomial hivert_action(const Permutation& s, const Polynomial& p);

enum class ActionKind { natural, hivert };

class GroupAlgebraElt {
public:
    explicit GroupAlgebraElt(unsigned n) : n_(n) {}
    unsigned degree() const { return n_; }
    const std::map<Permutation, Rat>& terms() const { return terms_; }
    void add_term(const Permutation& s, const Rat& c);

private:
    unsigned n_;
    std::map<Permutation, Rat> terms_;
};

Polynomial group_algebra_apply(const GroupAlgebraElt& e, const Polynomial& p, ActionKind kind);

// Signed sum of the six permutations moving only {i,j,k}, each with its sign.
// Generates the kernel of the Hivert action (the Temperley-Lieb relation at q=1).
GroupAlgebraElt tl_kernel_element(unsigned i, unsigned j, unsigned k, unsigned n);

// Number of bidegree-d monomials on 1..n fixed by the Hivert action of s; the
// action permutes monomials, so this is the character value.
unsigned long hivert_trace(const Permutation& s, unsigned n, Bidegree d);

}  // namespace dqsym
