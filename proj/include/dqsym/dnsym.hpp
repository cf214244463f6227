#pragma once

#include "dqsym/dqsym.hpp"

namespace dqsym {

// Element of the free dual algebra DNSym: a bicomposition a = (alpha_1..alpha_k)
// indexes the word h_{alpha_1}...h_{alpha_k}; the empty word is the unit.
class DNSymElt {
public:
    DNSymElt() = default;
    static DNSymElt word(const Bicomposition& a) {
        DNSymElt u;
        u.add_term(a, Rat(1));
        return u;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Bicomposition, Rat>& terms() const { return terms_; }
    Rat coeff(const Bicomposition& a) const;
    void add_term(const Bicomposition& a, const Rat& c);

    DNSymElt& operator+=(const DNSymElt& o);
    bool operator==(const DNSymElt&) const = default;

    std::string str() const;  // "h[2/1]*h[0/3]"

private:
    std::map<Bicomposition, Rat> terms_;
};

// Word concatenation, extended bilinearly.  Noncommutative.
DNSymElt h_product(const DNSymElt& u, const DNSymElt& v);

// Coalgebra structure: on a generator, Delta(h_alpha) sums over vector splits
// alpha = beta + gamma with h_0 = 1; on a word, the product of the letters'
// coproducts, zero letters contracted away.
TensorElt h_coproduct(const DNSymElt& u);

// <h_a, M_b> = delta_{a,b}, extended bilinearly.
Rat pairing(const DNSymElt& u, const DQSymElt& v);

// Both adjointness identities for the index triple:
//   <h_c, M_a M_b> = <Delta h_c, M_a (x) M_b>
//   <h_a h_b, M_c> = <h_a (x) h_b, Delta M_c>
bool duality_check(const Bicomposition& a, const Bicomposition& b, const Bicomposition& c);

}  // namespace dqsym
