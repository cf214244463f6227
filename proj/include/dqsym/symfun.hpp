#pragma once

#include <map>
#include <string>
#include <vector>

#include "dqsym/bicomp.hpp"
#include "dqsym/rational.hpp"

namespace dqsym {

using Partition = std::vector<unsigned>;  // weakly decreasing positive parts

// Size first, then reverse lexicographic, so p[2] precedes p[1,1].
struct PartitionOrder {
    bool operator()(const Partition& u, const Partition& v) const {
        unsigned su = 0, sv = 0;
        for (unsigned p : u) su += p;
        for (unsigned p : v) sv += p;
        if (su != sv) return su < sv;
        return v < u;
    }
};

// z_lambda = prod_k k^{d_k} d_k!  for d_k parts of size k.
Int z_of(const Partition& l);

// Symmetric function in the power-sum basis.
class SymP {
public:
    SymP() = default;
    static SymP p(const Partition& l) {
        SymP u;
        u.add_term(l, Rat(1));
        return u;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rat, PartitionOrder>& terms() const { return terms_; }
    Rat coeff(const Partition& l) const;
    void add_term(const Partition& l, const Rat& c);

    SymP& operator+=(const SymP& o);
    SymP& operator*=(const Rat& c);
    bool operator==(const SymP&) const = default;

    std::string str() const;  // "1/2*p[2] + 1/2*p[1,1]"

private:
    std::map<Partition, Rat, PartitionOrder> terms_;
};

std::vector<Partition> partitions_of(unsigned n);

// Complete homogeneous h_k = sum over partitions of k of p_lambda / z_lambda.
SymP h_in_p(unsigned k);

// p_lambda p_mu = p_{lambda union mu}.
SymP p_mult(const SymP& u, const SymP& v);

// (1/n!) sum over the symmetric group of hivert_trace * p_{cycle type}; the
// bigraded character of the polynomial ring under the Hivert action.
SymP frobenius_from_traces(unsigned n, Bidegree d);  // guarded to n <= 5

// sum_k c_k(d) h_k h_{n-k}, c_k(d) = number of bicompositions of bidegree d
// and length k.
SymP frobenius_from_formula(unsigned n, Bidegree d);

// Character of the span of monomials with exponent exactly a; must equal
// h_{len(a)} h_{n-len(a)}.
SymP k_space_frobenius(const Bicomposition& a, unsigned n);

}  // namespace dqsym
