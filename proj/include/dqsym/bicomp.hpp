#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqsym {

// (x-degree, y-degree) pair. Columns of a bicomposition are nonzero bivectors.
struct Bivector {
    unsigned a = 0;  // top row
    unsigned b = 0;  // bottom row

    bool is_zero() const { return a == 0 && b == 0; }
    Bivector operator+(const Bivector& o) const { return {a + o.a, b + o.b}; }
    // Biletter order: top entry first, bottom entry as tie-break.
    auto operator<=>(const Bivector&) const = default;
};

using Bidegree = std::pair<unsigned, unsigned>;

inline Bidegree operator+(const Bidegree& u, const Bidegree& v) {
    return {u.first + v.first, u.second + v.second};
}

using Composition = std::vector<unsigned>;

// A bicomposition is a finite sequence of nonzero bivectors.  It indexes the
// bimonomial basis of DQSym, the word basis of DNSym, and monomial exponents.
class Bicomposition {
public:
    Bicomposition() = default;
    explicit Bicomposition(std::vector<Bivector> parts);  // rejects zero columns

    // Text form "2,0/1,3" (top row / bottom row); "-" is the empty bicomposition.
    static Bicomposition parse(std::string_view text);

    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    const std::vector<Bivector>& parts() const { return parts_; }
    const Bivector& part(std::size_t i) const { return parts_[i]; }

    Bidegree bidegree() const;
    unsigned total_degree() const;
    Composition collapse() const;  // columnwise sums a_i + b_i

    Bicomposition prefix(std::size_t k) const;
    Bicomposition suffix(std::size_t k) const;  // parts k, k+1, ...

    std::string str() const;

    // Container order: length first, then partwise biletter order.  Word-lex
    // order (for Lyndon theory) is the free function lex_less below.
    bool operator==(const Bicomposition&) const = default;
    bool operator<(const Bicomposition& o) const {
        if (parts_.size() != o.parts_.size()) return parts_.size() < o.parts_.size();
        return parts_ < o.parts_;
    }

private:
    std::vector<Bivector> parts_;
};

// Lexicographic order on words over the biletter alphabet (prefix is smaller).
bool lex_less(const Bicomposition& a, const Bicomposition& b);

// Length k+l-1 merge: boundary parts are vector-summed.  Rejects empty operands.
Bicomposition merged_sum(const Bicomposition& a, const Bicomposition& b);

// Plain juxtaposition, length k+l.
Bicomposition concat(const Bicomposition& a, const Bicomposition& b);

// Quasi-shuffle: interleavings of the two part sequences in which adjacent
// parts coming from different operands may be vector-summed.  The counted
// variant records in how many ways each outcome arises; those counts are the
// structure constants of the bimonomial product.
std::map<Bicomposition, unsigned long> quasi_shuffle_counted(const Bicomposition& a,
                                                             const Bicomposition& b);
std::vector<Bicomposition> quasi_shuffle(const Bicomposition& a, const Bicomposition& b);

// All bicompositions obtained by splitting each part of b into an ordered
// sequence of nonzero bivectors with that part as vector sum.  Contains b.
std::vector<Bicomposition> refinements(const Bicomposition& b);

// True iff a is obtained from b by grouping consecutive parts and summing each
// group; the refinement order used by the fundamental basis.
bool order_leq(const Bicomposition& a, const Bicomposition& b);

// Lyndon test: nonempty and strictly lex-smaller than every proper rotation.
bool is_lyndon(const Bicomposition& a);

// All Lyndon bicompositions of bidegree componentwise <= maxbd, sorted by
// (total degree, bidegree, length, parts).
std::vector<Bicomposition> lyndon_list(Bidegree maxbd);

// Moves one unit from top to bottom row at the first column with positive top
// entry.  Rejects input whose top row vanishes.
Bicomposition shift_x_to_y(const Bicomposition& a);

// All bicompositions of the exact bidegree with length <= maxlen, sorted.
std::vector<Bicomposition> enumerate_bicompositions(Bidegree d, std::size_t maxlen);

}  // namespace dqsym
