#include <doctest.h>

#include <algorithm>
#include <set>

#include "dqsym/bicomp.hpp"
#include "dqsym/series.hpp"

using namespace dqsym;

namespace {

Bicomposition bc(const char* text) { return Bicomposition::parse(text); }

std::vector<Bicomposition> all_of_total(unsigned total) {
    std::vector<Bicomposition> all;
    for (unsigned d1 = 0; d1 <= total; ++d1)
        for (const Bicomposition& a : enumerate_bicompositions({d1, total - d1}, total))
            all.push_back(a);
    return all;
}

// Oracle for the refinement order: closure of single adjacent merges.
std::set<Bicomposition> merge_closure(const Bicomposition& b) {
    std::set<Bicomposition> seen{b};
    std::vector<Bicomposition> frontier{b};
    while (!frontier.empty()) {
        const Bicomposition cur = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i + 1 < cur.length(); ++i) {
            std::vector<Bivector> parts(cur.parts());
            parts[i] = parts[i] + parts[i + 1];
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            Bicomposition merged(std::move(parts));
            if (seen.insert(merged).second) frontier.push_back(merged);
        }
    }
    return seen;
}

// Oracle for the Lyndon test: compare against every rotation built explicitly.
bool lyndon_by_rotations(const Bicomposition& w) {
    const auto& p = w.parts();
    for (std::size_t r = 1; r < p.size(); ++r) {
        std::vector<Bivector> rot;
        rot.insert(rot.end(), p.begin() + static_cast<std::ptrdiff_t>(r), p.end());
        rot.insert(rot.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(r));
        if (!(p < rot)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse and render") {
    CHECK(bc("2,0/1,3").str() == "2,0/1,3");
    CHECK(bc("-").empty());
    CHECK(bc("-").str() == "-");
    CHECK_THROWS_AS(bc("1,0/1"), std::invalid_argument);   // unequal rows
    CHECK_THROWS_AS(bc("1,0/1,0,2"), std::invalid_argument);
    CHECK_THROWS_AS(bc("0/0"), std::invalid_argument);     // zero column
    CHECK_THROWS_AS(bc("1,0/0,0"), std::invalid_argument);
    CHECK_THROWS_AS(bc("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(bc(""), std::invalid_argument);
    CHECK_THROWS_AS(bc("1,2"), std::invalid_argument);
}

TEST_CASE("bidegree and collapse") {
    CHECK(bc("2,0/1,3").bidegree() == Bidegree{2, 4});
    CHECK(Bicomposition{}.bidegree() == Bidegree{0, 0});
    CHECK(bc("0,2/1,0").bidegree() == Bidegree{2, 1});

    CHECK(bc("2,0/1,3").collapse() == Composition{3, 3});
    CHECK(Bicomposition{}.collapse().empty());
    CHECK(bc("1,1,0/1,0,1").collapse() == Composition{2, 1, 1});
}

TEST_CASE("merged sum and concatenation") {
    CHECK(merged_sum(bc("2/1"), bc("0,2/1,0")) == bc("2,2/2,0"));
    CHECK(merged_sum(bc("1/1"), bc("1,0/0,1")) == bc("2,0/1,1"));
    CHECK(merged_sum(bc("1/0"), bc("0/1")) == bc("1/1"));
    CHECK_THROWS_AS(merged_sum(bc("-"), bc("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(merged_sum(bc("1/0"), bc("-")), std::invalid_argument);

    CHECK(concat(bc("2/1"), bc("0,2/1,0")) == bc("2,0,2/1,1,0"));
    CHECK(concat(bc("-"), bc("2/1")) == bc("2/1"));
    CHECK(concat(concat(bc("1/1"), bc("1/0")), bc("0/1")) == bc("1,1,0/1,0,1"));
}

TEST_CASE("collapse commutes with concatenation") {
    const Bicomposition a = bc("2,0/1,3"), b = bc("0,2/1,0");
    Composition joined = a.collapse();
    const Composition cb = b.collapse();
    joined.insert(joined.end(), cb.begin(), cb.end());
    CHECK(concat(a, b).collapse() == joined);
}

TEST_CASE("quasi-shuffle of the worked example") {
    const std::vector<Bicomposition> got = quasi_shuffle(bc("2,0/1,3"), bc("0,2/1,0"));
    const std::set<Bicomposition> expected{
        bc("2,0,0,2/1,3,1,0"), bc("2,0,2/1,4,0"),     bc("2,0,0,2/1,1,3,0"),
        bc("2,0,2/2,3,0"),     bc("2,0,2/1,1,3"),     bc("2,2/2,3"),
        bc("2,0,2,0/1,1,0,3"), bc("2,2,0/2,0,3"),     bc("0,2,0,2/1,1,3,0"),
        bc("0,2,2/1,1,3"),     bc("0,2,2,0/1,1,0,3"), bc("0,4,0/1,1,3"),
        bc("0,2,2,0/1,0,1,3")};
    CHECK(std::set<Bicomposition>(got.begin(), got.end()) == expected);
    CHECK(got.size() == 13);
}

TEST_CASE("quasi-shuffle base cases and small instances") {
    CHECK(quasi_shuffle(bc("-"), bc("2/1")) == std::vector<Bicomposition>{bc("2/1")});
    CHECK(quasi_shuffle(bc("2/1"), bc("-")) == std::vector<Bicomposition>{bc("2/1")});
    // Unrolled by hand: place, swap, or merge the two single parts.
    const auto got = quasi_shuffle(bc("1/0"), bc("0/1"));
    CHECK(std::set<Bicomposition>(got.begin(), got.end()) ==
          std::set<Bicomposition>{bc("1,0/0,1"), bc("0,1/1,0"), bc("1/1")});
}

TEST_CASE("quasi-shuffle multiplicities count the interleavings") {
    const auto counted = quasi_shuffle_counted(bc("1/0"), bc("1/0"));
    CHECK(counted.size() == 2);
    CHECK(counted.at(bc("1,1/0,0")) == 2);  // the two interleavings coincide
    CHECK(counted.at(bc("2/0")) == 1);
}

TEST_CASE("quasi-shuffle invariants, exhaustive on small bidegrees") {
    std::vector<Bicomposition> all;
    for (unsigned t = 0; t <= 4; ++t)
        for (const Bicomposition& a : all_of_total(t)) all.push_back(a);
    for (const Bicomposition& a : all)
        for (const Bicomposition& b : all) {
            if (a.total_degree() + b.total_degree() > 4) continue;
            const auto ab = quasi_shuffle_counted(a, b);
            CHECK(ab == quasi_shuffle_counted(b, a));
            const Bidegree want = a.bidegree() + b.bidegree();
            for (const auto& [c, ways] : ab) {
                CHECK(c.bidegree() == want);
                CHECK(c.length() >= std::max(a.length(), b.length()));
                CHECK(c.length() <= a.length() + b.length());
                CHECK(ways >= 1);
            }
        }
}

TEST_CASE("refinements") {
    // The eight bicompositions under the fundamental element of the text.
    const std::set<Bicomposition> expected{
        bc("2,0/1,1"),         bc("1,1,0/1,0,1"),     bc("1,1,0/0,1,1"),
        bc("2,0,0/0,1,1"),     bc("0,2,0/1,0,1"),     bc("1,1,0,0/0,0,1,1"),
        bc("1,0,1,0/0,1,0,1"), bc("0,1,1,0/1,0,0,1")};
    const auto got = refinements(bc("2,0/1,1"));
    CHECK(std::set<Bicomposition>(got.begin(), got.end()) == expected);

    CHECK(refinements(bc("1/0")) == std::vector<Bicomposition>{bc("1/0")});
    const auto two = refinements(bc("2/0"));
    CHECK(std::set<Bicomposition>(two.begin(), two.end()) ==
          std::set<Bicomposition>{bc("2/0"), bc("1,1/0,0")});
}

TEST_CASE("refinement order") {
    CHECK(order_leq(bc("2,0/1,1"), bc("1,1,0/1,0,1")));
    CHECK(order_leq(bc("2/1"), bc("2/1")));
    CHECK(order_leq(bc("-"), bc("-")));
    CHECK(order_leq(bc("1/1"), bc("1,0/0,1")));
    CHECK_FALSE(order_leq(bc("1/1"), bc("2/0")));
}

TEST_CASE("order characterizations agree, exhaustive") {
    for (unsigned t = 0; t <= 4; ++t) {
        const auto all = all_of_total(t);
        for (const Bicomposition& b : all) {
            const auto coarser = merge_closure(b);
            const auto refs = refinements(b);
            CHECK(std::count(refs.begin(), refs.end(), b) == 1);
            for (const Bicomposition& a : all) {
                const bool leq = order_leq(a, b);
                CHECK(leq == (coarser.count(a) == 1));
                const auto refs_a = refinements(a);
                CHECK(leq == (std::count(refs_a.begin(), refs_a.end(), b) == 1));
            }
        }
    }
}

TEST_CASE("lyndon test") {
    CHECK(is_lyndon(bc("2/1")));
    CHECK_FALSE(is_lyndon(bc("1,1/0,0")));   // equal rotation
    CHECK(is_lyndon(bc("1,2/0,0")));
    CHECK_FALSE(is_lyndon(bc("2,1/0,0")));
    CHECK_THROWS_AS(is_lyndon(bc("-")), std::invalid_argument);
}

TEST_CASE("lyndon lists agree with the rotation oracle") {
    // maxbidegree (1,0)
    CHECK(lyndon_list({1, 0}) == std::vector<Bicomposition>{bc("1/0")});
    // maxbidegree (1,1): frozen from the oracle below.
    const auto got = lyndon_list({1, 1});
    CHECK(std::set<Bicomposition>(got.begin(), got.end()) ==
          std::set<Bicomposition>{bc("1/0"), bc("0/1"), bc("1/1"), bc("0,1/1,0")});
    for (unsigned d1 = 0; d1 <= 3; ++d1)
        for (unsigned d2 = 0; d1 + d2 <= 3; ++d2) {
            if (d1 + d2 == 0) continue;
            unsigned oracle = 0;
            for (const Bicomposition& w : enumerate_bicompositions({d1, d2}, d1 + d2))
                if (lyndon_by_rotations(w)) ++oracle;
            const auto list = lyndon_list({d1, d2});
            unsigned exact = 0;
            for (const Bicomposition& w : list)
                if (w.bidegree() == Bidegree{d1, d2}) ++exact;
            CHECK(exact == oracle);
        }
    // Count at bidegree exactly (2,1), frozen from the oracle: 4.
    unsigned count = 0;
    for (const Bicomposition& w : enumerate_bicompositions({2, 1}, 3))
        if (is_lyndon(w)) ++count;
    CHECK(count == 4);
}

TEST_CASE("every word factors uniquely into decreasing lyndon blocks") {
    for (unsigned t = 1; t <= 3; ++t)
        for (const Bicomposition& w : all_of_total(t)) {
            // Brute force over all cut patterns.
            const std::size_t k = w.length();
            unsigned good = 0;
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<Bicomposition> blocks;
                std::size_t start = 0;
                for (std::size_t i = 0; i + 1 < k; ++i)
                    if (mask & (1u << i)) {
                        blocks.push_back(
                            Bicomposition(std::vector<Bivector>(w.parts().begin() + start,
                                                                w.parts().begin() + i + 1)));
                        start = i + 1;
                    }
                blocks.push_back(Bicomposition(
                    std::vector<Bivector>(w.parts().begin() + start, w.parts().end())));
                bool ok = true;
                for (const Bicomposition& blk : blocks)
                    if (!lyndon_by_rotations(blk)) ok = false;
                for (std::size_t i = 0; ok && i + 1 < blocks.size(); ++i)
                    if (lex_less(blocks[i], blocks[i + 1])) ok = false;  // must not increase
                if (ok) ++good;
            }
            CHECK(good == 1);
        }
}

TEST_CASE("x to y shift") {
    CHECK(shift_x_to_y(bc("2/0")) == bc("1/1"));
    CHECK(shift_x_to_y(bc("1,1/0,0")) == bc("0,1/1,0"));
    CHECK(shift_x_to_y(bc("0,1/1,0")) == bc("0,0/1,1"));
    CHECK_THROWS_AS(shift_x_to_y(bc("0,0/1,1")), std::invalid_argument);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_bicompositions({1, 0}, 4) == std::vector<Bicomposition>{bc("1/0")});
    const auto got = enumerate_bicompositions({1, 1}, 2);
    CHECK(std::set<Bicomposition>(got.begin(), got.end()) ==
          std::set<Bicomposition>{bc("1/1"), bc("1,0/0,1"), bc("0,1/1,0")});
    CHECK(enumerate_bicompositions({0, 0}, 3) == std::vector<Bicomposition>{Bicomposition{}});
    CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("bicomposition counts match the generating series") {
    // Number of bicompositions of bidegree (d1,d2) = coefficient in
    // sum_k ((q+t-qt)/((1-q)(1-t)))^k.
    const unsigned T = 4;
    BivariateSeries letters = BivariateSeries::geometric_pair(1, T, T);
    letters.at(0, 0) -= 1;
    BivariateSeries acc = BivariateSeries::one(T, T);
    BivariateSeries power = BivariateSeries::one(T, T);
    for (unsigned k = 1; k <= 2 * T; ++k) {  // lengths beyond 2T cannot reach the box
        power = power * letters;
        acc += power;
    }
    for (unsigned d1 = 0; d1 <= T; ++d1)
        for (unsigned d2 = 0; d2 <= T; ++d2) {
            const auto count = enumerate_bicompositions({d1, d2}, d1 + d2).size();
            CHECK(Rat(static_cast<unsigned long>(count)) == acc.coeff(d1, d2));
        }
}
