#include <doctest.h>

#include <set>

#include "dqsym/action.hpp"
#include "dqsym/quotient.hpp"

using namespace dqsym;

namespace {

Bicomposition bc(const char* text) { return Bicomposition::parse(text); }

using Rows = std::vector<std::vector<unsigned long>>;

std::set<std::string> names(const std::vector<Monomial>& ms) {
    std::set<std::string> out;
    for (const Monomial& m : ms) out.insert(m.str());
    return out;
}

}  // namespace

TEST_CASE("display convention") {
    // 3t^2 + 2t + 3tq + 1 + 3q + 4q^2 + q^3 in cartesian matrix form.
    HilbertMatrix m;
    m.n = 0;
    m.entries[{0, 2}] = 3;
    m.entries[{0, 1}] = 2;
    m.entries[{1, 1}] = 3;
    m.entries[{0, 0}] = 1;
    m.entries[{1, 0}] = 3;
    m.entries[{2, 0}] = 4;
    m.entries[{3, 0}] = 1;
    CHECK(m.display_rows() == Rows{{3}, {2, 3}, {1, 3, 4, 1}});
}

TEST_CASE("ideal components and ranks") {
    CHECK(exact_rank({}, 2, {1, 0}) == 0);
    const std::vector<Polynomial> v{Polynomial::x(2, 1), Polynomial::x(2, 2),
                                    Polynomial::x(2, 1) + Polynomial::x(2, 2)};
    CHECK(exact_rank(v, 2, {1, 0}) == 2);
    CHECK(exact_rank({m_expand(bc("1/1"), 3), m_expand(bc("1,0/0,1"), 3),
                      m_expand(bc("0,1/1,0"), 3)},
                     3, {1, 1}) == 3);
    CHECK_THROWS_AS(exact_rank({Polynomial::x(2, 1)}, 2, {0, 1}), std::invalid_argument);

    // Component below every generator bidegree is empty.
    CHECK(ideal_component({m_expand(bc("1/1"), 2)}, 2, {1, 0}).empty());
    // n = 1: the (1,0) component of the full ideal is spanned by x1.
    const auto span1 = ideal_component({m_expand(bc("1/0"), 1)}, 1, {1, 0});
    CHECK(span1.size() == 1);
    CHECK(span1[0] == Polynomial::x(1, 1));
    CHECK_THROWS_AS(ideal_component({Polynomial::x(2, 1) + Polynomial::constant(2, Rat(1))},
                                    2, {1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ideal_component({Polynomial::x(2, 1) + Polynomial::y(2, 1)}, 2, {1, 0}),
        std::invalid_argument);

    // Restricted to the three bidegree-(1,1) generators the rank is 3; the
    // full ideal component reaches rank 4, as the n = 2 Hilbert matrix needs.
    const std::vector<Polynomial> gens_11{m_expand(bc("1/1"), 2), m_expand(bc("1,0/0,1"), 2),
                                          m_expand(bc("0,1/1,0"), 2)};
    CHECK(exact_rank(ideal_component(gens_11, 2, {1, 1}), 2, {1, 1}) == 3);
    CHECK(dq_dimension(2, {1, 1}) == 0);
}

TEST_CASE("hilbert matrices of the diagonal quotient") {
    CHECK(hilbert_dq(1).display_rows() == Rows{{1}});
    CHECK(hilbert_dq(2).display_rows() == Rows{{1}, {1, 1}});
    CHECK(hilbert_dq(3).display_rows() == Rows{{2}, {2, 2}, {1, 2, 2}});
    const HilbertMatrix m4 = hilbert_dq(4);
    CHECK(m4.display_rows() == Rows{{5}, {5, 5}, {3, 7, 5}, {1, 3, 5, 5}});
    // The vanishing band is computed, not assumed.
    for (unsigned a = 0; a <= 4; ++a) {
        CHECK(m4.computed({a, 4 - a}));
        CHECK(m4.value_or_zero({a, 4 - a}) == 0);
    }
    // (q,t) symmetry.
    for (const auto& [d, v] : m4.entries)
        CHECK(v == m4.value_or_zero({d.second, d.first}));
}

TEST_CASE("predicted matrices and the recursion") {
    CHECK(predicted_dq(1).display_rows() == Rows{{1}});
    const HilbertMatrix p5 = predicted_dq(5);
    for (unsigned a = 0; a <= 4; ++a) CHECK(p5.value_or_zero({a, 4 - a}) == 14);
    CHECK(p5.value_or_zero({2, 1}) == 24);  // (1+3+5)+(3+7+5) from the n=4 table
    CHECK(p5.display_rows() ==
          Rows{{14}, {14, 14}, {9, 24, 14}, {4, 14, 24, 14}, {1, 4, 9, 14, 14}});
    for (unsigned n = 1; n <= 4; ++n) CHECK(same_dimensions(predicted_dq(n), hilbert_dq(n)));
}

TEST_CASE("harmonics") {
    const auto h00 = harmonics_basis(2, {0, 0});
    CHECK(h00.size() == 1);
    CHECK(h00[0] == Polynomial::constant(2, Rat(1)));

    const auto h10 = harmonics_basis(2, {1, 0});
    CHECK(h10.size() == 1);
    // Spanned by x1 - x2 up to scale.
    const Polynomial diff = Polynomial::x(2, 1) - Polynomial::x(2, 2);
    CHECK((h10[0] == diff || h10[0] == diff * Rat(-1)));
    CHECK(scalar_product(h10[0], m_expand(bc("1/0"), 2)) == Rat(0));

    const HilbertMatrix m3 = hilbert_dq(3);
    for (unsigned d1 = 0; d1 <= 2; ++d1)
        for (unsigned d2 = 0; d1 + d2 <= 2; ++d2)
            CHECK(harmonics_basis(3, {d1, d2}).size() == m3.value_or_zero({d1, d2}));
    // Harmonics are killed by every invariant generator acting as an operator.
    for (const Polynomial& h : harmonics_basis(3, {2, 1}))
        for (const char* g : {"1/0", "0/1", "2/0", "1/1", "2/1", "1,0/0,1", "0,1/1,0"})
            CHECK(apply_diff(m_expand(bc(g), 3), h).is_zero());
}

TEST_CASE("conjectured bases match the displayed ones") {
    const auto b1 = conjectured_basis(1);
    CHECK(b1.size() == 1);
    CHECK(names(b1.at({0, 0})) == std::set<std::string>{"1"});

    const auto b2 = conjectured_basis(2);
    CHECK(names(b2.at({0, 0})) == std::set<std::string>{"1"});
    CHECK(names(b2.at({1, 0})) == std::set<std::string>{"x2"});
    CHECK(names(b2.at({0, 1})) == std::set<std::string>{"y2"});
    CHECK(b2.size() == 3);

    const auto b3 = conjectured_basis(3);
    CHECK(names(b3.at({0, 0})) == std::set<std::string>{"1"});
    CHECK(names(b3.at({1, 0})) == std::set<std::string>{"x3", "x2"});
    CHECK(names(b3.at({0, 1})) == std::set<std::string>{"y3", "y2"});
    CHECK(names(b3.at({2, 0})) == std::set<std::string>{"x3^2", "x2*x3"});
    CHECK(names(b3.at({1, 1})) == std::set<std::string>{"x3*y3", "y2*x3"});
    CHECK(names(b3.at({0, 2})) == std::set<std::string>{"y3^2", "y2*y3"});
    CHECK(b3.size() == 6);

    // Bidegree cardinalities agree with the predicted table at n = 4.
    const auto b4 = conjectured_basis(4);
    const HilbertMatrix p4 = predicted_dq(4);
    unsigned long total = 0;
    for (const auto& [d, monos] : b4) {
        CHECK(monos.size() == p4.value_or_zero(d));
        total += monos.size();
    }
    unsigned long expected = 0;
    for (const auto& [d, v] : p4.entries) expected += v;
    CHECK(total == expected);
}

TEST_CASE("basis check") {
    CHECK(basis_check(1));
    CHECK(basis_check(2));
    CHECK(basis_check(3));
}

TEST_CASE("univariate hilbert series of Q_n") {
    CHECK(hilbert_q(1).str() == "1");
    CHECK(hilbert_q(4).str() == "1 + 3*q + 5*q^2 + 5*q^3");
    CHECK(hilbert_q(5).str() == "1 + 4*q + 9*q^2 + 14*q^3 + 14*q^4");
    // First column and bottom row of the diagonal table.
    for (unsigned n = 1; n <= 4; ++n) {
        const HilbertMatrix m = hilbert_dq(n);
        const UnivariateSeries h = hilbert_q(n);
        for (unsigned k = 0; k + 1 <= n; ++k) {
            CHECK(Rat(m.value_or_zero({k, 0})) == h.coeff(k));
            CHECK(Rat(m.value_or_zero({0, k})) == h.coeff(k));
        }
    }
}

TEST_CASE("diagonally symmetric generators") {
    const auto gens = dsym_generators(2, 2);
    CHECK(gens.size() == 5);  // (1,0),(0,1),(2,0),(1,1),(0,2)
    CHECK(gens[1] == Polynomial::x(2, 1) + Polynomial::x(2, 2));
    bool found = false;
    for (const Polynomial& g : gens)
        if (g == m_expand(bc("1/1"), 2)) found = true;
    CHECK(found);
    for (const Polynomial& g : gens)
        for (const Permutation& s : all_permutations(2)) CHECK(natural_action(s, g) == g);
}

TEST_CASE("hilbert matrices of the invariant quotient") {
    CHECK(hilbert_r_diag(1, {1, 1}).display_rows() == Rows{{1}});
    for (const auto& [d, v] : hilbert_r_diag(1, {2, 2}).entries)
        if (d != Bidegree{0, 0}) CHECK(v == 0);

    const HilbertMatrix r2 = hilbert_r_diag(2, {4, 4}, 4);
    CHECK(r2.display_rows() == Rows{{1}, {0, 1}, {0, 1, 1}, {1, 0, 0, 1}});
    for (const auto& [d, v] : r2.entries) {
        if (d.first + d.second == 4) CHECK(v == 0);  // one band above the display
        CHECK(v == r2.value_or_zero({d.second, d.first}));
    }

    const HilbertMatrix r3 = hilbert_r_diag(3, {6, 6}, 6);
    CHECK(r3.display_rows() == Rows{{2},
                                    {2, 2},
                                    {1, 4, 2},
                                    {0, 3, 4, 2},
                                    {0, 1, 3, 4, 2},
                                    {1, 0, 0, 1, 2, 2}});
    for (const auto& [d, v] : r3.entries) {
        if (d.first + d.second == 6) CHECK(v == 0);
        CHECK(v == r3.value_or_zero({d.second, d.first}));
    }

    // Bottom row of the table is the univariate series.
    for (unsigned n = 1; n <= 3; ++n) {
        const UnivariateSeries p = psi(n);
        const HilbertMatrix r = hilbert_r_diag(n, {p.degree() + 1, p.degree() + 1},
                                               p.degree() + 1);
        for (unsigned k = 0; k <= p.degree(); ++k)
            CHECK(Rat(r.value_or_zero({k, 0})) == p.coeff(k));
    }

    // Raising the generator degree bound beyond Weyl's bound changes nothing.
    CHECK(same_dimensions(hilbert_r_diag(2, {3, 3}, 3, 2), hilbert_r_diag(2, {3, 3}, 3, 4)));
}

TEST_CASE("psi recurrence") {
    CHECK(psi(0).str() == "1");
    CHECK(psi(1).str() == "1");
    CHECK(psi(2).str() == "1 + q^3");
    CHECK(psi(3).str() == "1 + q^3 + 2*q^4 + 2*q^5");
    CHECK(psi(4).coeff(0) == Rat(1));
    // Total dimension is n!.
    for (unsigned n = 1; n <= 5; ++n) {
        Rat total(0);
        for (unsigned k = 0; k <= psi(n).degree(); ++k) total += psi(n).coeff(k);
        CHECK(total == Rat(factorial(n)));
    }
}

TEST_CASE("closed form agrees with the recurrence") {
    CHECK(hilbert_r_closed_form(0, 8).str() == "1 + O(q^9)");
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(agree_up_to(hilbert_r_closed_form(n, 12), psi(n), 12));
}

TEST_CASE("plethystic guess reproduces the displayed expansion") {
    const BivariateSeries g = plethystic_guess(2, {4, 4});
    CHECK(g.coeff(0, 0) == Rat(1));
    CHECK(g.coeff(1, 1) == Rat(1));
    CHECK(g.coeff(3, 0) == Rat(1));
    CHECK(g.coeff(2, 1) == Rat(1));
    CHECK(g.coeff(1, 2) == Rat(1));
    CHECK(g.coeff(0, 3) == Rat(1));
    CHECK(g.coeff(3, 1) == Rat(-1));
    CHECK(g.coeff(2, 2) == Rat(-1));
    CHECK(g.coeff(1, 3) == Rat(-1));
    // All other coefficients up to total degree 4 vanish.
    const std::set<Bidegree> nonzero{{0, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2},
                                     {0, 3}, {3, 1}, {2, 2}, {1, 3}};
    for (unsigned i = 0; i <= 4; ++i)
        for (unsigned j = 0; i + j <= 4; ++j)
            if (!nonzero.count({i, j})) CHECK(g.coeff(i, j) == Rat(0));

    for (unsigned n = 1; n <= 3; ++n) CHECK(plethystic_guess(n, {2, 2}).coeff(0, 0) == Rat(1));
}

TEST_CASE("the guess disagrees with the computed dimensions") {
    // Non-freeness witness: the would-be series is negative at (3,1) while the
    // true dimension there is a nonnegative integer.
    const BivariateSeries g = plethystic_guess(2, {3, 1});
    const HilbertMatrix r2 = hilbert_r_diag(2, {3, 1});
    CHECK(g.coeff(3, 1) == Rat(-1));
    CHECK(r2.value_or_zero({3, 1}) == 0);
    CHECK(Rat(r2.value_or_zero({3, 1})) != g.coeff(3, 1));
}

TEST_CASE("univariate quotient dimensions match psi") {
    CHECK(hilbert_r_univariate(1) == psi(1));
    CHECK(hilbert_r_univariate(2) == psi(2));
    CHECK(hilbert_r_univariate(3) == psi(3));
}
