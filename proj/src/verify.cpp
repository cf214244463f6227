#include "dqsym/verify.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "dqsym/action.hpp"
#include "dqsym/dnsym.hpp"
#include "dqsym/dqsym.hpp"
#include "dqsym/quotient.hpp"
#include "dqsym/symfun.hpp"

namespace dqsym {

namespace {

std::vector<Bicomposition> all_up_to_total(unsigned bound) {
    std::vector<Bicomposition> all;
    for (unsigned d1 = 0; d1 <= bound; ++d1)
        for (unsigned d2 = 0; d1 + d2 <= bound; ++d2)
            for (const Bicomposition& a : enumerate_bicompositions({d1, d2}, d1 + d2))
                all.push_back(a);
    return all;
}

}  // namespace

CheckResult verify_kernel(unsigned nmax) {
    for (unsigned n = 3; n <= nmax; ++n)
        for (unsigned i = 1; i + 2 <= n; ++i)
            for (unsigned j = i + 1; j + 1 <= n; ++j)
                for (unsigned k = j + 1; k <= n; ++k) {
                    const GroupAlgebraElt e = tl_kernel_element(i, j, k, n);
                    for (unsigned d1 = 0; d1 <= 2; ++d1)
                        for (unsigned d2 = 0; d2 <= 2; ++d2)
                            for (const Monomial& m : monomial_basis(n, {d1, d2})) {
                                const Polynomial img = group_algebra_apply(
                                    e, Polynomial::monomial(n, m), ActionKind::hivert);
                                if (!img.is_zero())
                                    return {false, "n=" + std::to_string(n) + " E(" +
                                                       std::to_string(i) + "," +
                                                       std::to_string(j) + "," +
                                                       std::to_string(k) + ") * " + m.str() +
                                                       " = " + img.str()};
                            }
                }
    return {true, {}};
}

CheckResult verify_duality(unsigned bound) {
    const std::vector<Bicomposition> all = all_up_to_total(bound);
    for (const Bicomposition& a : all)
        for (const Bicomposition& b : all) {
            if (a.total_degree() + b.total_degree() > bound) continue;
            for (const Bicomposition& c : all)
                if (!duality_check(a, b, c))
                    return {false, "a=" + a.str() + " b=" + b.str() + " c=" + c.str()};
        }
    return {true, {}};
}

CheckResult verify_frobenius(unsigned nmax) {
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned d1 = 0; d1 <= 3; ++d1)
            for (unsigned d2 = 0; d2 <= 3; ++d2)
                if (frobenius_from_traces(n, {d1, d2}) != frobenius_from_formula(n, {d1, d2}))
                    return {false, "trace/formula mismatch at n=" + std::to_string(n) + " d=(" +
                                       std::to_string(d1) + "," + std::to_string(d2) + ")"};
    for (unsigned n = 1; n <= std::min(nmax, 4u); ++n)
        for (unsigned d1 = 0; d1 <= 2; ++d1)
            for (unsigned d2 = 0; d2 <= 2; ++d2)
                for (const Bicomposition& a : enumerate_bicompositions({d1, d2}, n)) {
                    const unsigned k = static_cast<unsigned>(a.length());
                    if (k_space_frobenius(a, n) != p_mult(h_in_p(k), h_in_p(n - k)))
                        return {false,
                                "K-space mismatch at n=" + std::to_string(n) + " a=" + a.str()};
                }
    return {true, {}};
}

CheckResult verify_lyndon(unsigned bound) {
    for (unsigned d1 = 0; d1 <= bound; ++d1)
        for (unsigned d2 = 0; d1 + d2 <= bound; ++d2) {
            if (d1 == 0 && d2 == 0) continue;
            if (!lyndon_freeness_check({d1, d2}))
                return {false,
                        "bidegree (" + std::to_string(d1) + "," + std::to_string(d2) + ")"};
        }
    return {true, {}};
}

CheckResult verify_basis(unsigned n) {
    if (basis_check(n)) return {true, {}};
    return {false, "conjectured basis fails modulo the ideal at n=" + std::to_string(n)};
}

CheckResult verify_hopf(unsigned bound) {
    const std::vector<Bicomposition> all = all_up_to_total(bound);
    for (const Bicomposition& a : all) {
        const DQSymElt u = DQSymElt::basis(a);
        const TensorElt del = coproduct(u);
        DQSymElt left, right;
        for (const auto& [key, c] : del.terms()) {
            if (key.first.empty()) left.add_term(key.second, c);
            if (key.second.empty()) right.add_term(key.first, c);
        }
        if (left != u || right != u) return {false, "counit law fails at " + a.str()};
        // Coassociativity: re-split either tensor factor.
        std::map<std::tuple<Bicomposition, Bicomposition, Bicomposition>, Rat> lhs, rhs;
        for (const auto& [key, c] : del.terms()) {
            for (std::size_t cut = 0; cut <= key.first.length(); ++cut)
                lhs[{key.first.prefix(cut), key.first.suffix(cut), key.second}] += c;
            for (std::size_t cut = 0; cut <= key.second.length(); ++cut)
                rhs[{key.first, key.second.prefix(cut), key.second.suffix(cut)}] += c;
        }
        if (lhs != rhs) return {false, "coassociativity fails at " + a.str()};
    }
    for (const Bicomposition& a : all)
        for (const Bicomposition& b : all) {
            if (a.total_degree() + b.total_degree() > bound) continue;
            const DQSymElt ab = m_mult(a, b);
            if (coproduct(ab) !=
                tensor_mult(coproduct(DQSymElt::basis(a)), coproduct(DQSymElt::basis(b))))
                return {false, "coproduct is not multiplicative at " + a.str() + ", " + b.str()};
            if (pi_project(ab) !=
                qsym_mult(pi_project(DQSymElt::basis(a)), pi_project(DQSymElt::basis(b))))
                return {false, "pi is not multiplicative at " + a.str() + ", " + b.str()};
        }
    return {true, {}};
}

}  // namespace dqsym
