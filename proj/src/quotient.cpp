#include "dqsym/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "dqsym/linalg.hpp"
#include "dqsym/symfun.hpp"

namespace dqsym {

namespace {

unsigned thread_budget() {
    if (const char* env = std::getenv("DQSYM_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Deterministic parallel map: task i writes only slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
    const unsigned threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) task(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<Bidegree> band_bidegrees(unsigned total) {
    std::vector<Bidegree> out;
    for (unsigned a = 0; a <= total; ++a) out.push_back({a, total - a});
    return out;
}

SparseRow polynomial_row(const Polynomial& p, const std::map<Monomial, std::size_t>& col) {
    // Clear denominators, then strip the content.
    Int lcm(1);
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    SparseRow row;
    row.entries.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms())
        row.entries.emplace_back(col.at(m), Int(c.get_num()) * (lcm / Int(c.get_den())));
    std::sort(row.entries.begin(), row.entries.end());
    normalize_content(row);
    return row;
}

// All bimonomial generators M_a with 0 < bidegree(a) <= cap componentwise that
// survive at n variables.
std::vector<Polynomial> m_basis_generators(unsigned n, Bidegree cap) {
    std::vector<Polynomial> gens;
    for (unsigned a = 0; a <= cap.first; ++a)
        for (unsigned b = 0; b <= cap.second; ++b) {
            if (a == 0 && b == 0) continue;
            for (const Bicomposition& e : enumerate_bicompositions({a, b}, n))
                gens.push_back(m_expand(e, n));
        }
    return gens;
}

Bidegree poly_bidegree(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no bidegree");
    Bidegree d = p.terms().begin()->first.bidegree();
    for (const auto& [m, c] : p.terms())
        if (m.bidegree() != d) throw std::invalid_argument("polynomial is not bihomogeneous");
    return d;
}

}  // namespace

unsigned long HilbertMatrix::value_or_zero(Bidegree d) const {
    auto it = entries.find(d);
    return it == entries.end() ? 0ul : it->second;
}

std::vector<std::vector<unsigned long>> HilbertMatrix::display_rows() const {
    unsigned tmax = 0, overall_nonzero = 0;
    for (const auto& [d, v] : entries)
        if (v != 0) {
            tmax = std::max(tmax, d.second);
            ++overall_nonzero;
        }
    if (overall_nonzero == 0) return {{0}};
    std::vector<std::vector<unsigned long>> rows;
    for (unsigned t = tmax + 1; t-- > 0;) {
        unsigned qlast = 0;
        for (const auto& [d, v] : entries)
            if (d.second == t && v != 0) qlast = std::max(qlast, d.first);
        std::vector<unsigned long> row;
        for (unsigned q = 0; q <= qlast; ++q) row.push_back(value_or_zero({q, t}));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string HilbertMatrix::str() const {
    std::string out;
    for (const auto& row : display_rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

bool same_dimensions(const HilbertMatrix& u, const HilbertMatrix& v) {
    for (const auto& [d, val] : u.entries)
        if (val != v.value_or_zero(d)) return false;
    for (const auto& [d, val] : v.entries)
        if (val != u.value_or_zero(d)) return false;
    return true;
}

std::vector<Polynomial> ideal_component(const std::vector<Polynomial>& gens, unsigned n,
                                        Bidegree d) {
    std::vector<Polynomial> span;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        const Bidegree e = poly_bidegree(g);
        if (e.first == 0 && e.second == 0)
            throw std::invalid_argument("ideal generator has a constant term");
        if (e.first > d.first || e.second > d.second) continue;
        for (const Monomial& m : monomial_basis(n, {d.first - e.first, d.second - e.second}))
            span.push_back(poly_mul(Polynomial::monomial(n, m), g));
    }
    return span;
}

std::size_t exact_rank(const std::vector<Polynomial>& vectors, unsigned n, Bidegree d) {
    const std::vector<Monomial> basis = monomial_basis(n, d);
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    RankAccumulator acc;
    for (const Polynomial& p : vectors) {
        if (p.is_zero()) continue;
        if (poly_bidegree(p) != d) throw std::invalid_argument("vector bidegree mismatch");
        acc.add_row(polynomial_row(p, col));
    }
    return acc.rank();
}

unsigned long dq_dimension(unsigned n, Bidegree d) {
    const std::size_t ambient = monomial_basis(n, d).size();
    const std::vector<Polynomial> gens = m_basis_generators(n, d);
    return static_cast<unsigned long>(ambient - exact_rank(ideal_component(gens, n, d), n, d));
}

HilbertMatrix hilbert_dq(unsigned n, bool include_vanishing_band) {
    if (n < 1) throw std::invalid_argument("hilbert_dq requires n >= 1");
    std::vector<Bidegree> cells;
    const unsigned top = include_vanishing_band ? n : n - 1;
    for (unsigned s = 0; s <= top; ++s)
        for (const Bidegree& d : band_bidegrees(s)) cells.push_back(d);
    std::vector<unsigned long> dims(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { dims[i] = dq_dimension(n, cells[i]); });
    HilbertMatrix m;
    m.n = n;
    for (std::size_t i = 0; i < cells.size(); ++i) m.entries[cells[i]] = dims[i];
    return m;
}

HilbertMatrix predicted_dq(unsigned n) {
    if (n < 1) throw std::invalid_argument("predicted_dq requires n >= 1");
    HilbertMatrix prev;
    for (unsigned k = 1; k <= n; ++k) {
        HilbertMatrix cur;
        cur.n = k;
        const unsigned long diag = catalan(k - 1).get_ui();
        for (unsigned s = 0; s + 1 <= k; ++s)
            for (const Bidegree& d : band_bidegrees(s)) {
                if (s == k - 1) {
                    cur.entries[d] = diag;
                } else {
                    unsigned long acc = 0;
                    for (unsigned a = 0; a <= d.first; ++a)
                        for (unsigned b = 0; b <= d.second; ++b)
                            acc += prev.value_or_zero({a, b});
                    cur.entries[d] = acc;
                }
            }
        prev = std::move(cur);
    }
    return prev;
}

std::vector<Polynomial> harmonics_basis(unsigned n, Bidegree d) {
    const std::vector<Monomial> basis = monomial_basis(n, d);
    const std::vector<Polynomial> span =
        ideal_component(m_basis_generators(n, d), n, d);
    // <v, h> = sum_m v_m h_m <m,m>, so h lies in the null space of the
    // weighted coefficient matrix.
    std::vector<Rat> weight;
    weight.reserve(basis.size());
    for (const Monomial& m : basis) {
        Int w(1);
        for (const Bivector& e : m.exponent.parts()) w *= factorial(e.a) * factorial(e.b);
        weight.emplace_back(w);
    }
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    std::vector<std::vector<Rat>> mat;
    mat.reserve(span.size());
    for (const Polynomial& p : span) {
        std::vector<Rat> row(basis.size(), Rat(0));
        for (const auto& [m, c] : p.terms()) row[col.at(m)] = c * weight[col.at(m)];
        mat.push_back(std::move(row));
    }
    std::vector<Polynomial> out;
    for (const auto& v : nullspace(std::move(mat), basis.size())) {
        Int lcm(1), content(0);
        for (const Rat& c : v)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Int> scaled(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            scaled[i] = Int(v[i].get_num()) * (lcm / Int(v[i].get_den()));
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[i].get_mpz_t());
        }
        Polynomial h(n);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (scaled[i] != 0) h.add_term(basis[i], Rat(scaled[i] / content));
        out.push_back(std::move(h));
    }
    return out;
}

std::map<Bidegree, std::vector<Monomial>> conjectured_basis(unsigned n) {
    if (n < 1) throw std::invalid_argument("conjectured_basis requires n >= 1");
    std::map<Bidegree, std::vector<Monomial>> prev{{{0, 0}, {Monomial::one()}}};
    for (unsigned k = 2; k <= n; ++k) {
        std::map<Bidegree, std::vector<Monomial>> cur;
        auto build_rec = [&](unsigned i, unsigned j) {
            std::vector<Monomial> cell;
            for (unsigned a = 0; a <= i; ++a)
                for (unsigned b = 0; b <= j; ++b) {
                    auto it = prev.find({a, b});
                    if (it == prev.end()) continue;
                    const Monomial tail = Monomial::from_pairs({{k, {i - a, j - b}}});
                    for (const Monomial& z : it->second) cell.push_back(mono_mul(z, tail));
                }
            std::sort(cell.begin(), cell.end());
            cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
            return cell;
        };
        for (unsigned i = 0; i + 1 < k; ++i)
            for (unsigned j = 0; i + j + 1 < k; ++j) cur[{i, j}] = build_rec(i, j);
        cur[{k - 1, 0}] = build_rec(k - 1, 0);
        // Walk the antidiagonal with the x->y shift on exponents.
        for (unsigned i = 1; i <= k - 1; ++i) {
            std::vector<Monomial> cell;
            for (const Monomial& z : cur.at({k - i, i - 1}))
                cell.push_back(Monomial{z.support, shift_x_to_y(z.exponent)});
            std::sort(cell.begin(), cell.end());
            cur[{k - 1 - i, i}] = std::move(cell);
        }
        prev = std::move(cur);
    }
    return prev;
}

bool basis_check(unsigned n) {
    const auto cells = conjectured_basis(n);
    std::vector<Bidegree> degrees;
    for (unsigned s = 0; s + 1 <= n; ++s)
        for (const Bidegree& d : band_bidegrees(s)) degrees.push_back(d);
    std::vector<char> ok(degrees.size(), 0);
    parallel_for(degrees.size(), [&](std::size_t idx) {
        const Bidegree d = degrees[idx];
        const std::vector<Monomial> basis = monomial_basis(n, d);
        std::map<Monomial, std::size_t> col;
        for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
        RankAccumulator acc;
        for (const Polynomial& p : ideal_component(m_basis_generators(n, d), n, d))
            acc.add_row(polynomial_row(p, col));
        const std::size_t ideal_rank = acc.rank();
        const unsigned long quotient_dim =
            static_cast<unsigned long>(basis.size() - ideal_rank);

        auto it = cells.find(d);
        const std::vector<Monomial> empty;
        const std::vector<Monomial>& cand = it == cells.end() ? empty : it->second;
        if (cand.size() != quotient_dim) return;
        // Candidates must extend the ideal span freely.
        for (const Monomial& m : cand) {
            SparseRow row;
            row.entries.emplace_back(col.at(m), Int(1));
            if (!acc.add_row(std::move(row))) return;
        }
        ok[idx] = 1;
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

UnivariateSeries hilbert_q(unsigned n) {
    if (n < 1) throw std::invalid_argument("hilbert_q requires n >= 1");
    std::vector<Rat> coeffs;
    for (unsigned k = 0; k + 1 <= n; ++k) {
        Int num = binomial(n + k, k) * Int(n - k);
        Int val;
        mpz_divexact(val.get_mpz_t(), num.get_mpz_t(), Int(n + k).get_mpz_t());
        coeffs.emplace_back(val);
    }
    return UnivariateSeries::polynomial(std::move(coeffs));
}

std::vector<Polynomial> dsym_generators(unsigned n, unsigned maxdeg) {
    std::vector<Polynomial> out;
    for (unsigned s = 1; s <= maxdeg; ++s)
        for (unsigned a = 0; a <= s; ++a) {
            const Bicomposition part(std::vector<Bivector>{{a, s - a}});
            out.push_back(m_expand(part, n));
        }
    return out;
}

unsigned long dqsym_dimension(unsigned n, Bidegree d) {
    return static_cast<unsigned long>(enumerate_bicompositions(d, n).size());
}

HilbertMatrix hilbert_r_diag(unsigned n, Bidegree maxbd, unsigned total_cap,
                             unsigned gen_maxdeg) {
    if (n < 1) throw std::invalid_argument("hilbert_r_diag requires n >= 1");
    if (gen_maxdeg == 0) gen_maxdeg = n;
    std::vector<Bidegree> cells;
    for (unsigned a = 0; a <= maxbd.first; ++a)
        for (unsigned b = 0; b <= maxbd.second; ++b)
            if (a + b <= total_cap) cells.push_back({a, b});
    std::vector<unsigned long> dims(cells.size());
    parallel_for(cells.size(), [&](std::size_t idx) {
        const Bidegree d = cells[idx];
        // Span of u * g with u a bimonomial basis element of DQSym_n and g a
        // polarized power sum, in ambient monomial coordinates.
        std::vector<Polynomial> span;
        for (unsigned s = 1; s <= gen_maxdeg; ++s)
            for (unsigned ga = 0; ga <= std::min(s, d.first); ++ga) {
                const unsigned gb = s - ga;
                if (gb > d.second) continue;
                const Polynomial gen =
                    m_expand(Bicomposition(std::vector<Bivector>{{ga, gb}}), n);
                for (const Bicomposition& u :
                     enumerate_bicompositions({d.first - ga, d.second - gb}, n))
                    span.push_back(poly_mul(m_expand(u, n), gen));
            }
        dims[idx] = dqsym_dimension(n, d) - exact_rank(span, n, d);
    });
    HilbertMatrix m;
    m.n = n;
    for (std::size_t i = 0; i < cells.size(); ++i) m.entries[cells[i]] = dims[i];
    return m;
}

namespace {

std::vector<Rat> poly_mul_vec(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    if (u.empty() || v.empty()) return {};
    std::vector<Rat> out(u.size() + v.size() - 1, Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
    return out;
}

std::vector<Rat> q_factorial(unsigned n) {
    std::vector<Rat> out{Rat(1)};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<Rat> bracket(k, Rat(1));  // 1 + q + ... + q^{k-1}
        out = poly_mul_vec(out, bracket);
    }
    return out;
}

}  // namespace

UnivariateSeries psi(unsigned n) {
    std::vector<Rat> cur{Rat(1)};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<Rat> fact = q_factorial(k);
        std::vector<Rat> next(std::max(cur.size(), fact.size() + k), Rat(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i] += cur[i];
        for (std::size_t i = 0; i < fact.size(); ++i) next[i + k] += fact[i];
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + k] -= cur[i];
        cur = std::move(next);
    }
    return UnivariateSeries::polynomial(std::move(cur));
}

UnivariateSeries hilbert_r_closed_form(unsigned n, unsigned truncation) {
    std::vector<Rat> num{Rat(1)};
    for (unsigned k = 2; k <= n; ++k) {
        std::vector<Rat> bracket(k, Rat(1));
        num = poly_mul_vec(num, bracket);
    }
    // (1-q)^{n+1} - q^{n+1}
    std::vector<Rat> binom(n + 2, Rat(0));
    for (unsigned k = 0; k <= n + 1; ++k) {
        Rat c(binomial(n + 1, k));
        binom[k] = (k % 2 == 0) ? c : -c;
    }
    binom[n + 1] -= 1;
    num = poly_mul_vec(num, binom);
    // Multiply by 1/(1-2q) = sum 2^k q^k, truncated.
    std::vector<Rat> out(truncation + 1, Rat(0));
    Int pw(1);
    for (unsigned k = 0; k <= truncation; ++k) {
        for (std::size_t i = 0; i < num.size() && i <= k; ++i)
            out[k] += num[i] * Rat(pw >> static_cast<unsigned long>(i));
        pw <<= 1;
    }
    return UnivariateSeries::truncated(std::move(out), truncation);
}

BivariateSeries plethystic_guess(unsigned n, Bidegree trunc) {
    const unsigned t1 = trunc.first, t2 = trunc.second;
    const BivariateSeries full = BivariateSeries::geometric_pair(1, t1, t2);
    BivariateSeries letters = full;  // (1-t)^{-1}(1-q)^{-1} - 1
    letters.at(0, 0) -= 1;
    BivariateSeries numerator(t1, t2);
    BivariateSeries power = BivariateSeries::one(t1, t2);
    for (unsigned k = 0; k <= n; ++k) {
        numerator += power;
        if (k < n) power = power * letters;
    }
    BivariateSeries denominator(t1, t2);
    for (const Partition& l : partitions_of(n)) {
        BivariateSeries term = BivariateSeries::one(t1, t2);
        for (unsigned part : l) term = term * BivariateSeries::geometric_pair(part, t1, t2);
        term *= Rat(1) / Rat(z_of(l));
        denominator += term;
    }
    return numerator * denominator.inverse();
}

UnivariateSeries hilbert_r_univariate(unsigned n) {
    if (n < 1) throw std::invalid_argument("hilbert_r_univariate requires n >= 1");
    const unsigned maxdeg = psi(n).degree();
    std::vector<Rat> dims(maxdeg + 1, Rat(0));
    std::vector<unsigned> degrees(maxdeg + 1);
    for (unsigned d = 0; d <= maxdeg; ++d) degrees[d] = d;
    parallel_for(degrees.size(), [&](std::size_t idx) {
        const unsigned d = degrees[idx];
        std::vector<Polynomial> span;
        for (unsigned k = 1; k <= std::min(n, d); ++k) {
            // e_k is the bimonomial of k unit columns in the x row.
            const Polynomial ek =
                m_expand(Bicomposition(std::vector<Bivector>(k, Bivector{1, 0})), n);
            for (const Bicomposition& a : enumerate_bicompositions({d - k, 0}, n))
                span.push_back(poly_mul(m_expand(a, n), ek));
        }
        const unsigned long ambient = dqsym_dimension(n, {d, 0});
        dims[idx] = Rat(static_cast<long>(ambient - exact_rank(span, n, {d, 0})));
    });
    return UnivariateSeries::polynomial(std::move(dims));
}

}  // namespace dqsym
