#include "dqsym/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqsym {

Monomial Monomial::from_pairs(std::vector<std::pair<unsigned, Bivector>> factors) {
    std::erase_if(factors, [](const auto& f) { return f.second.is_zero(); });
    std::sort(factors.begin(), factors.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].first == factors[i - 1].first)
            throw std::invalid_argument("duplicate variable index in monomial");
    Monomial m;
    std::vector<Bivector> cols;
    for (auto& [idx, col] : factors) {
        m.support.push_back(idx);
        cols.push_back(col);
    }
    m.exponent = Bicomposition(std::move(cols));
    return m;
}

std::string Monomial::str() const {
    if (support.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const Bivector& e = exponent.part(i);
        for (auto [var, exp] : {std::pair{'x', e.a}, std::pair{'y', e.b}}) {
            if (exp == 0) continue;
            if (!out.empty()) out += '*';
            out += var;
            out += std::to_string(support[i]);
            if (exp > 1) out += "^" + std::to_string(exp);
        }
    }
    return out;
}

Monomial mono_mul(const Monomial& u, const Monomial& v) {
    std::vector<std::pair<unsigned, Bivector>> factors;
    std::size_t i = 0, j = 0;
    while (i < u.support.size() || j < v.support.size()) {
        if (j == v.support.size() || (i < u.support.size() && u.support[i] < v.support[j]))
            factors.emplace_back(u.support[i], u.exponent.part(i)), ++i;
        else if (i == u.support.size() || v.support[j] < u.support[i])
            factors.emplace_back(v.support[j], v.exponent.part(j)), ++j;
        else {
            factors.emplace_back(u.support[i], u.exponent.part(i) + v.exponent.part(j));
            ++i, ++j;
        }
    }
    Monomial m;
    std::vector<Bivector> cols;
    for (auto& [idx, col] : factors) {
        m.support.push_back(idx);
        cols.push_back(col);
    }
    m.exponent = Bicomposition(std::move(cols));
    return m;
}

Polynomial Polynomial::monomial(unsigned n, Monomial m, Rat coeff) {
    Polynomial p(n);
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::constant(unsigned n, Rat value) {
    return monomial(n, Monomial::one(), std::move(value));
}

Polynomial Polynomial::x(unsigned n, unsigned i) {
    return monomial(n, Monomial::from_pairs({{i, {1, 0}}}));
}

Polynomial Polynomial::y(unsigned n, unsigned i) {
    return monomial(n, Monomial::from_pairs({{i, {0, 1}}}));
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (!m.support.empty() && m.support.back() > n_)
        throw std::invalid_argument("monomial index exceeds the number of variables");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("polynomials over different variable counts");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("polynomials over different variable counts");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) out += "-", a = -a;
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || m.support.empty()) {
            out += a.get_str();
            if (!m.support.empty()) out += '*';
        }
        if (!m.support.empty()) out += m.str();
    }
    return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("polynomials over different variable counts");
    Polynomial out(p.vars());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out.add_term(mono_mul(mp, mq), cp * cq);
    return out;
}

namespace {

// d^a/dx^a d^b/dy^b applied to a single monomial; null coefficient when the
// target exponent is too small.
bool diff_mono(const Monomial& op, const Monomial& target, Monomial& out, Int& scale) {
    std::vector<std::pair<unsigned, Bivector>> rest;
    scale = 1;
    std::size_t i = 0;
    for (std::size_t j = 0; j < target.support.size(); ++j) {
        const unsigned idx = target.support[j];
        Bivector e = target.exponent.part(j);
        if (i < op.support.size() && op.support[i] == idx) {
            const Bivector d = op.exponent.part(i);
            if (d.a > e.a || d.b > e.b) return false;
            for (unsigned t = 0; t < d.a; ++t) scale *= Int(e.a - t);
            for (unsigned t = 0; t < d.b; ++t) scale *= Int(e.b - t);
            e = {e.a - d.a, e.b - d.b};
            ++i;
        }
        if (!e.is_zero()) rest.emplace_back(idx, e);
    }
    if (i < op.support.size()) return false;  // operator uses a variable absent from target
    out = Monomial::from_pairs(std::move(rest));
    return true;
}

}  // namespace

Polynomial apply_diff(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("polynomials over different variable counts");
    Polynomial out(q.vars());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            Monomial m;
            Int scale;
            if (diff_mono(mp, mq, m, scale)) out.add_term(m, cp * cq * Rat(scale));
        }
    return out;
}

Rat scalar_product(const Polynomial& p, const Polynomial& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("polynomials over different variable counts");
    Rat out(0);
    auto it = p.terms().begin();
    auto jt = q.terms().begin();
    while (it != p.terms().end() && jt != q.terms().end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            Int w(1);
            for (const Bivector& e : it->first.exponent.parts())
                w *= factorial(e.a) * factorial(e.b);
            out += it->second * jt->second * Rat(w);
            ++it, ++jt;
        }
    }
    return out;
}

Polynomial bidegree_component(const Polynomial& p, Bidegree d) {
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms())
        if (m.bidegree() == d) out.add_term(m, c);
    return out;
}

std::vector<std::vector<unsigned>> all_k_subsets(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > n) return out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        // advance: rightmost index that can still move up
        unsigned i = k;
        while (i > 0 && cur[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (unsigned j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Monomial> monomial_basis(unsigned n, Bidegree d) {
    std::vector<Monomial> out;
    const std::size_t maxlen = std::min<std::size_t>(n, d.first + d.second);
    for (const Bicomposition& e : enumerate_bicompositions(d, maxlen))
        for (const auto& sub : all_k_subsets(n, static_cast<unsigned>(e.length())))
            out.push_back(Monomial{sub, e});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dqsym
