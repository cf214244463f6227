#include "dqsym/dqsym.hpp"

#include <algorithm>

#include "dqsym/linalg.hpp"

namespace dqsym {

namespace {

std::string coeff_prefix(std::string& out, const Rat& c) {
    Rat a = c;
    if (out.empty()) {
        if (a < 0) out += "-", a = -a;
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    return a == 1 ? std::string() : a.get_str() + "*";
}

}  // namespace

Rat DQSymElt::coeff(const Bicomposition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void DQSymElt::add_term(const Bicomposition& a, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DQSymElt& DQSymElt::operator+=(const DQSymElt& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

DQSymElt& DQSymElt::operator-=(const DQSymElt& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

DQSymElt& DQSymElt::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

std::string DQSymElt::str(const char* name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : terms_) {
        out += coeff_prefix(out, c);
        out += name;
        out += '[' + a.str() + ']';
    }
    return out;
}

Rat TensorElt::coeff(const Bicomposition& a, const Bicomposition& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorElt::add_term(const Key& k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

std::string TensorElt::str(const char* name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        out += coeff_prefix(out, c);
        out += name;
        out += '[' + k.first.str() + ']';
        out += " (x) ";
        out += name;
        out += '[' + k.second.str() + ']';
    }
    return out;
}

Polynomial m_expand(const Bicomposition& a, unsigned n) {
    Polynomial p(n);
    if (a.length() > n) return p;  // vanishing rule
    for (const auto& sub : all_k_subsets(n, static_cast<unsigned>(a.length())))
        p.add_term(Monomial{sub, a}, Rat(1));
    return p;
}

Polynomial expand(const DQSymElt& u, unsigned n) {
    Polynomial p(n);
    for (const auto& [a, c] : u.terms()) {
        Polynomial part = m_expand(a, n);
        part *= c;
        p += part;
    }
    return p;
}

DQSymElt m_mult(const Bicomposition& a, const Bicomposition& b) {
    DQSymElt out;
    for (const auto& [c, ways] : quasi_shuffle_counted(a, b))
        out.add_term(c, Rat(static_cast<long>(ways)));
    return out;
}

DQSymElt product(const DQSymElt& u, const DQSymElt& v) {
    DQSymElt out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            DQSymElt part = m_mult(a, b);
            part *= ca * cb;
            out += part;
        }
    return out;
}

TensorElt coproduct(const DQSymElt& u) {
    TensorElt out;
    for (const auto& [a, c] : u.terms())
        for (std::size_t cut = 0; cut <= a.length(); ++cut)
            out.add_term({a.prefix(cut), a.suffix(cut)}, c);
    return out;
}

Rat counit(const DQSymElt& u) { return u.coeff(Bicomposition{}); }

TensorElt tensor_mult(const TensorElt& u, const TensorElt& v) {
    TensorElt out;
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            const DQSymElt left = product(DQSymElt::basis(ku.first), DQSymElt::basis(kv.first));
            const DQSymElt right = product(DQSymElt::basis(ku.second), DQSymElt::basis(kv.second));
            for (const auto& [a, ca] : left.terms())
                for (const auto& [b, cb] : right.terms())
                    out.add_term({a, b}, cu * cv * ca * cb);
        }
    return out;
}

DQSymElt f_basis(const Bicomposition& b) {
    DQSymElt out;
    for (const Bicomposition& a : refinements(b)) out.add_term(a, Rat(1));
    return out;
}

DQSymElt m_in_f(const DQSymElt& u) {
    // F_b = M_b + (strictly longer refinements), so peeling from the shortest
    // remaining index inverts the transition exactly.
    std::map<Bicomposition, Rat> rest(u.terms().begin(), u.terms().end());
    DQSymElt out;
    while (!rest.empty()) {
        // Container order is length-first, so rest.begin() is a shortest index.
        const auto [b, c] = *rest.begin();
        out.add_term(b, c);
        for (const Bicomposition& a : refinements(b)) {
            auto it = rest.emplace(a, Rat(0)).first;
            it->second -= c;
            if (it->second == 0) rest.erase(it);
        }
    }
    return out;
}

QSymElt pi_project(const DQSymElt& u) {
    QSymElt out;
    for (const auto& [a, c] : u.terms()) {
        auto [it, inserted] = out.emplace(a.collapse(), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

namespace {

Bicomposition from_composition(const Composition& c) {
    std::vector<Bivector> parts;
    parts.reserve(c.size());
    for (unsigned v : c) parts.push_back({v, 0});
    return Bicomposition(std::move(parts));
}

}  // namespace

QSymElt qsym_mult(const QSymElt& u, const QSymElt& v) {
    QSymElt out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v)
            for (const auto& [c, ways] :
                 quasi_shuffle_counted(from_composition(a), from_composition(b))) {
                const Rat add = ca * cb * Rat(static_cast<long>(ways));
                auto [it, inserted] = out.emplace(c.collapse(), add);
                if (!inserted) {
                    it->second += add;
                    if (it->second == 0) out.erase(it);
                }
            }
    return out;
}

std::string qsym_str(const QSymElt& u) {
    if (u.empty()) return "0";
    std::string out;
    for (const auto& [c, v] : u) {
        out += coeff_prefix(out, v);
        out += "M[";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ']';
    }
    return out;
}

std::vector<std::vector<Bicomposition>> lyndon_multisets(Bidegree d) {
    // Lyndon generators of bidegree componentwise <= d, in word-lex order.
    std::vector<Bicomposition> gens = lyndon_list(d);
    std::sort(gens.begin(), gens.end(), lex_less);
    std::vector<std::vector<Bicomposition>> out;
    std::vector<Bicomposition> chosen;
    auto recurse = [&](auto&& self, std::size_t maxgen, unsigned ra, unsigned rb) -> void {
        if (ra == 0 && rb == 0) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t g = 0; g < maxgen; ++g) {
            const auto [ga, gb] = gens[g].bidegree();
            if (ga > ra || gb > rb) continue;
            chosen.push_back(gens[g]);
            self(self, g + 1, ra - ga, rb - gb);  // weakly decreasing: reuse allowed
            chosen.pop_back();
        }
    };
    // maxgen = g + 1 permits repeating the generator just chosen.
    auto run = [&](std::size_t maxgen, unsigned ra, unsigned rb) {
        recurse(recurse, maxgen, ra, rb);
    };
    run(gens.size(), d.first, d.second);
    return out;
}

bool lyndon_freeness_check(Bidegree d) {
    const std::vector<Bicomposition> targets = enumerate_bicompositions(d, d.first + d.second);
    std::map<Bicomposition, std::size_t> col;
    for (std::size_t i = 0; i < targets.size(); ++i) col[targets[i]] = i;

    const auto multisets = lyndon_multisets(d);
    if (multisets.size() != targets.size()) return false;

    std::vector<SparseRow> rows;
    rows.reserve(multisets.size());
    for (const auto& factors : multisets) {
        DQSymElt prod = DQSymElt::basis(Bicomposition{});
        for (const Bicomposition& f : factors) prod = product(prod, DQSymElt::basis(f));
        SparseRow row;
        for (const auto& [a, c] : prod.terms()) {
            // Coefficients are nonnegative integer shuffle counts.
            row.entries.emplace_back(col.at(a), Int(c.get_num()));
        }
        rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows)) == targets.size();
}

}  // namespace dqsym
