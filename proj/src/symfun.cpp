#include "dqsym/symfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "dqsym/action.hpp"

namespace dqsym {

Int z_of(const Partition& l) {
    Int z(1);
    std::map<unsigned, unsigned> mult;
    for (unsigned part : l) ++mult[part];
    for (auto [k, d] : mult) {
        for (unsigned t = 0; t < d; ++t) z *= Int(k);
        z *= factorial(d);
    }
    return z;
}

Rat SymP::coeff(const Partition& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymP::add_term(const Partition& l, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymP& SymP::operator+=(const SymP& o) {
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
}

SymP& SymP::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [l, v] : terms_) v *= c;
    return *this;
}

std::string SymP::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [l, c] : terms_) {
        Rat v = c;
        if (out.empty()) {
            if (v < 0) out += "-", v = -v;
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1 || l.empty()) out += v.get_str();
        if (v != 1 && !l.empty()) out += '*';
        if (!l.empty()) {
            out += "p[";
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(l[i]);
            }
            out += ']';
        }
    }
    return out;
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    Partition cur;
    auto recurse = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

SymP h_in_p(unsigned k) {
    SymP out;
    for (const Partition& l : partitions_of(k)) out.add_term(l, Rat(1) / Rat(z_of(l)));
    return out;
}

SymP p_mult(const SymP& u, const SymP& v) {
    SymP out;
    for (const auto& [l, cl] : u.terms())
        for (const auto& [m, cm] : v.terms()) {
            Partition joined(l);
            joined.insert(joined.end(), m.begin(), m.end());
            std::sort(joined.rbegin(), joined.rend());
            out.add_term(joined, cl * cm);
        }
    return out;
}

SymP frobenius_from_traces(unsigned n, Bidegree d) {
    if (n > 5) throw std::invalid_argument("frobenius_from_traces is guarded to n <= 5");
    SymP out;
    for (const Permutation& s : all_permutations(n))
        out.add_term(s.cycle_type(), Rat(static_cast<long>(hivert_trace(s, n, d))));
    out *= Rat(1) / Rat(factorial(n));
    return out;
}

SymP frobenius_from_formula(unsigned n, Bidegree d) {
    SymP out;
    for (unsigned k = 0; k <= n; ++k) {
        unsigned long count = 0;
        for (const Bicomposition& a : enumerate_bicompositions(d, k))
            if (a.length() == k) ++count;
        if (count == 0) continue;
        SymP term = p_mult(h_in_p(k), h_in_p(n - k));
        term *= Rat(static_cast<long>(count));
        out += term;
    }
    return out;
}

SymP k_space_frobenius(const Bicomposition& a, unsigned n) {
    if (a.length() > n) throw std::invalid_argument("k_space_frobenius requires len(a) <= n");
    const unsigned k = static_cast<unsigned>(a.length());
    SymP out;
    for (const Permutation& s : all_permutations(n)) {
        // The action permutes the monomials (i, a); count fixed supports.
        unsigned long fixed = 0;
        for (const auto& sub : all_k_subsets(n, k)) {
            std::vector<unsigned> moved;
            for (unsigned i : sub) moved.push_back(s(i));
            std::sort(moved.begin(), moved.end());
            if (moved == sub) ++fixed;
        }
        out.add_term(s.cycle_type(), Rat(static_cast<long>(fixed)));
    }
    out *= Rat(1) / Rat(factorial(n));
    return out;
}

}  // namespace dqsym
