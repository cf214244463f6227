#include "dqsym/action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dqsym {

Permutation::Permutation(std::vector<unsigned> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (unsigned v : img_) {
        if (v < 1 || v > img_.size() || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 1u);
    return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<unsigned> img;
    long v;
    while (in >> v) {
        if (v < 1) throw std::invalid_argument("permutation entries must be positive");
        img.push_back(static_cast<unsigned>(v));
    }
    if (!in.eof()) throw std::invalid_argument("bad permutation token");
    if (img.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    int s = 1;
    for (unsigned len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

Permutation Permutation::inverse() const {
    std::vector<unsigned> img(img_.size());
    for (unsigned i = 1; i <= img_.size(); ++i) img[img_[i - 1] - 1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<unsigned> img(img_.size());
    for (unsigned i = 1; i <= img_.size(); ++i) img[i - 1] = (*this)(o(i));
    return Permutation(std::move(img));
}

std::vector<unsigned> Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<unsigned> lengths;
    for (unsigned i = 1; i <= img_.size(); ++i) {
        if (seen[i - 1]) continue;
        unsigned len = 0, j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            j = img_[j - 1];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::string Permutation::str() const {
    std::string out;
    for (unsigned v : img_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::vector<Permutation> all_permutations(unsigned n) {
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 1u);
    std::vector<Permutation> out;
    do out.push_back(Permutation(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Monomial natural_action(const Permutation& s, const Monomial& m) {
    std::vector<std::pair<unsigned, Bivector>> factors;
    for (std::size_t i = 0; i < m.support.size(); ++i)
        factors.emplace_back(s(m.support[i]), m.exponent.part(i));
    return Monomial::from_pairs(std::move(factors));
}

Polynomial natural_action(const Permutation& s, const Polynomial& p) {
    if (s.size() != p.vars()) throw std::invalid_argument("permutation/polynomial size mismatch");
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) out.add_term(natural_action(s, m), c);
    return out;
}

Monomial hivert_action(const Permutation& s, const Monomial& m) {
    std::vector<unsigned> moved;
    moved.reserve(m.support.size());
    for (unsigned i : m.support) moved.push_back(s(i));
    std::sort(moved.begin(), moved.end());
    return Monomial{std::move(moved), m.exponent};
}

Polynomial hivert_action(const Permutation& s, const Polynomial& p) {
    if (s.size() != p.vars()) throw std::invalid_argument("permutation/polynomial size mismatch");
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) out.add_term(hivert_action(s, m), c);
    return out;
}

void GroupAlgebraElt::add_term(const Permutation& s, const Rat& c) {
    if (s.size() != n_) throw std::invalid_argument("permutation size mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial group_algebra_apply(const GroupAlgebraElt& e, const Polynomial& p, ActionKind kind) {
    Polynomial out(p.vars());
    for (const auto& [s, c] : e.terms()) {
        Polynomial part = kind == ActionKind::natural ? natural_action(s, p) : hivert_action(s, p);
        part *= c;
        out += part;
    }
    return out;
}

GroupAlgebraElt tl_kernel_element(unsigned i, unsigned j, unsigned k, unsigned n) {
    if (!(1 <= i && i < j && j < k && k <= n))
        throw std::invalid_argument("tl_kernel_element requires 1 <= i < j < k <= n");
    GroupAlgebraElt e(n);
    std::vector<unsigned> targets{i, j, k};
    std::sort(targets.begin(), targets.end());
    std::vector<unsigned> placed = targets;
    do {
        std::vector<unsigned> img(n);
        std::iota(img.begin(), img.end(), 1u);
        for (std::size_t t = 0; t < 3; ++t) img[targets[t] - 1] = placed[t];
        Permutation s(std::move(img));
        e.add_term(s, Rat(s.sign()));
    } while (std::next_permutation(placed.begin(), placed.end()));
    return e;
}

unsigned long hivert_trace(const Permutation& s, unsigned n, Bidegree d) {
    unsigned long fixed = 0;
    for (const Monomial& m : monomial_basis(n, d))
        if (hivert_action(s, m) == m) ++fixed;
    return fixed;
}

}  // namespace dqsym
