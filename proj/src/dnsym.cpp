#include "dqsym/dnsym.hpp"

namespace dqsym {

Rat DNSymElt::coeff(const Bicomposition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void DNSymElt::add_term(const Bicomposition& a, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DNSymElt& DNSymElt::operator+=(const DNSymElt& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

std::string DNSymElt::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : terms_) {
        Rat v = c;
        if (out.empty()) {
            if (v < 0) out += "-", v = -v;
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1 || a.empty()) out += v.get_str();
        if (v != 1 && !a.empty()) out += '*';
        for (std::size_t i = 0; i < a.length(); ++i) {
            if (i) out += '*';
            out += "h[" + std::to_string(a.part(i).a) + "/" + std::to_string(a.part(i).b) + "]";
        }
    }
    return out;
}

DNSymElt h_product(const DNSymElt& u, const DNSymElt& v) {
    DNSymElt out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) out.add_term(concat(a, b), ca * cb);
    return out;
}

TensorElt h_coproduct(const DNSymElt& u) {
    TensorElt out;
    for (const auto& [word, c] : u.terms()) {
        // Running list of (left word, right word) summands.
        std::vector<std::pair<std::vector<Bivector>, std::vector<Bivector>>> acc{{{}, {}}};
        for (const Bivector& letter : word.parts()) {
            std::vector<std::pair<std::vector<Bivector>, std::vector<Bivector>>> next;
            for (unsigned xa = 0; xa <= letter.a; ++xa)
                for (unsigned xb = 0; xb <= letter.b; ++xb) {
                    const Bivector beta{xa, xb};
                    const Bivector gamma{letter.a - xa, letter.b - xb};
                    for (const auto& [left, right] : acc) {
                        auto l = left;
                        auto r = right;
                        if (!beta.is_zero()) l.push_back(beta);
                        if (!gamma.is_zero()) r.push_back(gamma);
                        next.emplace_back(std::move(l), std::move(r));
                    }
                }
            acc = std::move(next);
        }
        for (auto& [left, right] : acc)
            out.add_term({Bicomposition(std::move(left)), Bicomposition(std::move(right))}, c);
    }
    return out;
}

Rat pairing(const DNSymElt& u, const DQSymElt& v) {
    Rat out(0);
    for (const auto& [a, c] : u.terms()) out += c * v.coeff(a);
    return out;
}

bool duality_check(const Bicomposition& a, const Bicomposition& b, const Bicomposition& c) {
    const DQSymElt mab = m_mult(a, b);
    const TensorElt dhc = h_coproduct(DNSymElt::word(c));
    if (mab.coeff(c) != dhc.coeff(a, b)) return false;

    const TensorElt dmc = coproduct(DQSymElt::basis(c));
    const Rat lhs = concat(a, b) == c ? Rat(1) : Rat(0);
    return lhs == dmc.coeff(a, b);
}

}  // namespace dqsym
