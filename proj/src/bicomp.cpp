#include "dqsym/bicomp.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "dqsym/rational.hpp"

namespace dqsym {

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Int catalan(unsigned n) {
    return binomial(2 * n, n) / Int(n + 1);
}

Bicomposition::Bicomposition(std::vector<Bivector> parts) : parts_(std::move(parts)) {
    for (const Bivector& p : parts_)
        if (p.is_zero()) throw std::invalid_argument("bicomposition part (0,0) is not allowed");
}

namespace {

std::vector<unsigned> parse_row(std::string_view row) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = row.find(',', pos);
        std::string_view tok = row.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad bicomposition entry '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Bicomposition Bicomposition::parse(std::string_view text) {
    if (text == "-") return {};
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("bicomposition must be 'a1,a2,../b1,b2,..' or '-'");
    std::vector<unsigned> top = parse_row(text.substr(0, slash));
    std::vector<unsigned> bot = parse_row(text.substr(slash + 1));
    if (top.size() != bot.size())
        throw std::invalid_argument("bicomposition rows have unequal length");
    std::vector<Bivector> parts(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) parts[i] = {top[i], bot[i]};
    return Bicomposition(std::move(parts));
}

Bidegree Bicomposition::bidegree() const {
    Bidegree d{0, 0};
    for (const Bivector& p : parts_) {
        d.first += p.a;
        d.second += p.b;
    }
    return d;
}

unsigned Bicomposition::total_degree() const {
    auto [d1, d2] = bidegree();
    return d1 + d2;
}

Composition Bicomposition::collapse() const {
    Composition c;
    c.reserve(parts_.size());
    for (const Bivector& p : parts_) c.push_back(p.a + p.b);
    return c;
}

Bicomposition Bicomposition::prefix(std::size_t k) const {
    Bicomposition out;
    out.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

Bicomposition Bicomposition::suffix(std::size_t k) const {
    Bicomposition out;
    out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(k), parts_.end());
    return out;
}

std::string Bicomposition::str() const {
    if (parts_.empty()) return "-";
    std::string top, bot;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            top += ',';
            bot += ',';
        }
        top += std::to_string(parts_[i].a);
        bot += std::to_string(parts_[i].b);
    }
    return top + "/" + bot;
}

bool lex_less(const Bicomposition& a, const Bicomposition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end());
}

Bicomposition merged_sum(const Bicomposition& a, const Bicomposition& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("merged_sum is undefined for empty operands");
    std::vector<Bivector> parts(a.parts());
    parts.back() = parts.back() + b.part(0);
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Bicomposition(std::move(parts));
}

Bicomposition concat(const Bicomposition& a, const Bicomposition& b) {
    std::vector<Bivector> parts(a.parts());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Bicomposition(std::move(parts));
}

std::map<Bicomposition, unsigned long> quasi_shuffle_counted(const Bicomposition& a,
                                                             const Bicomposition& b) {
    if (b.empty()) return {{a, 1}};
    if (a.empty()) return {{b, 1}};
    const Bicomposition head = b.prefix(1);
    const Bicomposition tail = b.suffix(1);
    std::map<Bicomposition, unsigned long> out;
    // Place the first part of b after each prefix of a, either as its own part
    // or merged into the last part of a nonempty prefix; recurse on the rest.
    for (std::size_t cut = 0; cut <= a.length(); ++cut) {
        const Bicomposition left = a.prefix(cut);
        for (const auto& [c, ways] : quasi_shuffle_counted(a.suffix(cut), tail)) {
            out[concat(concat(left, head), c)] += ways;
            if (cut > 0) out[concat(merged_sum(left, head), c)] += ways;
        }
    }
    return out;
}

std::vector<Bicomposition> quasi_shuffle(const Bicomposition& a, const Bicomposition& b) {
    std::vector<Bicomposition> out;
    for (const auto& [c, ways] : quasi_shuffle_counted(a, b)) out.push_back(c);
    return out;  // map iteration is already sorted
}

std::vector<Bicomposition> enumerate_bicompositions(Bidegree d, std::size_t maxlen) {
    std::vector<Bicomposition> out;
    std::vector<Bivector> stack;
    auto recurse = [&](auto&& self, unsigned ra, unsigned rb) -> void {
        if (ra == 0 && rb == 0) {
            out.emplace_back(stack);
            return;
        }
        if (stack.size() == maxlen) return;
        for (unsigned x = 0; x <= ra; ++x)
            for (unsigned y = 0; y <= rb; ++y) {
                if (x == 0 && y == 0) continue;
                stack.push_back({x, y});
                self(self, ra - x, rb - y);
                stack.pop_back();
            }
    };
    recurse(recurse, d.first, d.second);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bicomposition> refinements(const Bicomposition& b) {
    std::vector<Bicomposition> out{Bicomposition{}};
    for (const Bivector& p : b.parts()) {
        std::vector<Bicomposition> splits =
            enumerate_bicompositions({p.a, p.b}, p.a + p.b);
        std::vector<Bicomposition> next;
        next.reserve(out.size() * splits.size());
        for (const Bicomposition& head : out)
            for (const Bicomposition& s : splits) next.push_back(concat(head, s));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool order_leq(const Bicomposition& a, const Bicomposition& b) {
    // Group b's parts left to right; each group must sum to the next part of a.
    // Sums are monotone so the grouping, if it exists, is forced.
    std::size_t j = 0;
    for (const Bivector& target : a.parts()) {
        Bivector acc{0, 0};
        while (!(acc == target)) {
            if (j == b.length()) return false;
            acc = acc + b.part(j++);
            if (acc.a > target.a || acc.b > target.b) return false;
        }
    }
    return j == b.length();
}

bool is_lyndon(const Bicomposition& a) {
    if (a.empty()) throw std::invalid_argument("is_lyndon requires a nonempty bicomposition");
    const std::size_t k = a.length();
    for (std::size_t r = 1; r < k; ++r) {
        std::vector<Bivector> rot(a.parts().begin() + static_cast<std::ptrdiff_t>(r),
                                  a.parts().end());
        rot.insert(rot.end(), a.parts().begin(), a.parts().begin() + static_cast<std::ptrdiff_t>(r));
        if (!std::lexicographical_compare(a.parts().begin(), a.parts().end(), rot.begin(),
                                          rot.end()))
            return false;
    }
    return true;
}

std::vector<Bicomposition> lyndon_list(Bidegree maxbd) {
    std::vector<Bicomposition> out;
    for (unsigned d1 = 0; d1 <= maxbd.first; ++d1)
        for (unsigned d2 = 0; d2 <= maxbd.second; ++d2) {
            if (d1 == 0 && d2 == 0) continue;
            for (const Bicomposition& c : enumerate_bicompositions({d1, d2}, d1 + d2))
                if (is_lyndon(c)) out.push_back(c);
        }
    std::sort(out.begin(), out.end(), [](const Bicomposition& x, const Bicomposition& y) {
        auto kx = std::make_tuple(x.total_degree(), x.bidegree(), x);
        auto ky = std::make_tuple(y.total_degree(), y.bidegree(), y);
        return kx < ky;
    });
    return out;
}

Bicomposition shift_x_to_y(const Bicomposition& a) {
    std::vector<Bivector> parts(a.parts());
    for (Bivector& p : parts)
        if (p.a > 0) {
            --p.a;
            ++p.b;
            return Bicomposition(std::move(parts));
        }
    throw std::invalid_argument("shift_x_to_y requires a positive entry in the top row");
}

}  // namespace dqsym
