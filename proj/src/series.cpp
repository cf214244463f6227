#include "dqsym/series.hpp"

#include <stdexcept>

namespace dqsym {

namespace {

void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

UnivariateSeries UnivariateSeries::polynomial(std::vector<Rat> coeffs) {
    UnivariateSeries s;
    s.c_ = std::move(coeffs);
    trim(s.c_);
    return s;
}

UnivariateSeries UnivariateSeries::truncated(std::vector<Rat> coeffs, unsigned bound) {
    UnivariateSeries s;
    coeffs.resize(bound + 1, Rat(0));
    s.c_ = std::move(coeffs);
    s.trunc_ = bound;
    return s;
}

unsigned UnivariateSeries::degree() const {
    if (!is_exact()) throw std::logic_error("degree of a truncated series is undefined");
    return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1);
}

Rat UnivariateSeries::coeff(unsigned k) const {
    if (trunc_ && k > *trunc_) throw std::out_of_range("coefficient beyond the truncation bound");
    return k < c_.size() ? c_[k] : Rat(0);
}

std::string UnivariateSeries::str(char var) const {
    std::string out;
    for (unsigned k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (out.empty()) {
            if (v < 0) out += "-", v = -v;
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1 || k == 0) out += v.get_str();
        if (k > 0) {
            if (v != 1) out += '*';
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    if (trunc_) out += " + O(" + std::string(1, var) + "^" + std::to_string(*trunc_ + 1) + ")";
    return out;
}

bool agree_up_to(const UnivariateSeries& u, const UnivariateSeries& v, unsigned maxdeg) {
    for (unsigned k = 0; k <= maxdeg; ++k)
        if (u.coeff(k) != v.coeff(k)) return false;
    return true;
}

BivariateSeries::BivariateSeries(unsigned t1, unsigned t2)
    : t1_(t1), t2_(t2), grid_(static_cast<std::size_t>(t1 + 1) * (t2 + 1), Rat(0)) {}

BivariateSeries BivariateSeries::one(unsigned t1, unsigned t2) {
    BivariateSeries s(t1, t2);
    s.at(0, 0) = 1;
    return s;
}

const Rat& BivariateSeries::coeff(unsigned i, unsigned j) const {
    if (i > t1_ || j > t2_) throw std::out_of_range("coefficient beyond the truncation bound");
    return grid_[static_cast<std::size_t>(i) * (t2_ + 1) + j];
}

Rat& BivariateSeries::at(unsigned i, unsigned j) {
    if (i > t1_ || j > t2_) throw std::out_of_range("coefficient beyond the truncation bound");
    return grid_[static_cast<std::size_t>(i) * (t2_ + 1) + j];
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    if (t1_ != o.t1_ || t2_ != o.t2_) throw std::invalid_argument("truncation mismatch");
    for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] += o.grid_[k];
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    if (t1_ != o.t1_ || t2_ != o.t2_) throw std::invalid_argument("truncation mismatch");
    for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] -= o.grid_[k];
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rat& c) {
    for (Rat& v : grid_) v *= c;
    return *this;
}

BivariateSeries operator*(const BivariateSeries& u, const BivariateSeries& v) {
    if (u.t1_ != v.t1_ || u.t2_ != v.t2_) throw std::invalid_argument("truncation mismatch");
    BivariateSeries out(u.t1_, u.t2_);
    for (unsigned i = 0; i <= u.t1_; ++i)
        for (unsigned j = 0; j <= u.t2_; ++j) {
            if (u.coeff(i, j) == 0) continue;
            for (unsigned a = 0; i + a <= u.t1_; ++a)
                for (unsigned b = 0; j + b <= u.t2_; ++b) {
                    if (v.coeff(a, b) == 0) continue;
                    out.at(i + a, j + b) += u.coeff(i, j) * v.coeff(a, b);
                }
        }
    return out;
}

BivariateSeries BivariateSeries::inverse() const {
    const Rat& c0 = coeff(0, 0);
    if (c0 == 0) throw std::invalid_argument("series with zero constant term has no inverse");
    BivariateSeries inv(t1_, t2_);
    // Solve (this * inv)(i,j) = [i=j=0] in graded order.
    for (unsigned s = 0; s <= t1_ + t2_; ++s)
        for (unsigned i = 0; i <= std::min(s, t1_); ++i) {
            const unsigned j = s - i;
            if (j > t2_) continue;
            Rat acc = (i == 0 && j == 0) ? Rat(1) : Rat(0);
            for (unsigned a = 0; a <= i; ++a)
                for (unsigned b = 0; b <= j; ++b) {
                    if (a == i && b == j) continue;
                    acc -= coeff(i - a, j - b) * inv.coeff(a, b);
                }
            inv.at(i, j) = acc / c0;
        }
    return inv;
}

BivariateSeries BivariateSeries::geometric_pair(unsigned k, unsigned t1, unsigned t2) {
    BivariateSeries s(t1, t2);
    for (unsigned i = 0; i <= t1; i += k)
        for (unsigned j = 0; j <= t2; j += k) s.at(i, j) = 1;
    return s;
}

std::string BivariateSeries::str() const {
    std::string out;
    for (unsigned s = 0; s <= t1_ + t2_; ++s)
        for (unsigned i = 0; i <= std::min(s, t1_); ++i) {
            const unsigned j = s - i;
            if (j > t2_) continue;
            const Rat& c = coeff(i, j);
            if (c == 0) continue;
            Rat v = c;
            if (out.empty()) {
                if (v < 0) out += "-", v = -v;
            } else {
                out += v < 0 ? " - " : " + ";
                if (v < 0) v = -v;
            }
            std::string mono;
            if (i > 0) mono += "q" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j > 0) {
                if (!mono.empty()) mono += "*";
                mono += "t" + (j > 1 ? "^" + std::to_string(j) : std::string());
            }
            if (v != 1 || mono.empty()) {
                out += v.get_str();
                if (!mono.empty()) out += '*';
            }
            out += mono;
        }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace dqsym
