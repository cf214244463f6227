#include "dqsym/linalg.hpp"

#include <algorithm>

namespace dqsym {

void normalize_content(SparseRow& row) {
    if (row.entries.empty()) return;
    Int g(0);
    for (const auto& [c, v] : row.entries) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.entries.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row.entries) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

namespace {

// row <- (pl/g)*row - (rl/g)*pivot where pl, rl are the leading values; the
// leading column of row is the leading column of pivot and gets eliminated.
void eliminate(SparseRow& row, const SparseRow& pivot) {
    const Int& pl = pivot.entries.front().second;
    const Int& rl = row.entries.front().second;
    Int g;
    mpz_gcd(g.get_mpz_t(), pl.get_mpz_t(), rl.get_mpz_t());
    Int mr = pl / g, mp = rl / g;
    SparseRow out;
    out.entries.reserve(row.entries.size() + pivot.entries.size());
    std::size_t i = 0, j = 0;
    while (i < row.entries.size() || j < pivot.entries.size()) {
        if (j == pivot.entries.size() ||
            (i < row.entries.size() && row.entries[i].first < pivot.entries[j].first)) {
            out.entries.emplace_back(row.entries[i].first, row.entries[i].second * mr);
            ++i;
        } else if (i == row.entries.size() || pivot.entries[j].first < row.entries[i].first) {
            out.entries.emplace_back(pivot.entries[j].first, -pivot.entries[j].second * mp);
            ++j;
        } else {
            Int v = row.entries[i].second * mr - pivot.entries[j].second * mp;
            if (v != 0) out.entries.emplace_back(row.entries[i].first, std::move(v));
            ++i, ++j;
        }
    }
    row = std::move(out);
    normalize_content(row);
}

}  // namespace

bool RankAccumulator::add_row(SparseRow row) {
    normalize_content(row);
    while (!row.empty()) {
        const std::size_t lead = row.entries.front().first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                                   [](const auto& p, std::size_t c) { return p.first < c; });
        if (it == pivots_.end() || it->first != lead) {
            pivots_.insert(it, {lead, std::move(row)});
            return true;
        }
        eliminate(row, it->second);
    }
    return false;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
    RankAccumulator acc;
    for (auto& r : rows) acc.add_row(std::move(r));
    return acc.rank();
}

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> mat, std::size_t cols) {
    // Reduced row echelon form with exact rational arithmetic.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < mat.size(); ++c) {
        std::size_t sel = r;
        while (sel < mat.size() && mat[sel][c] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[r], mat[sel]);
        const Rat inv = Rat(1) / mat[r][c];
        for (std::size_t k = c; k < cols; ++k) mat[r][k] *= inv;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == r || mat[i][c] == 0) continue;
            const Rat f = mat[i][c];
            for (std::size_t k = c; k < cols; ++k) mat[i][k] -= f * mat[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -mat[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dqsym
