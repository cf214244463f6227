#pragma once

#include <cstddef>
#include <vector>

#include "dqsym/rational.hpp"

namespace dqsym {

// Sparse integer row: (column, value) pairs sorted by column, values nonzero.
struct SparseRow {
    std::vector<std::pair<std::size_t, Int>> entries;
    bool empty() const { return entries.empty(); }
};

// Divides a row by the gcd of its entries and makes the leading entry positive.
void normalize_content(SparseRow& row);

// Exact rank by fraction-free elimination: incoming rows are reduced against
// the pivot rows accumulated so far (one pivot per leading column), with
// content removal after every combination to keep the integers small.
std::size_t sparse_rank(std::vector<SparseRow> rows);

// Incremental variant of the same elimination, for rank-extension queries.
class RankAccumulator {
public:
    // Returns true when the row was independent of the rows seen so far.
    bool add_row(SparseRow row);
    std::size_t rank() const { return pivots_.size(); }

private:
    std::vector<std::pair<std::size_t, SparseRow>> pivots_;  // sorted by leading column
};

// Basis of the right null space of a dense rational matrix (rows x cols).
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> mat, std::size_t cols);

}  // namespace dqsym
