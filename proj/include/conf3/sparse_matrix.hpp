#pragma once

#include "conf3/rational.hpp"

#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace conf3 {

// Exact rational sparse matrix; zero entries are never stored. Elimination
// uses a deterministic pivot rule (smallest row index, then smallest column
// index) so every derived artifact is reproducible.
class SparseMatrixQ {
public:
    SparseMatrixQ() = default;
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMatrixQ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const { return static_cast<int>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }

    Rat at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add_to(int r, int c, const Rat& v);

    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

    SparseMatrixQ transpose() const;
    SparseMatrixQ scaled(const Rat& c) const;
    SparseMatrixQ operator*(const SparseMatrixQ&) const;
    SparseMatrixQ operator+(const SparseMatrixQ&) const;
    bool operator==(const SparseMatrixQ&) const = default;

    int rank() const;
    // Kernel basis from the reduced echelon form: one vector per free column,
    // unit at the free column. Size is always cols - rank.
    std::vector<std::vector<Rat>> kernel() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    bool in_column_span(const std::vector<Rat>& v) const;

    // Solves this * x = rhs for all rhs columns at once; requires full column
    // rank. Returns false if any column is outside the span.
    bool solve(const SparseMatrixQ& rhs, SparseMatrixQ& x) const;

    // Columns of this matrix that span its column space (pivot columns of the
    // echelon form), in increasing index order.
    std::vector<int> pivot_columns() const;
    SparseMatrixQ select_columns(const std::vector<int>& idx) const;

    void dump_matrix_market(std::ostream&) const;

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Rat> entries_;
};

}  // namespace conf3
