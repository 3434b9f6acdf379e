#include "conf3/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace conf3 {

namespace {

using Dense = std::vector<std::vector<Rat>>;

// Row echelon reduction in place, pivot rule: rows in index order, leftmost
// nonzero column within the row. Fully reduces pivot columns (RREF) and
// returns the (pivot row, pivot column) list in elimination order.
std::vector<std::pair<int, int>> rref(Dense& a) {
    std::vector<std::pair<int, int>> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    for (int r = 0; r < rows; ++r) {
        int pc = -1;
        for (int c = 0; c < cols; ++c)
            if (a[r][c] != 0) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        Rat inv = 1 / a[r][pc];
        for (int c = pc; c < cols; ++c) a[r][c] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][pc] == 0) continue;
            Rat f = a[i][pc];
            for (int c = 0; c < cols; ++c) a[i][c] -= f * a[r][c];
        }
        pivots.emplace_back(r, pc);
    }
    return pivots;
}

// Fraction-free Bareiss elimination for integer matrices, forward only; the
// pivot rule matches rref. Returns the rank.
int bareiss_rank(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    Int prev = 1;
    int rank = 0;
    std::vector<bool> done_col(static_cast<size_t>(cols), false);
    for (int r = 0; r < rows; ++r) {
        int pc = -1;
        for (int c = 0; c < cols; ++c)
            if (!done_col[static_cast<size_t>(c)] && a[r][c] != 0) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        const Int piv = a[r][pc];
        for (int i = r + 1; i < rows; ++i) {
            for (int c = 0; c < cols; ++c) {
                if (c == pc) continue;
                Int num = a[i][c] * piv - a[i][pc] * a[r][c];
                assert(num % prev == 0);
                a[i][c] = num / prev;
            }
            a[i][pc] = 0;
        }
        done_col[static_cast<size_t>(pc)] = true;
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace

SparseMatrixQ SparseMatrixQ::identity(int n) {
    SparseMatrixQ m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Rat SparseMatrixQ::at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

void SparseMatrixQ::set(int r, int c, const Rat& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrixQ::add_to(int r, int c, const Rat& v) {
    if (v == 0) return;
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    auto [it, fresh] = entries_.try_emplace({r, c}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

SparseMatrixQ SparseMatrixQ::transpose() const {
    SparseMatrixQ t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrixQ SparseMatrixQ::scaled(const Rat& c) const {
    SparseMatrixQ r(rows_, cols_);
    if (c == 0) return r;
    for (const auto& [rc, v] : entries_) r.entries_[rc] = v * c;
    return r;
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    SparseMatrixQ r(rows_, o.cols_);
    // entries of o grouped by row via ordered iteration
    for (const auto& [rc, v] : entries_) {
        auto it = o.entries_.lower_bound({rc.second, 0});
        for (; it != o.entries_.end() && it->first.first == rc.second; ++it)
            r.add_to(rc.first, it->first.second, v * it->second);
    }
    return r;
}

SparseMatrixQ SparseMatrixQ::operator+(const SparseMatrixQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    SparseMatrixQ r = *this;
    for (const auto& [rc, v] : o.entries_) r.add_to(rc.first, rc.second, v);
    return r;
}

int SparseMatrixQ::rank() const {
    if (entries_.empty()) return 0;
    bool integral = true;
    for (const auto& [rc, v] : entries_)
        if (v.get_den() != 1) {
            integral = false;
            break;
        }
    if (integral) {
        std::vector<std::vector<Int>> a(static_cast<size_t>(rows_),
                                        std::vector<Int>(static_cast<size_t>(cols_), Int(0)));
        for (const auto& [rc, v] : entries_)
            a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v.get_num();
        return bareiss_rank(std::move(a));
    }
    Dense a(static_cast<size_t>(rows_), std::vector<Rat>(static_cast<size_t>(cols_), Rat(0)));
    for (const auto& [rc, v] : entries_)
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    return static_cast<int>(rref(a).size());
}

std::vector<std::vector<Rat>> SparseMatrixQ::kernel() const {
    Dense a(static_cast<size_t>(rows_), std::vector<Rat>(static_cast<size_t>(cols_), Rat(0)));
    for (const auto& [rc, v] : entries_)
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (auto& [pr, pc] : pivots) is_pivot[static_cast<size_t>(pc)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols_), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (auto& [pr, pc] : pivots) v[static_cast<size_t>(pc)] = -a[static_cast<size_t>(pr)][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> SparseMatrixQ::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Rat> out(static_cast<size_t>(rows_), Rat(0));
    for (const auto& [rc, mv] : entries_)
        out[static_cast<size_t>(rc.first)] += mv * v[static_cast<size_t>(rc.second)];
    return out;
}

bool SparseMatrixQ::in_column_span(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("in_column_span: dimension mismatch");
    SparseMatrixQ aug(rows_, cols_ + 1);
    aug.entries_ = entries_;
    for (int r = 0; r < rows_; ++r) aug.set(r, cols_, v[static_cast<size_t>(r)]);
    return aug.rank() == rank();
}

bool SparseMatrixQ::solve(const SparseMatrixQ& rhs, SparseMatrixQ& x) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve: dimension mismatch");
    Dense a(static_cast<size_t>(rows_),
            std::vector<Rat>(static_cast<size_t>(cols_ + rhs.cols_), Rat(0)));
    for (const auto& [rc, v] : entries_)
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    for (const auto& [rc, v] : rhs.entries_)
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(cols_ + rc.second)] = v;
    auto pivots = rref(a);
    x = SparseMatrixQ(cols_, rhs.cols_);
    for (auto& [pr, pc] : pivots) {
        if (pc >= cols_) return false;  // a pivot inside rhs: inconsistent system
        for (int j = 0; j < rhs.cols_; ++j)
            x.set(pc, j, a[static_cast<size_t>(pr)][static_cast<size_t>(cols_ + j)]);
    }
    return true;
}

std::vector<int> SparseMatrixQ::pivot_columns() const {
    Dense a(static_cast<size_t>(rows_), std::vector<Rat>(static_cast<size_t>(cols_), Rat(0)));
    for (const auto& [rc, v] : entries_)
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    auto pivots = rref(a);
    std::vector<int> cols;
    cols.reserve(pivots.size());
    for (auto& [pr, pc] : pivots) cols.push_back(pc);
    std::sort(cols.begin(), cols.end());
    return cols;
}

SparseMatrixQ SparseMatrixQ::select_columns(const std::vector<int>& idx) const {
    SparseMatrixQ r(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (const auto& [rc, v] : entries_)
            if (rc.second == idx[static_cast<size_t>(j)]) r.set(rc.first, j, v);
    return r;
}

void SparseMatrixQ::dump_matrix_market(std::ostream& os) const {
    os << "%%MatrixMarket matrix coordinate rational general\n";
    os << rows_ << " " << cols_ << " " << nnz() << "\n";
    for (const auto& [rc, v] : entries_)
        os << rc.first + 1 << " " << rc.second + 1 << " " << v.get_num().get_str() << "/"
           << v.get_den().get_str() << "\n";
}

}  // namespace conf3
