#include "resolvent/exactlin/sparse_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "resolvent/errors.hpp"

namespace resolvent::exactlin {

namespace {

void check_index(std::size_t row, std::size_t col, std::size_t n_rows, std::size_t n_cols) {
    if (row >= n_rows || col >= n_cols) {
        throw ShapeError("SparseMatrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                         ") outside " + std::to_string(n_rows) + "x" + std::to_string(n_cols));
    }
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), columns_(n_cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Rational(1)});
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                         std::vector<Triplet> triplets) {
    SparseMatrix m(n_rows, n_cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
    });
    for (auto& [row, col, value] : triplets) {
        check_index(row, col, n_rows, n_cols);
        auto& column = m.columns_[col];
        if (!column.empty() && column.back().row == row) {
            column.back().value += value;
            if (column.back().value.is_zero()) column.pop_back();
        } else if (!value.is_zero()) {
            column.push_back({row, std::move(value)});
        }
    }
    return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
    check_index(row, col, n_rows_, n_cols_);
    auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    const bool present = it != column.end() && it->row == row;
    if (value.is_zero()) {
        if (present) column.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        column.insert(it, Entry{row, value});
    }
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const {
    check_index(row, col, n_rows_, n_cols_);
    const auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    return (it != column.end() && it->row == row) ? it->value : Rational(0);
}

std::span<const SparseMatrix::Entry> SparseMatrix::column(std::size_t col) const {
    if (col >= n_cols_) throw ShapeError("SparseMatrix column out of range");
    return columns_[col];
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(n_cols_, n_rows_);
    for (std::size_t c = 0; c < n_cols_; ++c) {
        for (const auto& e : columns_[c]) t.columns_[e.row].push_back({c, e.value});
    }
    return t;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.n_rows_ != b.n_rows_ || a.n_cols_ != b.n_cols_) return false;
    for (std::size_t c = 0; c < a.n_cols_; ++c) {
        const auto& x = a.columns_[c];
        const auto& y = b.columns_[c];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].row != y[i].row || !(x[i].value == y[i].value)) return false;
        }
    }
    return true;
}

namespace {

struct Cell {
    std::uint32_t row;
    Rational value;
};

using Column = std::vector<Cell>;

const Cell* find_row(const Column& col, std::uint32_t row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const Cell& c, std::uint32_t r) { return c.row < r; });
    return (it != col.end() && it->row == row) ? &*it : nullptr;
}

/// Working state of one elimination. Row patterns are kept lazily: row_cols may
/// hold stale or repeated column ids, while row_count is always exact.
class MarkowitzEliminator {
public:
    explicit MarkowitzEliminator(const SparseMatrix& m)
        : cols_(m.cols()), row_cols_(m.rows()), row_count_(m.rows(), 0), stamp_(m.cols(), 0) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) {
                const auto r = static_cast<std::uint32_t>(e.row);
                cols_[c].push_back({r, e.value});
                row_cols_[r].push_back(static_cast<std::uint32_t>(c));
                ++row_count_[r];
            }
            if (!cols_[c].empty()) col_queue_.insert({size_of(c), static_cast<std::uint32_t>(c)});
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (row_count_[r] > 0) row_queue_.insert({row_count_[r], static_cast<std::uint32_t>(r)});
        }
    }

    std::size_t run() {
        std::size_t rank = 0;
        while (!col_queue_.empty()) {
            const auto [row, col] = choose_pivot();
            eliminate(row, col);
            ++rank;
        }
        return rank;
    }

private:
    static constexpr int kSearchWidth = 4;

    std::uint32_t size_of(std::size_t c) const { return static_cast<std::uint32_t>(cols_[c].size()); }

    // Distinct live columns holding a nonzero in row r.
    std::vector<std::uint32_t> live_columns(std::uint32_t r) {
        ++epoch_;
        std::vector<std::uint32_t> out;
        std::vector<std::uint32_t> kept;
        for (std::uint32_t j : row_cols_[r]) {
            if (stamp_[j] == epoch_) continue;
            stamp_[j] = epoch_;
            if (find_row(cols_[j], r) != nullptr) {
                out.push_back(j);
                kept.push_back(j);
            }
        }
        row_cols_[r] = std::move(kept);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
        std::uint64_t best_cost = UINT64_MAX;
        std::uint32_t best_row = UINT32_MAX;
        std::uint32_t best_col = UINT32_MAX;
        auto consider = [&](std::uint64_t cost, std::uint32_t r, std::uint32_t c) {
            if (std::tie(cost, r, c) < std::tie(best_cost, best_row, best_col)) {
                best_cost = cost;
                best_row = r;
                best_col = c;
            }
        };
        int seen = 0;
        for (auto it = row_queue_.begin(); it != row_queue_.end() && seen < kSearchWidth; ++it, ++seen) {
            const std::uint32_t r = it->second;
            const std::uint64_t rc = it->first;
            for (std::uint32_t j : live_columns(r)) consider((rc - 1) * (size_of(j) - 1), r, j);
        }
        seen = 0;
        for (auto it = col_queue_.begin(); it != col_queue_.end() && seen < kSearchWidth; ++it, ++seen) {
            const std::uint32_t c = it->second;
            const std::uint64_t cc = it->first;
            for (const auto& cell : cols_[c]) consider((row_count_[cell.row] - 1) * (cc - 1), cell.row, c);
        }
        return {best_row, best_col};
    }

    void eliminate(std::uint32_t r, std::uint32_t c) {
        const std::vector<std::uint32_t> targets = live_columns(r);
        Column pivot_col = std::move(cols_[c]);
        cols_[c].clear();
        col_queue_.erase({static_cast<std::uint32_t>(pivot_col.size()), c});
        for (const auto& cell : pivot_col) row_queue_.erase({row_count_[cell.row], cell.row});
        for (std::uint32_t j : targets) {
            if (j != c) col_queue_.erase({size_of(j), j});
        }

        const Rational pivot = find_row(pivot_col, r)->value;
        for (std::uint32_t j : targets) {
            if (j == c) continue;
            const Rational factor = find_row(cols_[j], r)->value / pivot;
            Column merged;
            merged.reserve(cols_[j].size() + pivot_col.size());
            auto a = cols_[j].begin();
            auto b = pivot_col.begin();
            while (a != cols_[j].end() || b != pivot_col.end()) {
                if (b == pivot_col.end() || (a != cols_[j].end() && a->row < b->row)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == cols_[j].end() || b->row < a->row) {
                    merged.push_back({b->row, -(factor * b->value)});
                    ++row_count_[b->row];
                    row_cols_[b->row].push_back(j);
                    ++b;
                } else {
                    if (a->row != r) {
                        Rational v = a->value - factor * b->value;
                        if (v.is_zero()) {
                            --row_count_[a->row];
                        } else {
                            merged.push_back({a->row, std::move(v)});
                        }
                    } else {
                        --row_count_[r];
                    }
                    ++a;
                    ++b;
                }
            }
            cols_[j] = std::move(merged);
            if (!cols_[j].empty()) col_queue_.insert({size_of(j), j});
        }
        for (const auto& cell : pivot_col) {
            --row_count_[cell.row];
            if (row_count_[cell.row] > 0) row_queue_.insert({row_count_[cell.row], cell.row});
        }
        row_cols_[r].clear();
    }

    std::vector<Column> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<std::uint32_t> row_count_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> row_queue_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> col_queue_;
};

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    if (m.is_zero()) return 0;
    return MarkowitzEliminator(m).run();
}

std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    std::vector<SparseMatrix::Triplet> out;
    std::map<std::size_t, Rational> acc;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        acc.clear();
        for (const auto& bk : b.column(j)) {
            for (const auto& ai : a.column(bk.row)) acc[ai.row] += ai.value * bk.value;
        }
        for (auto& [row, value] : acc) {
            if (!value.is_zero()) out.emplace_back(row, j, std::move(value));
        }
    }
    return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

}  // namespace resolvent::exactlin
