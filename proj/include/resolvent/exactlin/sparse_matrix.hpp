#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "resolvent/exactlin/rational.hpp"

namespace resolvent::exactlin {

/// Column-compressed sparse matrix over Q. Stored values are never zero and
/// each column keeps its entries sorted by row.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        Rational value;
    };
    using Triplet = std::tuple<std::size_t, std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t n_rows, std::size_t n_cols);

    static SparseMatrix identity(std::size_t n);
    /// Duplicate (row, col) keys are summed; resulting zeros are dropped.
    static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                      std::vector<Triplet> triplets);

    [[nodiscard]] std::size_t rows() const noexcept { return n_rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return n_cols_; }
    [[nodiscard]] std::size_t nnz() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return nnz() == 0; }

    /// Setting a zero removes the entry. Throws ShapeError on out-of-range indices.
    void set(std::size_t row, std::size_t col, const Rational& value);
    [[nodiscard]] Rational get(std::size_t row, std::size_t col) const;
    [[nodiscard]] std::span<const Entry> column(std::size_t col) const;

    [[nodiscard]] SparseMatrix transpose() const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Dimension of the column space. Fraction-aware sparse elimination with
/// Markowitz pivoting; the pivot sequence is deterministic.
[[nodiscard]] std::size_t rank(const SparseMatrix& m);

/// n_cols - rank(m).
[[nodiscard]] std::size_t kernel_dim(const SparseMatrix& m);

/// Exact product a * b. Throws ShapeError when a.cols() != b.rows().
[[nodiscard]] SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace resolvent::exactlin
