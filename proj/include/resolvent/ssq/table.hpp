#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace resolvent::ssq {

struct Cell {
    int p = 0;
    int q = 0;
    [[nodiscard]] int total() const noexcept { return p + q; }
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

[[nodiscard]] std::string to_string(const Cell& c);

/// Dimensions of a spectral-sequence page, with optional undetermined
/// entries (each known only to lie in 0..max).
class E1Table {
public:
    E1Table() = default;
    E1Table(int k, int ambient_dim) : k_(k), ambient_(ambient_dim) {}

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int ambient_dim() const noexcept { return ambient_; }

    /// Setting 0 removes the entry.
    void set(Cell c, std::size_t dim);
    void add(Cell c, std::size_t dim);
    [[nodiscard]] std::size_t dim(Cell c) const;
    [[nodiscard]] const std::map<Cell, std::size_t>& entries() const noexcept { return entries_; }

    void set_unknown(Cell c, std::size_t max_dim);
    [[nodiscard]] const std::map<Cell, std::size_t>& unknowns() const noexcept { return unknowns_; }
    /// Replaces unknowns by values; cells not mentioned keep their marker.
    [[nodiscard]] E1Table resolved(const std::map<Cell, std::size_t>& values) const;

    [[nodiscard]] std::vector<Cell> support() const;
    [[nodiscard]] long euler_characteristic() const;

    friend bool operator==(const E1Table&, const E1Table&) = default;

private:
    int k_ = 0;
    int ambient_ = 0;
    std::map<Cell, std::size_t> entries_;
    std::map<Cell, std::size_t> unknowns_;
};

enum class Origin { Known, Forced, Solved };

[[nodiscard]] std::string origin_name(Origin o);

/// d^page : E_{source} -> E_{source + (-page, page - 1)} of the given rank.
struct DifferentialSpec {
    int page = 1;
    Cell source;
    Cell target;
    std::size_t rank = 1;
    Origin origin = Origin::Known;
    std::string citation;

    friend bool operator==(const DifferentialSpec& a, const DifferentialSpec& b) {
        return a.page == b.page && a.source == b.source && a.target == b.target && a.rank == b.rank;
    }
};

[[nodiscard]] DifferentialSpec differential(int page, Cell source, std::size_t rank, Origin origin,
                                            std::string citation = {});
[[nodiscard]] std::string to_string(const DifferentialSpec& d);

}  // namespace resolvent::ssq
