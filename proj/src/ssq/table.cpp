#include "resolvent/ssq/table.hpp"

#include "resolvent/errors.hpp"

namespace resolvent::ssq {

std::string to_string(const Cell& c) { return "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")"; }

void E1Table::set(Cell c, std::size_t dim) {
    if (dim == 0) {
        entries_.erase(c);
    } else {
        entries_[c] = dim;
    }
}

void E1Table::add(Cell c, std::size_t dim) {
    if (dim != 0) entries_[c] += dim;
}

std::size_t E1Table::dim(Cell c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

void E1Table::set_unknown(Cell c, std::size_t max_dim) { unknowns_[c] = max_dim; }

E1Table E1Table::resolved(const std::map<Cell, std::size_t>& values) const {
    E1Table out = *this;
    for (const auto& [c, v] : values) {
        auto it = out.unknowns_.find(c);
        if (it == out.unknowns_.end()) throw DataError("no unknown entry at " + to_string(c));
        if (v > it->second) throw DataError("value out of range at " + to_string(c));
        out.unknowns_.erase(it);
        out.add(c, v);
    }
    return out;
}

std::vector<Cell> E1Table::support() const {
    std::vector<Cell> out;
    for (const auto& [c, d] : entries_) out.push_back(c);
    return out;
}

long E1Table::euler_characteristic() const {
    long chi = 0;
    for (const auto& [c, d] : entries_) chi += (c.total() % 2 == 0 ? 1L : -1L) * static_cast<long>(d);
    return chi;
}

std::string origin_name(Origin o) {
    switch (o) {
        case Origin::Known: return "known";
        case Origin::Forced: return "forced";
        case Origin::Solved: return "solved";
    }
    return "?";
}

DifferentialSpec differential(int page, Cell source, std::size_t rank, Origin origin, std::string citation) {
    if (page < 1) throw DataError("differential page must be >= 1");
    return {page, source, Cell{source.p - page, source.q + page - 1}, rank, origin, std::move(citation)};
}

std::string to_string(const DifferentialSpec& d) {
    return "d" + std::to_string(d.page) + " " + to_string(d.source) + " -> " + to_string(d.target) +
           " rank " + std::to_string(d.rank) + " [" + origin_name(d.origin) + "]";
}

}  // namespace resolvent::ssq
