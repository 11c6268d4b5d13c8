#include "resolvent/ssq/render.hpp"

#include <algorithm>
#include <sstream>

namespace resolvent::ssq {

nlohmann::ordered_json table_json(const E1Table& t) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [c, d] : t.entries()) out.push_back({{"p", c.p}, {"q", c.q}, {"dim", d}});
    return out;
}

nlohmann::ordered_json spec_json(const DifferentialSpec& d) {
    return {{"page", d.page},
            {"source", {d.source.p, d.source.q}},
            {"target", {d.target.p, d.target.q}},
            {"rank", d.rank},
            {"origin", origin_name(d.origin)},
            {"citation", d.citation}};
}

nlohmann::ordered_json poincare_json(const PoincarePolynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [deg, c] : p.coefficients()) out.push_back({deg, c});
    return out;
}

nlohmann::ordered_json pipeline_json(const PipelineResult& r) {
    auto diffs = nlohmann::ordered_json::array();
    for (const auto& d : r.differentials) diffs.push_back(spec_json(d));
    return {{"k", r.k},
            {"parity", catalog::parity_name(r.parity)},
            {"e1", table_json(r.e1)},
            {"einf", table_json(r.einf)},
            {"differentials", diffs},
            {"poincare", poincare_json(r.poincare)}};
}

std::string render_table(const E1Table& t) {
    std::vector<Cell> cells = t.support();
    for (const auto& [c, m] : t.unknowns()) cells.push_back(c);
    if (cells.empty()) return "(empty)\n";
    int p_lo = cells.front().p, p_hi = p_lo, q_lo = cells.front().q, q_hi = q_lo;
    for (const auto& c : cells) {
        p_lo = std::min(p_lo, c.p);
        p_hi = std::max(p_hi, c.p);
        q_lo = std::min(q_lo, c.q);
        q_hi = std::max(q_hi, c.q);
    }
    p_lo = std::min(p_lo, 1);
    std::ostringstream os;
    auto cell_text = [&](Cell c) -> std::string {
        if (t.unknowns().count(c)) return "?";
        const auto d = t.dim(c);
        return d == 0 ? "." : std::to_string(d);
    };
    for (int q = q_hi; q >= q_lo; --q) {
        std::string label = std::to_string(q);
        os << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ') << label << " |";
        for (int p = p_lo; p <= p_hi; ++p) {
            const std::string s = cell_text(Cell{p, q});
            os << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s;
        }
        os << '\n';
    }
    os << "     +" << std::string(static_cast<std::size_t>(3 * (p_hi - p_lo + 1)), '-') << '\n' << "      ";
    for (int p = p_lo; p <= p_hi; ++p) {
        const std::string s = std::to_string(p);
        os << std::string(s.size() < 3 ? 3 - s.size() : 0, ' ') << s;
    }
    os << "   (p across, q up)\n";
    return os.str();
}

}  // namespace resolvent::ssq
