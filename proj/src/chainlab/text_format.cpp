#include "resolvent/chainlab/text_format.hpp"

#include <sstream>
#include <tuple>
#include <vector>

#include "resolvent/errors.hpp"

namespace resolvent::chainlab {

namespace {

void put_simplex(std::ostringstream& os, char tag, const Simplex& s) {
    os << tag;
    for (Vertex v : s) os << ' ' << v;
    os << '\n';
}

}  // namespace

std::string to_text(const SimplicialPair& p, const SignCocycle* lambda) {
    std::ostringstream os;
    os << "vertices " << p.num_vertices() << '\n';
    for (const auto& f : p.facets()) put_simplex(os, 'K', f);
    for (const auto& f : p.sub_facets()) put_simplex(os, 'L', f);
    if (lambda != nullptr) {
        lambda->check_attached(p);
        for (std::size_t e = 0; e < p.count(1); ++e) {
            auto s = p.simplex(1, e);
            os << "edge " << s[0] << ' ' << s[1] << ' ' << lambda->sign_at(e) << '\n';
        }
    }
    return os.str();
}

ParsedPair parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n_vertices;
    std::vector<Simplex> k_facets, l_facets;
    std::vector<std::tuple<Vertex, Vertex, int>> edges;
    auto fail = [&](const std::string& why) {
        throw DataError("line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "vertices") {
            std::size_t n = 0;
            if (!(ls >> n)) fail("vertex count expected");
            n_vertices = n;
        } else if (tag == "K" || tag == "L") {
            Simplex s;
            long v = 0;
            while (ls >> v) {
                if (v < 0) fail("negative vertex id");
                s.push_back(static_cast<Vertex>(v));
            }
            if (!ls.eof()) fail("vertex id expected");
            if (s.empty()) fail("empty simplex");
            (tag == "K" ? k_facets : l_facets).push_back(std::move(s));
        } else if (tag == "edge") {
            long u = 0, v = 0;
            int sign = 0;
            if (!(ls >> u >> v >> sign) || u < 0 || v < 0) fail("edge u v sign expected");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v), sign);
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (!n_vertices) {
        std::size_t n = 0;
        for (const auto& s : k_facets) {
            for (Vertex v : s) n = std::max<std::size_t>(n, v + 1);
        }
        n_vertices = n;
    }
    ParsedPair out;
    out.pair = SimplicialPair::from_facets(*n_vertices, k_facets, l_facets);
    if (!edges.empty()) out.cocycle = SignCocycle::from_edges(out.pair, edges);
    return out;
}

}  // namespace resolvent::chainlab
