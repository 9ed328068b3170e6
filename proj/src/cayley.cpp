#include "modgroup/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modgroup {

CayleyGraph cayley_graph(unsigned depth) {
    std::set<ProjectiveMatrix> seen{ProjectiveMatrix::identity()};
    std::vector<ProjectiveMatrix> frontier(seen.begin(), seen.end());
    for (unsigned d = 0; d < depth; ++d) {
        std::vector<ProjectiveMatrix> next;
        for (const ProjectiveMatrix& m : frontier) {
            for (Letter l : {Letter::U, Letter::S}) {
                ProjectiveMatrix t = multiply(m, letter_matrix(l));
                if (seen.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }

    CayleyGraph g;
    g.vertices.assign(seen.begin(), seen.end());
    std::map<ProjectiveMatrix, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;

    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (Letter l : {Letter::U, Letter::S}) {
            ProjectiveMatrix t = multiply(g.vertices[i], letter_matrix(l));
            auto it = index.find(t);
            if (it != index.end()) g.edges.emplace_back(i, it->second, l);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
        return std::tuple(std::get<0>(x), std::get<1>(x), to_char(std::get<2>(x))) <
               std::tuple(std::get<0>(y), std::get<1>(y), to_char(std::get<2>(y)));
    });
    return g;
}

std::string to_dot(const CayleyGraph& g) {
    std::string out = "digraph cayley {\n";
    for (const ProjectiveMatrix& v : g.vertices) out += "  \"" + v.str() + "\";\n";
    for (const auto& [from, to, label] : g.edges) {
        out += "  \"" + g.vertices[from].str() + "\" -> \"" + g.vertices[to].str() +
               "\" [label=\"" + to_char(label) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace modgroup
