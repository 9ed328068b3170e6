#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "modgroup/matrices.hpp"

namespace modgroup {

// Directed Cayley graph on the group elements reachable by words of length
// <= depth, with an edge v -> v*L for each letter L whenever the target is
// itself inside the vertex set.  Vertices are sorted by their canonical
// matrix entries, edges by (from, to, label).
struct CayleyGraph {
    std::vector<ProjectiveMatrix> vertices;
    std::vector<std::tuple<std::size_t, std::size_t, Letter>> edges;
};

CayleyGraph cayley_graph(unsigned depth);

// DOT digraph with vertices named by their matrix entries and edges
// labeled "U"/"S"; byte-identical across runs.
std::string to_dot(const CayleyGraph& g);

}  // namespace modgroup
