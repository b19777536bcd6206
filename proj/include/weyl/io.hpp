#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "weyl/graph.hpp"

namespace weyl {

// Text edge-list format:
//   bcg <n> <m>
//   <n characters over {s,l}>
//   u v [*]        (m lines, 0-based; '*' marks a strong edge)
struct EdgeListGraph {
    BichromaticGraph graph;
    std::set<std::pair<int, int>> strong;
};

void write_edge_list(std::ostream& os, const BichromaticGraph& g,
                     const std::set<std::pair<int, int>>* strong = nullptr);

EdgeListGraph read_edge_list(std::istream& is);
EdgeListGraph read_edge_list_file(const std::string& path);

// DOT export; vertex color is rendered as the node shape.
void write_dot(std::ostream& os, const BichromaticGraph& g);

}  // namespace weyl
