#pragma once

#include <optional>
#include <set>
#include <vector>

#include "weyl/graph.hpp"

namespace weyl {

// Induced subgraph together with the map back to host vertex indices.
struct InducedSubgraph {
    BichromaticGraph graph;
    std::vector<int> to_host;  // local vertex -> host vertex
};

InducedSubgraph induced_subgraph(const BichromaticGraph& g, const VertexSet& vs);

// The induced subgraph on the neighbors of v.
InducedSubgraph local_graph(const BichromaticGraph& g, int v);

// Vertices adjacent to every member of s. s must be nonempty.
VertexSet common_neighbors(const BichromaticGraph& g, const VertexSet& s);

enum class CombineMode { DisjointUnion, Join, CartesianProduct };

// Standard graph constructions. Vertex order is the g-block followed by the
// h-block, and lexicographic on pairs for the product; product vertices take
// the color of the first factor.
BichromaticGraph combine(const BichromaticGraph& g, const BichromaticGraph& h,
                         CombineMode mode);

// The composition g[K2]: every vertex becomes an adjacent pair, and pairs are
// fully joined exactly when the original vertices are adjacent.
BichromaticGraph double_graph(const BichromaticGraph& g);

struct ReducedGraph {
    BichromaticGraph graph;    // one vertex per closed-neighborhood class
    std::vector<int> class_of;  // host vertex -> class index
};

// Quotient by the "equal closed neighborhood" equivalence. Classes mixing
// colors are rejected.
ReducedGraph reduced_graph(const BichromaticGraph& g);

enum class Restrict { All, ShortOnly, LongOnly };

// Connected components of g, or of the induced monochromatic subgraph,
// ordered by smallest member.
std::vector<VertexSet> components(const BichromaticGraph& g,
                                  Restrict r = Restrict::All);

struct DistanceProfile {
    std::vector<std::vector<int>> dist;  // -1 where unreachable
    bool connected = false;
    std::optional<int> diameter;  // empty exactly when disconnected
};

DistanceProfile distance_profile(const BichromaticGraph& g);

// A partition of the vertex set into monochromatic cliques.
struct CliquePartition {
    std::vector<VertexSet> blocks;
    std::vector<Color> block_color;
};

// Throws InputError unless pi partitions g's vertices into monochromatic
// cliques.
void validate_partition(const BichromaticGraph& g, const CliquePartition& pi);

// Contraction of g along a clique partition. Blocks X, Y are strongly
// connected (multiplicity 2) when every vertex of X has a neighbor in Y and
// vice versa; the bivalency of a block counts strong neighbors twice.
struct ContractedGraph {
    CliquePartition partition;
    BichromaticGraph quotient;                 // simple graph on blocks
    std::set<std::pair<int, int>> strong;      // block pairs a < b
    std::vector<int> bivalency;

    int multiplicity(int a, int b) const;
};

ContractedGraph contract(const BichromaticGraph& g, const CliquePartition& pi);

BichromaticGraph swap_colors(const BichromaticGraph& g);

// Proper 2-coloring with the smallest vertex of each component short, or
// empty if g has an odd cycle.
std::optional<std::vector<Color>> bipartition(const BichromaticGraph& g);

BichromaticGraph empty_graph(int n, Color c = Color::Long);
BichromaticGraph complete_graph(int n, Color c = Color::Long);
BichromaticGraph cycle_graph(int n, Color c = Color::Long);
BichromaticGraph path_graph(int n, Color c = Color::Long);

}  // namespace weyl
