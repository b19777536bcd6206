#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

// Vertex color of a bichromatic graph. Monochromatic graphs are all-long.
enum class Color : std::uint8_t { Short = 0, Long = 1 };

char color_char(Color c);        // 's' or 'l'
Color color_from_char(char c);   // throws InputError on anything else

// Malformed arguments or malformed input data.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates a structural precondition; the message
// carries the witness.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size cap or search budget was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<int>;

std::vector<Color> uniform_colors(int n, Color c);

// Finite simple undirected graph with a short/long color on every vertex.
// Adjacency is kept as one bitset row per vertex; immutable once built.
class BichromaticGraph {
public:
    BichromaticGraph() = default;
    BichromaticGraph(int n, std::vector<Color> colors,
                     const std::vector<Edge>& edges,
                     std::vector<std::string> labels = {});

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }

    Color color(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    int count(Color c) const;

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::string& label(int v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Adjacency row of v as 64-bit words; bit j of word i is vertex 64*i + j.
    std::span<const std::uint64_t> row(int v) const;
    int row_words() const noexcept { return words_; }

    bool operator==(const BichromaticGraph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::size_t edges_ = 0;
    std::vector<Color> colors_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

// Builds a graph from an explicit edge list; duplicate edges collapse.
// Loops and out-of-range endpoints are rejected.
BichromaticGraph build_graph(int n, std::vector<Color> colors,
                             const std::vector<Edge>& edges,
                             std::vector<std::string> labels = {});

}  // namespace weyl
