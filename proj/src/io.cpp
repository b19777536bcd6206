#include "weyl/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace weyl {

void write_edge_list(std::ostream& os, const BichromaticGraph& g,
                     const std::set<std::pair<int, int>>* strong) {
    os << "bcg " << g.order() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.order(); ++v) os << color_char(g.color(v));
    os << '\n';
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) {
                os << v << ' ' << u;
                if (strong && strong->count({v, u})) os << " *";
                os << '\n';
            }
}

EdgeListGraph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw InputError("empty edge-list input");
    std::istringstream head(line);
    std::string magic;
    int n = 0;
    long m = 0;
    if (!(head >> magic >> n >> m) || magic != "bcg")
        throw InputError("bad edge-list header: expected 'bcg <n> <m>'");
    if (n < 0 || m < 0) throw InputError("negative count in header");
    if (!std::getline(is, line)) throw InputError("missing color line");
    if (static_cast<int>(line.size()) != n)
        throw InputError("color line length does not match vertex count");
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    for (char c : line) colors.push_back(color_from_char(c));
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> strong;
    for (long i = 0; i < m; ++i) {
        if (!std::getline(is, line))
            throw InputError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string mark;
        if (!(es >> u >> v))
            throw InputError("bad edge line " + std::to_string(i + 3) + ": " + line);
        edges.emplace_back(u, v);
        if (es >> mark) {
            if (mark != "*")
                throw InputError("bad edge marker on line " + std::to_string(i + 3));
            strong.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return {BichromaticGraph(n, std::move(colors), edges), std::move(strong)};
}

EdgeListGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_dot(std::ostream& os, const BichromaticGraph& g) {
    os << "graph bcg {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v << " [shape="
           << (g.color(v) == Color::Short ? "circle" : "box");
        if (g.has_labels()) os << ", label=\"" << g.label(v) << "\"";
        os << "];\n";
    }
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) os << "  " << v << " -- " << u << ";\n";
    os << "}\n";
}

}  // namespace weyl
