#include "weyl/graph_ops.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>

namespace weyl {

namespace {

std::vector<Edge> edge_list(const BichromaticGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.emplace_back(v, u);
    return edges;
}

}  // namespace

InducedSubgraph induced_subgraph(const BichromaticGraph& g, const VertexSet& vs) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
        if (pos[static_cast<std::size_t>(v)] != -1)
            throw InputError("duplicate vertex in set");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Color> colors;
    std::vector<std::string> labels;
    colors.reserve(vs.size());
    for (int v : vs) colors.push_back(g.color(v));
    if (g.has_labels())
        for (int v : vs) labels.push_back(g.label(v));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return {BichromaticGraph(static_cast<int>(vs.size()), std::move(colors),
                             edges, std::move(labels)),
            vs};
}

InducedSubgraph local_graph(const BichromaticGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
    return induced_subgraph(g, g.neighbors(v));
}

VertexSet common_neighbors(const BichromaticGraph& g, const VertexSet& s) {
    if (s.empty()) throw InputError("common_neighbors of an empty set");
    const int words = g.row_words();
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(words),
                                   ~std::uint64_t{0});
    for (int v : s) {
        if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
        auto r = g.row(v);
        for (int i = 0; i < words; ++i) acc[static_cast<std::size_t>(i)] &= r[i];
    }
    VertexSet out;
    for (int i = 0; i < words; ++i) {
        std::uint64_t w = acc[static_cast<std::size_t>(i)];
        while (w) {
            int b = std::countr_zero(w);
            int u = 64 * i + b;
            if (u < g.order()) out.push_back(u);
            w &= w - 1;
        }
    }
    return out;
}

BichromaticGraph combine(const BichromaticGraph& g, const BichromaticGraph& h,
                         CombineMode mode) {
    if (mode == CombineMode::CartesianProduct) {
        const int nh = h.order();
        const int n = g.order() * nh;
        std::vector<Color> colors;
        colors.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < nh; ++j) colors.push_back(g.color(i));
        std::vector<Edge> edges;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < nh; ++j) {
                for (int j2 : h.neighbors(j))
                    if (j < j2) edges.emplace_back(i * nh + j, i * nh + j2);
                for (int i2 : g.neighbors(i))
                    if (i < i2) edges.emplace_back(i * nh + j, i2 * nh + j);
            }
        return BichromaticGraph(n, std::move(colors), edges);
    }
    const int n = g.order() + h.order();
    std::vector<Color> colors = g.colors();
    colors.insert(colors.end(), h.colors().begin(), h.colors().end());
    std::vector<Edge> edges = edge_list(g);
    for (const auto& [u, v] : edge_list(h))
        edges.emplace_back(u + g.order(), v + g.order());
    if (mode == CombineMode::Join)
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < h.order(); ++v)
                edges.emplace_back(u, g.order() + v);
    return BichromaticGraph(n, std::move(colors), edges);
}

BichromaticGraph double_graph(const BichromaticGraph& g) {
    const int n = 2 * g.order();
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < g.order(); ++v) {
        colors.push_back(g.color(v));
        colors.push_back(g.color(v));
    }
    std::vector<Edge> edges;
    for (int v = 0; v < g.order(); ++v) {
        edges.emplace_back(2 * v, 2 * v + 1);
        for (int u : g.neighbors(v))
            if (v < u)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        edges.emplace_back(2 * v + a, 2 * u + b);
    }
    return BichromaticGraph(n, std::move(colors), edges);
}

ReducedGraph reduced_graph(const BichromaticGraph& g) {
    const int n = g.order();
    const int words = g.row_words();
    // closed neighborhood rows
    std::vector<std::vector<std::uint64_t>> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto r = g.row(v);
        closed[static_cast<std::size_t>(v)].assign(r.begin(), r.end());
        if (words > 0)
            closed[static_cast<std::size_t>(v)][static_cast<std::size_t>(v / 64)] |=
                1ULL << (v % 64);
    }
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        if (class_of[static_cast<std::size_t>(v)] != -1) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(v);
        class_of[static_cast<std::size_t>(v)] = c;
        for (int u = v + 1; u < n; ++u) {
            if (class_of[static_cast<std::size_t>(u)] != -1) continue;
            if (closed[static_cast<std::size_t>(u)] == closed[static_cast<std::size_t>(v)]) {
                if (g.color(u) != g.color(v))
                    throw InputError(
                        "closed-neighborhood class mixes colors at vertices " +
                        std::to_string(v) + " and " + std::to_string(u));
                class_of[static_cast<std::size_t>(u)] = c;
            }
        }
    }
    std::vector<Color> colors;
    colors.reserve(reps.size());
    for (int r : reps) colors.push_back(g.color(r));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (g.adjacent(reps[i], reps[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return {BichromaticGraph(static_cast<int>(reps.size()), std::move(colors), edges),
            std::move(class_of)};
}

std::vector<VertexSet> components(const BichromaticGraph& g, Restrict r) {
    const int n = g.order();
    auto in_scope = [&](int v) {
        switch (r) {
            case Restrict::ShortOnly: return g.color(v) == Color::Short;
            case Restrict::LongOnly: return g.color(v) == Color::Long;
            default: return true;
        }
    };
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexSet> out;
    for (int v = 0; v < n; ++v) {
        if (!in_scope(v) || seen[static_cast<std::size_t>(v)]) continue;
        VertexSet comp;
        std::deque<int> queue{v};
        seen[static_cast<std::size_t>(v)] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (int u : g.neighbors(x))
                if (in_scope(u) && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

DistanceProfile distance_profile(const BichromaticGraph& g) {
    const int n = g.order();
    const int words = g.row_words();
    DistanceProfile profile;
    profile.dist.assign(static_cast<std::size_t>(n),
                        std::vector<int>(static_cast<std::size_t>(n), -1));
    int diameter = 0;
    bool connected = true;
    std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words));
    std::vector<std::uint64_t> visited(static_cast<std::size_t>(words));
    std::vector<std::uint64_t> next(static_cast<std::size_t>(words));
    for (int s = 0; s < n; ++s) {
        std::fill(frontier.begin(), frontier.end(), 0);
        std::fill(visited.begin(), visited.end(), 0);
        frontier[static_cast<std::size_t>(s / 64)] = 1ULL << (s % 64);
        visited = frontier;
        int d = 0;
        auto& row_out = profile.dist[static_cast<std::size_t>(s)];
        row_out[static_cast<std::size_t>(s)] = 0;
        int reached = 1;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int i = 0; i < words; ++i) {
                std::uint64_t w = frontier[static_cast<std::size_t>(i)];
                while (w) {
                    int b = std::countr_zero(w);
                    auto r = g.row(64 * i + b);
                    for (int k = 0; k < words; ++k)
                        next[static_cast<std::size_t>(k)] |= r[k];
                    w &= w - 1;
                }
            }
            bool any = false;
            ++d;
            for (int k = 0; k < words; ++k) {
                std::uint64_t fresh = next[static_cast<std::size_t>(k)] &
                                      ~visited[static_cast<std::size_t>(k)];
                next[static_cast<std::size_t>(k)] = fresh;
                visited[static_cast<std::size_t>(k)] |= fresh;
                while (fresh) {
                    int b = std::countr_zero(fresh);
                    row_out[static_cast<std::size_t>(64 * k + b)] = d;
                    ++reached;
                    any = true;
                    fresh &= fresh - 1;
                }
            }
            if (!any) break;
            frontier = next;
            diameter = std::max(diameter, d);
        }
        if (reached < n) connected = false;
    }
    profile.connected = connected && n > 0;
    if (n == 0) profile.connected = true;  // the empty graph is trivially connected
    if (profile.connected) profile.diameter = diameter;
    return profile;
}

void validate_partition(const BichromaticGraph& g, const CliquePartition& pi) {
    if (pi.blocks.size() != pi.block_color.size())
        throw InputError("block color list does not match block list");
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::size_t total = 0;
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        const auto& block = pi.blocks[b];
        if (block.empty()) throw InputError("empty partition block");
        for (int v : block) {
            if (v < 0 || v >= g.order()) throw InputError("block vertex out of range");
            if (seen[static_cast<std::size_t>(v)])
                throw InputError("vertex " + std::to_string(v) +
                                 " appears in two blocks");
            seen[static_cast<std::size_t>(v)] = true;
            if (g.color(v) != pi.block_color[b])
                throw InputError("block " + std::to_string(b) +
                                 " is not monochromatic");
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.adjacent(block[i], block[j]))
                    throw InputError("block " + std::to_string(b) +
                                     " does not induce a clique");
        total += block.size();
    }
    if (total != static_cast<std::size_t>(g.order()))
        throw InputError("blocks do not cover the vertex set");
}

int ContractedGraph::multiplicity(int a, int b) const {
    if (!quotient.adjacent(a, b)) return 0;
    auto key = std::minmax(a, b);
    return strong.count({key.first, key.second}) ? 2 : 1;
}

ContractedGraph contract(const BichromaticGraph& g, const CliquePartition& pi) {
    validate_partition(g, pi);
    const int nb = static_cast<int>(pi.blocks.size());
    std::vector<int> block_of(static_cast<std::size_t>(g.order()), -1);
    for (int b = 0; b < nb; ++b)
        for (int v : pi.blocks[static_cast<std::size_t>(b)])
            block_of[static_cast<std::size_t>(v)] = b;

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> strong;
    for (int a = 0; a < nb; ++a) {
        for (int b = a + 1; b < nb; ++b) {
            bool any = false;
            bool all_a = true, all_b = true;
            for (int v : pi.blocks[static_cast<std::size_t>(a)]) {
                bool hit = false;
                for (int u : pi.blocks[static_cast<std::size_t>(b)])
                    if (g.adjacent(v, u)) {
                        hit = true;
                        break;
                    }
                any = any || hit;
                all_a = all_a && hit;
            }
            for (int u : pi.blocks[static_cast<std::size_t>(b)]) {
                bool hit = false;
                for (int v : pi.blocks[static_cast<std::size_t>(a)])
                    if (g.adjacent(v, u)) {
                        hit = true;
                        break;
                    }
                all_b = all_b && hit;
            }
            if (any) {
                edges.emplace_back(a, b);
                if (all_a && all_b) strong.insert({a, b});
            }
        }
    }
    BichromaticGraph quotient(nb, pi.block_color, edges);
    std::vector<int> bivalency(static_cast<std::size_t>(nb), 0);
    for (int a = 0; a < nb; ++a) {
        int s = 0;
        for (int b : quotient.neighbors(a)) {
            auto key = std::minmax(a, b);
            s += strong.count({key.first, key.second}) ? 2 : 1;
        }
        bivalency[static_cast<std::size_t>(a)] = s;
    }
    return {pi, std::move(quotient), std::move(strong), std::move(bivalency)};
}

BichromaticGraph swap_colors(const BichromaticGraph& g) {
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(g.order()));
    for (Color c : g.colors())
        colors.push_back(c == Color::Short ? Color::Long : Color::Short);
    return BichromaticGraph(g.order(), std::move(colors), edge_list(g), g.labels());
}

std::optional<std::vector<Color>> bipartition(const BichromaticGraph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(u)] == -1) {
                    side[static_cast<std::size_t>(u)] =
                        1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                } else if (side[static_cast<std::size_t>(u)] ==
                           side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Color> colors(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        colors[static_cast<std::size_t>(v)] =
            side[static_cast<std::size_t>(v)] == 0 ? Color::Short : Color::Long;
    return colors;
}

BichromaticGraph empty_graph(int n, Color c) {
    return BichromaticGraph(n, uniform_colors(n, c), {});
}

BichromaticGraph complete_graph(int n, Color c) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return BichromaticGraph(n, uniform_colors(n, c), edges);
}

BichromaticGraph cycle_graph(int n, Color c) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return BichromaticGraph(n, uniform_colors(n, c), edges);
}

BichromaticGraph path_graph(int n, Color c) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return BichromaticGraph(n, uniform_colors(n, c), edges);
}

}  // namespace weyl
