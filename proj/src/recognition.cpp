#include "weyl/recognition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "weyl/root_system.hpp"

namespace weyl {

LocalProfile local_profile(const BichromaticGraph& g) {
    LocalProfile out;
    out.homogeneous = true;
    std::optional<int> first_short, first_long;
    for (int v = 0; v < g.order(); ++v) {
        const bool is_short = g.color(v) == Color::Short;
        auto& slot = is_short ? out.short_local : out.long_local;
        auto& first = is_short ? first_short : first_long;
        Certificate cert = canonical_form(local_graph(g, v).graph);
        if (!slot) {
            slot = std::move(cert);
            first = v;
        } else if (!(*slot == cert)) {
            out.homogeneous = false;
            out.witness = {*first, v};
            return out;
        }
    }
    return out;
}

LocalReference local_reference(const std::optional<BichromaticGraph>& short_ref,
                               const std::optional<BichromaticGraph>& long_ref) {
    LocalReference ref;
    if (short_ref) ref.short_cert = canonical_form(*short_ref);
    if (long_ref) ref.long_cert = canonical_form(*long_ref);
    return ref;
}

LocalLikeResult is_locally_like(const BichromaticGraph& g, const LocalReference& ref) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& expected =
            g.color(v) == Color::Short ? ref.short_cert : ref.long_cert;
        if (!expected) return {false, v};
        if (!(canonical_form(local_graph(g, v).graph) == *expected))
            return {false, v};
    }
    return {true, {}};
}

LocalLikeResult is_locally_like(const BichromaticGraph& g,
                                const std::optional<BichromaticGraph>& short_ref,
                                const std::optional<BichromaticGraph>& long_ref) {
    return is_locally_like(g, local_reference(short_ref, long_ref));
}

CotriangularResult is_cotriangular(const BichromaticGraph& g) {
    const int n = g.order();
    const int words = g.row_words();
    std::vector<std::uint64_t> universe(static_cast<std::size_t>(words), 0);
    for (int v = 0; v < n; ++v)
        universe[static_cast<std::size_t>(v / 64)] |= 1ULL << (v % 64);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            bool found = false;
            auto rx = g.row(x);
            auto ry = g.row(y);
            for (int z = 0; z < n && !found; ++z) {
                if (z == x || z == y || g.adjacent(z, x) || g.adjacent(z, y)) continue;
                auto rz = g.row(z);
                bool ok = true;
                for (int w = 0; w < words; ++w) {
                    const std::uint64_t a = rx[w], b = ry[w], c = rz[w];
                    const std::uint64_t all = a & b & c;
                    const std::uint64_t one =
                        (a & ~b & ~c) | (~a & b & ~c) | (~a & ~b & c);
                    std::uint64_t rest = universe[static_cast<std::size_t>(w)];
                    if (x / 64 == w) rest &= ~(1ULL << (x % 64));
                    if (y / 64 == w) rest &= ~(1ULL << (y % 64));
                    if (z / 64 == w) rest &= ~(1ULL << (z % 64));
                    if (rest & ~(all | one)) {
                        ok = false;
                        break;
                    }
                }
                found = ok;
            }
            if (!found) return {false, {{x, y}}};
        }
    }
    return {true, {}};
}

CliquePartition clique_partition(const BichromaticGraph& g, int k) {
    if (k < 1) throw InputError("clique size must be positive");
    const int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    CliquePartition pi;
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        // monochromatic component of v
        VertexSet comp;
        std::vector<int> stack{v};
        seen[static_cast<std::size_t>(v)] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int u : g.neighbors(x))
                if (g.color(u) == g.color(v) && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        bool clique = static_cast<int>(comp.size()) == k;
        for (std::size_t i = 0; clique && i < comp.size(); ++i)
            for (std::size_t j = i + 1; clique && j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) clique = false;
        if (!clique) {
            std::ostringstream os;
            os << "monochromatic component {";
            for (std::size_t i = 0; i < comp.size(); ++i)
                os << (i ? "," : "") << comp[i];
            os << "} is not a " << k << "-clique";
            throw StructureError(os.str());
        }
        pi.blocks.push_back(std::move(comp));
        pi.block_color.push_back(g.color(v));
    }
    return pi;
}

bool MuReport::mu_constant(int value) const {
    for (const auto& p : same_type)
        if (p.mu != value) return false;
    return true;
}

MuReport mu_report(const BichromaticGraph& g) {
    auto like = is_locally_like(g, wf4_local_reference());
    if (!like.ok)
        throw StructureError("mu_report: graph is not locally like the F4 Weyl graph"
                             " (witness vertex " +
                             std::to_string(like.witness.value_or(-1)) + ")");
    MuReport report;
    auto note = [](std::optional<int>& lo, std::optional<int>& hi, int v) {
        lo = lo ? std::min(*lo, v) : v;
        hi = hi ? std::max(*hi, v) : v;
    };
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            if (g.adjacent(x, y)) continue;
            VertexSet common = common_neighbors(g, {x, y});
            if (common.empty()) continue;  // distance > 2
            std::ostringstream where;
            where << "distance-2 pair (" << x << "," << y << ")";
            if (g.color(x) == g.color(y)) {
                const Color opposite =
                    g.color(x) == Color::Short ? Color::Long : Color::Short;
                if (common.size() > 3)
                    throw StructureError(where.str() + ": more than 3 common neighbors");
                for (int u : common)
                    if (g.color(u) != opposite)
                        throw StructureError(where.str() +
                                             ": common neighbor of the same color");
                for (std::size_t i = 0; i < common.size(); ++i)
                    for (std::size_t j = i + 1; j < common.size(); ++j)
                        if (g.adjacent(common[i], common[j]))
                            throw StructureError(where.str() +
                                                 ": common neighborhood not a coclique");
                int mu = static_cast<int>(common.size());
                report.same_type.push_back({x, y, mu});
                note(report.mu_min, report.mu_max, mu);
            } else {
                // must decompose into monochromatic 2-cliques
                int short_edges = 0, long_edges = 0;
                for (int u : common) {
                    int partner = -1;
                    for (int w : common) {
                        if (w == u || !g.adjacent(u, w)) continue;
                        if (partner != -1)
                            throw StructureError(where.str() +
                                                 ": common neighborhood not a union of edges");
                        partner = w;
                    }
                    if (partner == -1 || g.color(partner) != g.color(u))
                        throw StructureError(where.str() +
                                             ": common neighborhood not monochromatic edges");
                    if (u < partner)
                        (g.color(u) == Color::Short ? short_edges : long_edges) += 1;
                }
                if (short_edges + long_edges < 1 || short_edges + long_edges > 2)
                    throw StructureError(where.str() + ": mixed mu out of range");
                report.mixed.push_back({x, y, short_edges, long_edges});
                note(report.mu_s_min, report.mu_s_max, short_edges);
                note(report.mu_l_min, report.mu_l_max, long_edges);
            }
        }
    }
    return report;
}

bool is_tightly_connected(const BichromaticGraph& g) {
    const auto short_comps = components(g, Restrict::ShortOnly);
    const auto long_comps = components(g, Restrict::LongOnly);
    auto meets = [&](int v, const VertexSet& comp) {
        for (int u : comp)
            if (g.adjacent(v, u)) return true;
        return false;
    };
    for (int v = 0; v < g.order(); ++v) {
        const auto& targets = g.color(v) == Color::Long ? short_comps : long_comps;
        for (const auto& comp : targets)
            if (!meets(v, comp)) return false;
    }
    return true;
}

namespace {

void check_clique_block(const BichromaticGraph& g, const VertexSet& block,
                        const char* name) {
    if (block.size() != 4)
        throw StructureError(std::string("twist: ") + name + " is not a 4-set");
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (g.color(block[i]) != g.color(block[0]))
            throw StructureError(std::string("twist: ") + name +
                                 " is not monochromatic");
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (!g.adjacent(block[i], block[j]))
                throw StructureError(std::string("twist: ") + name +
                                     " is not a clique");
    }
}

std::vector<Edge> all_edges(const BichromaticGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.emplace_back(v, u);
    return edges;
}

}  // namespace

BichromaticGraph twist(const BichromaticGraph& g, const VertexSet& block_x,
                       const VertexSet& block_y) {
    check_clique_block(g, block_x, "first block");
    check_clique_block(g, block_y, "second block");
    if (g.color(block_x[0]) == g.color(block_y[0]))
        throw StructureError("twist: blocks have the same color");
    // group the first block by neighborhoods in the second
    std::map<VertexSet, std::vector<int>> groups;
    for (int x : block_x) {
        VertexSet nb;
        for (int y : block_y)
            if (g.adjacent(x, y)) nb.push_back(y);
        if (nb.empty())
            throw StructureError("twist: blocks are not strongly connected");
        if (nb.size() != 2)
            throw StructureError("twist: vertex " + std::to_string(x) +
                                 " does not see exactly two vertices of the other block");
        groups[nb].push_back(x);
    }
    if (groups.size() != 2)
        throw StructureError("twist: pairing pattern not present");
    auto it = groups.begin();
    const VertexSet pair_p = it->first;
    const std::vector<int> xs_a = it->second;
    ++it;
    const VertexSet pair_q = it->first;
    const std::vector<int> xs_b = it->second;
    if (xs_a.size() != 2 || xs_b.size() != 2)
        throw StructureError("twist: pairing pattern not present");
    VertexSet covered = pair_p;
    covered.insert(covered.end(), pair_q.begin(), pair_q.end());
    std::sort(covered.begin(), covered.end());
    if (covered != block_y)
        throw StructureError("twist: pairing does not cover the other block");

    std::set<Edge> edges;
    for (const Edge& e : all_edges(g)) edges.insert(e);
    auto normalized = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
    for (int x : xs_a)
        for (int y : pair_p) edges.erase(normalized(x, y));
    for (int x : xs_b)
        for (int y : pair_q) edges.erase(normalized(x, y));
    for (int x : xs_a)
        for (int y : pair_q) edges.insert(normalized(x, y));
    for (int x : xs_b)
        for (int y : pair_p) edges.insert(normalized(x, y));
    std::vector<Edge> list(edges.begin(), edges.end());
    return BichromaticGraph(g.order(), g.colors(), list, g.labels());
}

BichromaticGraph twist_first(const BichromaticGraph& g) {
    CliquePartition pi = clique_partition(g, 4);
    ContractedGraph ctr = contract(g, pi);
    for (const auto& [a, b] : ctr.strong)
        if (pi.block_color[static_cast<std::size_t>(a)] !=
            pi.block_color[static_cast<std::size_t>(b)])
            return twist(g, pi.blocks[static_cast<std::size_t>(a)],
                         pi.blocks[static_cast<std::size_t>(b)]);
    throw StructureError("twist: no strongly connected opposite-color block pair");
}

std::pair<int, int> two_subset(int index) {
    static constexpr std::array<std::pair<int, int>, 6> table = {
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    if (index < 0 || index >= 6) throw InputError("2-subset index out of range");
    return table[static_cast<std::size_t>(index)];
}

namespace {

bool is_strong_edge(const std::set<std::pair<int, int>>& strong, int a, int b) {
    return strong.count({std::min(a, b), std::max(a, b)}) != 0;
}

int strong_degree(const BichromaticGraph& g, const std::set<std::pair<int, int>>& strong,
                  int v) {
    int s = 0;
    for (int u : g.neighbors(v))
        if (is_strong_edge(strong, v, u)) ++s;
    return s;
}

void check_host(const BichromaticGraph& lambda,
                const std::set<std::pair<int, int>>& strong) {
    if (lambda.order() == 0) throw InputError("empty host graph");
    if (components(lambda).size() != 1)
        throw InputError("host graph is not connected");
    for (const auto& [a, b] : strong)
        if (a < 0 || b < 0 || a >= lambda.order() || b >= lambda.order() ||
            !lambda.adjacent(a, b))
            throw InputError("strong marker on a non-edge");
}

bool properly_colored(const BichromaticGraph& g) {
    bool has_short = false, has_long = false;
    for (int v = 0; v < g.order(); ++v)
        (g.color(v) == Color::Short ? has_short : has_long) = true;
    if (!has_short || !has_long) return g.order() == 1;
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (g.color(u) == g.color(v)) return false;
    return true;
}

// per-vertex assignment used on every bivalency-6 vertex
void label_six_valent(EdgeLabeling& lab, const BichromaticGraph& lambda,
                      const std::set<std::pair<int, int>>& strong, int x) {
    VertexSet strong_nbs, plain_nbs;
    for (int y : lambda.neighbors(x))
        (is_strong_edge(strong, x, y) ? strong_nbs : plain_nbs).push_back(y);
    if (strong_nbs.size() > 3)
        throw InputError("more than 3 strong edges at vertex " + std::to_string(x));
    std::array<bool, 6> taken{};
    std::size_t slot = 0;
    for (int y : strong_nbs) {
        lab.subset[{x, y}] = static_cast<int>(slot);
        taken[slot] = true;
        taken[5 - slot] = true;  // complement stays free of ordinary labels
        ++slot;
    }
    std::size_t next = 0;
    for (int y : plain_nbs) {
        while (next < 6 && taken[next]) ++next;
        if (next == 6)
            throw InputError("cannot label the neighbors of vertex " + std::to_string(x));
        lab.subset[{x, y}] = static_cast<int>(next);
        taken[next] = true;
    }
}

void validate_six_valent(const EdgeLabeling& lab, const BichromaticGraph& lambda,
                         const std::set<std::pair<int, int>>& strong, int x) {
    std::array<bool, 6> used{};
    for (int y : lambda.neighbors(x)) {
        auto it = lab.subset.find({x, y});
        if (it == lab.subset.end())
            throw InputError("labeling misses edge (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
        if (it->second < 0 || it->second >= 6)
            throw InputError("labeling value out of range");
        if (used[static_cast<std::size_t>(it->second)])
            throw InputError("labeling not injective at vertex " + std::to_string(x));
        used[static_cast<std::size_t>(it->second)] = true;
    }
    for (int y : lambda.neighbors(x)) {
        if (!is_strong_edge(strong, x, y)) continue;
        int comp = 5 - lab.subset.at({x, y});
        if (used[static_cast<std::size_t>(comp)])
            throw InputError("complement rule violated at strong edge (" +
                             std::to_string(x) + "," + std::to_string(y) + ")");
    }
}

BichromaticGraph assemble_blocks(const BichromaticGraph& lambda,
                                 const std::vector<Color>& block_colors,
                                 const std::set<std::pair<int, int>>& strong,
                                 const EdgeLabeling& lab) {
    const int nb = lambda.order();
    std::vector<Color> colors(static_cast<std::size_t>(4 * nb));
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i < 4; ++i)
            colors[static_cast<std::size_t>(4 * b + i)] =
                block_colors[static_cast<std::size_t>(b)];
    std::vector<Edge> edges;
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                edges.emplace_back(4 * b + i, 4 * b + j);
    auto cross = [&](int x, int y, int sx, int sy) {
        auto [i1, i2] = two_subset(sx);
        auto [j1, j2] = two_subset(sy);
        for (int i : {i1, i2})
            for (int j : {j1, j2})
                edges.emplace_back(4 * x + i - 1, 4 * y + j - 1);
    };
    for (int x = 0; x < nb; ++x)
        for (int y : lambda.neighbors(x)) {
            if (x > y) continue;
            const int sx = lab.subset.at({x, y});
            const int sy = lab.subset.at({y, x});
            cross(x, y, sx, sy);
            if (is_strong_edge(strong, x, y)) cross(x, y, 5 - sx, 5 - sy);
        }
    return BichromaticGraph(4 * nb, std::move(colors), edges);
}

}  // namespace

EdgeLabeling canonical_edge_labeling(const BichromaticGraph& lambda,
                                     const std::set<std::pair<int, int>>& strong) {
    EdgeLabeling lab;
    for (int x = 0; x < lambda.order(); ++x)
        label_six_valent(lab, lambda, strong, x);
    return lab;
}

LambdaBuild build_locally_f4(const BichromaticGraph& lambda,
                             const std::set<std::pair<int, int>>& strong,
                             const std::optional<EdgeLabeling>& labeling) {
    check_host(lambda, strong);
    std::vector<Color> block_colors;
    if (properly_colored(lambda)) {
        block_colors = lambda.colors();
    } else {
        auto coloring = bipartition(lambda);
        if (!coloring) throw InputError("host graph is not bipartite");
        block_colors = *coloring;
    }
    for (int v = 0; v < lambda.order(); ++v)
        if (lambda.degree(v) + strong_degree(lambda, strong, v) != 6)
            throw InputError("bivalency is not 6 at vertex " + std::to_string(v));
    EdgeLabeling lab;
    if (labeling) {
        lab = *labeling;
        for (int x = 0; x < lambda.order(); ++x)
            validate_six_valent(lab, lambda, strong, x);
    } else {
        lab = canonical_edge_labeling(lambda, strong);
    }
    BichromaticGraph graph = assemble_blocks(lambda, block_colors, strong, lab);
    auto like = is_locally_like(graph, wf4_local_reference());
    if (!like.ok)
        throw StructureError("constructed graph is not locally like the F4 Weyl graph");
    BichromaticGraph lambda_colored(lambda.order(), block_colors, all_edges(lambda),
                                    lambda.labels());
    return {std::move(graph), std::move(lambda_colored)};
}

LambdaBuild build_locally_b4(const BichromaticGraph& lambda,
                             const std::set<std::pair<int, int>>& strong,
                             const std::optional<EdgeLabeling>& labeling) {
    check_host(lambda, strong);
    const int nb = lambda.order();
    std::vector<Color> block_colors(static_cast<std::size_t>(nb));
    for (int v = 0; v < nb; ++v) {
        const int bivalency = lambda.degree(v) + strong_degree(lambda, strong, v);
        if (bivalency == 6)
            block_colors[static_cast<std::size_t>(v)] = Color::Short;
        else if (bivalency == 2)
            block_colors[static_cast<std::size_t>(v)] = Color::Long;
        else
            throw InputError("bivalency is neither 2 nor 6 at vertex " +
                             std::to_string(v));
    }
    for (int v = 0; v < nb; ++v)
        for (int u : lambda.neighbors(v))
            if (block_colors[static_cast<std::size_t>(v)] ==
                block_colors[static_cast<std::size_t>(u)])
                throw InputError("bivalency pattern violated on edge (" +
                                 std::to_string(v) + "," + std::to_string(u) + ")");
    EdgeLabeling lab;
    if (labeling) {
        lab = *labeling;
        for (int v = 0; v < nb; ++v) {
            if (block_colors[static_cast<std::size_t>(v)] == Color::Short) {
                validate_six_valent(lab, lambda, strong, v);
                continue;
            }
            VertexSet nbs = lambda.neighbors(v);
            for (int u : nbs)
                if (!lab.subset.count({v, u}))
                    throw InputError("labeling misses edge (" + std::to_string(v) +
                                     "," + std::to_string(u) + ")");
            if (nbs.size() == 2) {
                int a = lab.subset.at({v, nbs[0]});
                int b = lab.subset.at({v, nbs[1]});
                if (a + b != 5)
                    throw InputError("valency-2 labels must be complementary at vertex " +
                                     std::to_string(v));
            }
        }
    } else {
        for (int v = 0; v < nb; ++v) {
            if (block_colors[static_cast<std::size_t>(v)] == Color::Short) {
                label_six_valent(lab, lambda, strong, v);
                continue;
            }
            VertexSet nbs = lambda.neighbors(v);
            if (nbs.size() == 1) {
                lab.subset[{v, nbs[0]}] = 0;
            } else {
                lab.subset[{v, nbs[0]}] = 0;
                lab.subset[{v, nbs[1]}] = 5;
            }
        }
    }
    BichromaticGraph graph = assemble_blocks(lambda, block_colors, strong, lab);
    auto like = is_locally_like(graph, wb4_local_reference());
    if (!like.ok)
        throw StructureError("constructed graph is not locally like the B4 Weyl graph");
    BichromaticGraph lambda_colored(nb, block_colors, all_edges(lambda),
                                    lambda.labels());
    return {std::move(graph), std::move(lambda_colored)};
}

std::string to_string(F4Verdict v) {
    switch (v) {
        case F4Verdict::WF4: return "WF4";
        case F4Verdict::TwistedWF4: return "twisted_WF4";
        default: return "other";
    }
}

const BichromaticGraph& wf4() {
    static const BichromaticGraph g = weyl_graph(root_system(TypeLabel::F, 4));
    return g;
}

const BichromaticGraph& wf4_twisted() {
    static const BichromaticGraph g = twist_first(wf4());
    return g;
}

const BichromaticGraph& wf4_short_local() {
    static const BichromaticGraph g = combinatorial_weyl(TypeLabel::B, 3);
    return g;
}

const BichromaticGraph& wf4_long_local() {
    static const BichromaticGraph g = combinatorial_weyl(TypeLabel::C, 3);
    return g;
}

const BichromaticGraph& wb4() {
    static const BichromaticGraph g = weyl_graph(root_system(TypeLabel::B, 4));
    return g;
}

const LocalReference& wf4_local_reference() {
    static const LocalReference ref = local_reference(wf4_short_local(), wf4_long_local());
    return ref;
}

const LocalReference& wb4_local_reference() {
    static const LocalReference ref = [] {
        LocalProfile profile = local_profile(wb4());
        LocalReference r;
        r.short_cert = profile.short_local;
        r.long_cert = profile.long_local;
        return r;
    }();
    return ref;
}

F4Report classify_f4_candidate(const BichromaticGraph& g) {
    DistanceProfile prof = distance_profile(g);
    if (!prof.connected) throw StructureError("classify: graph is not connected");
    auto like = is_locally_like(g, wf4_local_reference());
    if (!like.ok)
        throw StructureError("classify: not locally like the F4 Weyl graph"
                             " (witness vertex " +
                             std::to_string(like.witness.value_or(-1)) + ")");
    F4Report r;
    r.order = g.order();
    r.short_count = g.count(Color::Short);
    r.long_count = g.count(Color::Long);
    r.divisible_by_8 = r.order % 8 == 0;
    r.tightly_connected = is_tightly_connected(g);
    r.diameter = prof.diameter;
    r.mu = mu_report(g);
    r.hyp_order_24 = r.order == 24;
    r.hyp_tightly_connected = r.tightly_connected;
    r.hyp_diameter_2 = prof.diameter && *prof.diameter == 2;
    r.hyp_mu_3 = r.mu.mu_constant(3);
    if (g.order() != wf4().order()) {
        r.verdict = F4Verdict::Other;
        return r;
    }
    Certificate cert = canonical_form(g);
    if (cert == canonical_form(wf4()))
        r.verdict = F4Verdict::WF4;
    else if (cert == canonical_form(wf4_twisted()))
        r.verdict = F4Verdict::TwistedWF4;
    else
        r.verdict = F4Verdict::Other;
    return r;
}

std::vector<std::string> f4_family_violations(const BichromaticGraph& g) {
    std::vector<std::string> out;
    const int shorts = g.count(Color::Short);
    const int longs = g.count(Color::Long);
    if (shorts != longs)
        out.push_back("short and long vertex counts differ: " +
                      std::to_string(shorts) + " vs " + std::to_string(longs));
    if (g.order() % 8 != 0)
        out.push_back("order " + std::to_string(g.order()) + " is not divisible by 8");
    if (g.order() < 24)
        out.push_back("order " + std::to_string(g.order()) + " is below 24");
    CliquePartition pi;
    try {
        pi = clique_partition(g, 4);
    } catch (const StructureError& e) {
        out.push_back(e.what());
        return out;
    }
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        if (pi.block_color[b] != Color::Short) continue;
        const VertexSet& block = pi.blocks[b];
        // long vertices at distance 1 and their attachment pairs
        std::map<int, std::vector<int>> attachment;  // long vertex -> indices 0..3
        for (int i = 0; i < 4; ++i)
            for (int u : g.neighbors(block[static_cast<std::size_t>(i)]))
                if (g.color(u) == Color::Long) attachment[u].push_back(i);
        if (attachment.size() != 12)
            out.push_back("short 4-clique at block " + std::to_string(b) + " has " +
                          std::to_string(attachment.size()) +
                          " long neighbors instead of 12");
        std::map<std::pair<int, int>, int> pair_count;
        for (const auto& [y, idx] : attachment) {
            if (idx.size() != 2) {
                out.push_back("long vertex " + std::to_string(y) +
                              " meets the 4-clique in " + std::to_string(idx.size()) +
                              " vertices");
                continue;
            }
            pair_count[{idx[0], idx[1]}] += 1;
        }
        for (const auto& [pr, cnt] : pair_count)
            if (cnt != 2)
                out.push_back("clique pair (" + std::to_string(pr.first) + "," +
                              std::to_string(pr.second) + ") of block " +
                              std::to_string(b) + " has " + std::to_string(cnt) +
                              " common long neighbors instead of 2");
        // adjacency restriction: attached pairs of adjacent long vertices are
        // equal or disjoint
        std::vector<std::pair<int, std::vector<int>>> attached(attachment.begin(),
                                                               attachment.end());
        for (std::size_t i = 0; i < attached.size(); ++i)
            for (std::size_t j = i + 1; j < attached.size(); ++j) {
                if (!g.adjacent(attached[i].first, attached[j].first)) continue;
                const auto& p = attached[i].second;
                const auto& q = attached[j].second;
                if (p.size() != 2 || q.size() != 2) continue;
                const bool equal = p == q;
                const bool disjoint = p[0] != q[0] && p[0] != q[1] && p[1] != q[0] &&
                                      p[1] != q[1];
                if (!equal && !disjoint)
                    out.push_back("adjacent long neighbors " +
                                  std::to_string(attached[i].first) + " and " +
                                  std::to_string(attached[j].first) +
                                  " of block " + std::to_string(b) +
                                  " overlap in one clique vertex");
            }
    }
    return out;
}

}  // namespace weyl
