#include "weyl/root_system.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace weyl {

TypeLabel type_label_from_char(char c) {
    switch (c) {
        case 'A': return TypeLabel::A;
        case 'B': return TypeLabel::B;
        case 'C': return TypeLabel::C;
        case 'D': return TypeLabel::D;
        case 'E': return TypeLabel::E;
        case 'F': return TypeLabel::F;
        case 'G': return TypeLabel::G;
        default:
            throw InputError(std::string("unknown type label '") + c + "'");
    }
}

namespace {

using Vec = std::vector<int>;

int dot(const Vec& a, const Vec& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec unit(int dim, int i, int value = 1) {
    Vec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = value;
    return v;
}

void push_with_negative(std::vector<Vec>& roots, Vec v) {
    Vec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    roots.push_back(std::move(v));
    roots.push_back(std::move(neg));
}

// +-e_i +- e_j for all i < j
void push_pair_roots(std::vector<Vec>& roots, int dim, int scale) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Vec v(static_cast<std::size_t>(dim), 0);
                    v[static_cast<std::size_t>(i)] = si * scale;
                    v[static_cast<std::size_t>(j)] = sj * scale;
                    roots.push_back(std::move(v));
                }
}

std::vector<Vec> e8_roots() {
    std::vector<Vec> roots;
    push_pair_roots(roots, 8, 2);
    // (+-1)^8 with an even number of minus signs
    for (int bits = 0; bits < 256; ++bits) {
        if (std::popcount(static_cast<unsigned>(bits)) % 2 != 0) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? -1 : 1;
        roots.push_back(std::move(v));
    }
    return roots;
}

std::vector<Vec> filter_orthogonal(const std::vector<Vec>& roots,
                                   const std::vector<Vec>& fixed) {
    std::vector<Vec> out;
    for (const Vec& r : roots) {
        bool keep = true;
        for (const Vec& f : fixed)
            if (dot(r, f) != 0) {
                keep = false;
                break;
            }
        if (keep) out.push_back(r);
    }
    return out;
}

void check_legal(TypeLabel type, int rank) {
    bool ok = false;
    switch (type) {
        case TypeLabel::A: ok = rank >= 1; break;
        case TypeLabel::B:
        case TypeLabel::C: ok = rank >= 2; break;
        case TypeLabel::D: ok = rank >= 4; break;
        case TypeLabel::E: ok = rank >= 6 && rank <= 8; break;
        case TypeLabel::F: ok = rank == 4; break;
        case TypeLabel::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InputError(std::string("illegal root system ") +
                         static_cast<char>(type) + std::to_string(rank));
}

}  // namespace

RootSystem root_system(TypeLabel type, int rank) {
    check_legal(type, rank);
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    std::vector<Vec> roots;
    switch (type) {
        case TypeLabel::A: {
            rs.ambient_dim = rank + 1;
            for (int i = 0; i <= rank; ++i)
                for (int j = 0; j <= rank; ++j)
                    if (i != j) {
                        Vec v(static_cast<std::size_t>(rank + 1), 0);
                        v[static_cast<std::size_t>(i)] = 1;
                        v[static_cast<std::size_t>(j)] = -1;
                        roots.push_back(std::move(v));
                    }
            break;
        }
        case TypeLabel::B: {
            rs.ambient_dim = rank;
            for (int i = 0; i < rank; ++i) {
                push_with_negative(roots, unit(rank, i));
            }
            push_pair_roots(roots, rank, 1);
            break;
        }
        case TypeLabel::C: {
            rs.ambient_dim = rank;
            for (int i = 0; i < rank; ++i) push_with_negative(roots, unit(rank, i, 2));
            push_pair_roots(roots, rank, 1);
            break;
        }
        case TypeLabel::D: {
            rs.ambient_dim = rank;
            push_pair_roots(roots, rank, 1);
            break;
        }
        case TypeLabel::E: {
            rs.ambient_dim = 8;
            std::vector<Vec> fixed;
            if (rank <= 7) fixed.push_back(Vec{0, 0, 0, 0, 0, 0, 1, 1});
            if (rank == 6) fixed.push_back(Vec{0, 0, 0, 0, 0, 1, -1, 0});
            roots = filter_orthogonal(e8_roots(), fixed);
            break;
        }
        case TypeLabel::F: {
            rs.ambient_dim = 4;
            // scaled by 2: 2e_i, 2e_i +- 2e_j, (+-1,+-1,+-1,+-1)
            for (int i = 0; i < 4; ++i) push_with_negative(roots, unit(4, i, 2));
            push_pair_roots(roots, 4, 2);
            for (int bits = 0; bits < 16; ++bits) {
                Vec v(4);
                for (int i = 0; i < 4; ++i)
                    v[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? -1 : 1;
                roots.push_back(std::move(v));
            }
            break;
        }
        case TypeLabel::G: {
            rs.ambient_dim = 3;
            const Vec shorts[] = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
            const Vec longs[] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
            for (const Vec& v : shorts) push_with_negative(roots, v);
            for (const Vec& v : longs) push_with_negative(roots, v);
            break;
        }
    }
    std::sort(roots.begin(), roots.end());
    rs.roots = std::move(roots);

    std::set<int> lengths;
    for (const Vec& r : rs.roots) lengths.insert(dot(r, r));
    if (lengths.size() > 2)
        throw StructureError("internal: more than two root lengths");
    const int short_length = *lengths.begin();
    rs.length_class.reserve(rs.roots.size());
    for (const Vec& r : rs.roots)
        rs.length_class.push_back(lengths.size() == 2 && dot(r, r) == short_length
                                      ? Color::Short
                                      : Color::Long);
    return rs;
}

std::vector<Reflection> reflections(const RootSystem& rs) {
    std::vector<Reflection> out;
    out.reserve(rs.roots.size() / 2);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const Vec& r = rs.roots[i];
        // keep the lexicographically positive member of {r, -r}
        bool positive = false;
        for (int x : r) {
            if (x != 0) {
                positive = x > 0;
                break;
            }
        }
        if (positive) out.push_back({r, rs.length_class[i]});
    }
    std::sort(out.begin(), out.end(),
              [](const Reflection& a, const Reflection& b) { return a.root < b.root; });
    return out;
}

std::vector<int> apply_reflection(const std::vector<int>& alpha,
                                  const std::vector<int>& x) {
    const int aa = dot(alpha, alpha);
    const int ax = dot(alpha, x);
    if ((2 * ax) % aa != 0)
        throw StructureError("reflection coefficient is not an integer");
    const int k = 2 * ax / aa;
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - k * alpha[i];
    return out;
}

namespace {

std::string coord_label(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

BichromaticGraph weyl_graph(const RootSystem& rs) {
    const std::vector<Reflection> refl = reflections(rs);
    const int n = static_cast<int>(refl.size());
    std::vector<Color> colors;
    std::vector<std::string> labels;
    colors.reserve(refl.size());
    labels.reserve(refl.size());
    for (const Reflection& r : refl) {
        colors.push_back(r.color);
        labels.push_back(coord_label(r.root));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(refl[static_cast<std::size_t>(i)].root,
                    refl[static_cast<std::size_t>(j)].root) == 0)
                edges.emplace_back(i, j);
    return BichromaticGraph(n, std::move(colors), edges, std::move(labels));
}

BichromaticGraph combinatorial_weyl(TypeLabel type, int n) {
    check_legal(type, n);
    struct Vertex {
        int i, j;
    };
    std::vector<Vertex> vertices;
    std::vector<Color> colors;
    std::vector<std::string> labels;
    auto add = [&](int i, int j, Color c) {
        vertices.push_back({i, j});
        colors.push_back(c);
        labels.push_back("y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    };
    switch (type) {
        case TypeLabel::A:
            for (int i = 1; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 1; ++j) add(i, j, Color::Long);
            break;
        case TypeLabel::B:
        case TypeLabel::C:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Color diag = type == TypeLabel::B ? Color::Short : Color::Long;
                    Color off = type == TypeLabel::B ? Color::Long : Color::Short;
                    add(i, j, i == j ? diag : off);
                }
            break;
        case TypeLabel::D:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) add(i, j, Color::Long);
            break;
        default:
            throw InputError("combinatorial model exists only for types A, B, C, D");
    }
    const int count = static_cast<int>(vertices.size());
    auto adjacent = [&](const Vertex& a, const Vertex& b) {
        bool disjoint = a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
        bool swapped = b.i == a.j && b.j == a.i;
        return disjoint || swapped;
    };
    std::vector<Edge> edges;
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y)
            if (adjacent(vertices[static_cast<std::size_t>(x)],
                         vertices[static_cast<std::size_t>(y)]))
                edges.emplace_back(x, y);
    return BichromaticGraph(count, std::move(colors), edges, std::move(labels));
}

std::vector<std::vector<int>> reflection_root_permutations(const RootSystem& rs) {
    std::map<Vec, int> index;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        index[rs.roots[i]] = static_cast<int>(i);
    const std::vector<Reflection> refl = reflections(rs);
    std::vector<std::vector<int>> perms;
    perms.reserve(refl.size());
    for (const Reflection& r : refl) {
        std::vector<int> p(rs.roots.size());
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            auto it = index.find(apply_reflection(r.root, rs.roots[i]));
            if (it == index.end())
                throw StructureError("reflection does not permute the roots");
            p[i] = it->second;
        }
        perms.push_back(std::move(p));
    }
    return perms;
}

std::uint64_t reflection_group_order(const RootSystem& rs, std::uint64_t limit) {
    const auto gens = reflection_root_permutations(rs);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    std::vector<int> id(rs.roots.size());
    std::iota(id.begin(), id.end(), 0);
    seen.insert(id);
    frontier.push_back(std::move(id));
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                std::vector<int> prod(g.size());
                for (std::size_t i = 0; i < g.size(); ++i)
                    prod[i] = s[static_cast<std::size_t>(g[i])];
                if (seen.insert(prod).second) {
                    if (seen.size() > limit)
                        throw ResourceError("reflection group exceeds closure limit");
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace weyl
