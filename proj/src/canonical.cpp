#include "weyl/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace weyl {

std::string Certificate::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

bool is_automorphism(const BichromaticGraph& g, const Perm& p) {
    const int n = g.order();
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        int image = p[static_cast<std::size_t>(v)];
        if (image < 0 || image >= n || hit[static_cast<std::size_t>(image)])
            return false;
        hit[static_cast<std::size_t>(image)] = true;
        if (g.color(image) != g.color(v)) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p[static_cast<std::size_t>(u)],
                                               p[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

namespace {

using Mask = std::vector<std::uint64_t>;

// Individualization-refinement search. Keeps the first leaf reached and the
// lexicographically smallest leaf certificate; a leaf matching either yields
// an automorphism, and branches equivalent to an explored sibling under the
// group generated by prefix-fixing automorphisms are skipped.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const BichromaticGraph& g)
        : g_(g), n_(g.order()), words_(g.row_words()) {}

    void run() { dfs(initial_partition()); }

    Certificate best_certificate() const {
        return Certificate{best_cert_, best_perm_};
    }

    std::vector<Perm> generators() && { return std::move(gens_); }

private:
    using Cells = std::vector<std::vector<int>>;

    Cells initial_partition() const {
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (int v = 0; v < n_; ++v)
            groups[{static_cast<int>(g_.color(v)), g_.degree(v)}].push_back(v);
        Cells cells;
        cells.reserve(groups.size());
        for (auto& [key, members] : groups) cells.push_back(std::move(members));
        return cells;
    }

    Mask cell_mask(const std::vector<int>& cell) const {
        Mask m(static_cast<std::size_t>(words_), 0);
        for (int v : cell) m[static_cast<std::size_t>(v / 64)] |= 1ULL << (v % 64);
        return m;
    }

    int count_in(int v, const Mask& m) const {
        auto r = g_.row(v);
        int c = 0;
        for (int i = 0; i < words_; ++i)
            c += std::popcount(r[static_cast<std::size_t>(i)] &
                               m[static_cast<std::size_t>(i)]);
        return c;
    }

    void refine(Cells& cells) const {
        std::deque<Mask> queue;
        for (const auto& c : cells) queue.push_back(cell_mask(c));
        std::vector<int> counts;
        while (!queue.empty()) {
            Mask w = std::move(queue.front());
            queue.pop_front();
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                counts.clear();
                counts.reserve(cell.size());
                bool uniform = true;
                for (int v : cell) {
                    counts.push_back(count_in(v, w));
                    if (counts.back() != counts.front()) uniform = false;
                }
                if (uniform) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::map<int, std::vector<int>> buckets;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    buckets[counts[i]].push_back(cell[i]);
                for (auto& [cnt, sub] : buckets) {
                    queue.push_back(cell_mask(sub));
                    next.push_back(std::move(sub));
                }
            }
            cells.swap(next);
        }
    }

    // smallest non-singleton cell, leftmost on ties; -1 when discrete
    int target_cell(const Cells& cells) const {
        int best = -1;
        std::size_t best_size = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < best_size) {
                best_size = cells[i].size();
                best = static_cast<int>(i);
            }
        return best;
    }

    void dfs(Cells cells) {
        refine(cells);
        int t = target_cell(cells);
        if (t < 0) {
            leaf(cells);
            return;
        }
        const std::vector<int> branch = cells[static_cast<std::size_t>(t)];
        std::vector<int> done;
        for (int v : branch) {
            if (!done.empty() && equivalent_to_done(v, done)) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == t) {
                    child.push_back({v});
                    std::vector<int> rest;
                    rest.reserve(cells[i].size() - 1);
                    for (int u : cells[i])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            prefix_.push_back(v);
            dfs(std::move(child));
            prefix_.pop_back();
            done.push_back(v);
        }
    }

    bool equivalent_to_done(int v, const std::vector<int>& done) {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(
                    parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        bool any = false;
        for (const Perm& p : gens_) {
            bool fixes = true;
            for (int q : prefix_)
                if (p[static_cast<std::size_t>(q)] != q) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) unite(x, p[static_cast<std::size_t>(x)]);
        }
        if (!any) return false;
        int rv = find(v);
        for (int u : done)
            if (find(u) == rv) return true;
        return false;
    }

    std::vector<std::uint8_t> build_cert(const Perm& perm) const {
        const int rowbytes = (n_ + 7) / 8;
        std::vector<std::uint8_t> bytes(
            static_cast<std::size_t>(n_) + static_cast<std::size_t>(n_) * rowbytes, 0);
        for (int i = 0; i < n_; ++i)
            bytes[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(color_char(g_.color(perm[static_cast<std::size_t>(i)])));
        for (int i = 0; i < n_; ++i) {
            const std::size_t base =
                static_cast<std::size_t>(n_) + static_cast<std::size_t>(i) * rowbytes;
            for (int j = 0; j < n_; ++j)
                if (g_.adjacent(perm[static_cast<std::size_t>(i)],
                                perm[static_cast<std::size_t>(j)]))
                    bytes[base + static_cast<std::size_t>(j / 8)] |=
                        static_cast<std::uint8_t>(1u << (7 - j % 8));
        }
        return bytes;
    }

    void leaf(const Cells& cells) {
        Perm perm(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i) perm[i] = cells[i][0];
        std::vector<std::uint8_t> cert = build_cert(perm);
        if (!have_first_) {
            first_cert_ = cert;
            first_perm_ = perm;
            best_cert_ = std::move(cert);
            best_perm_ = std::move(perm);
            have_first_ = true;
            return;
        }
        if (cert == first_cert_) record_automorphism(first_perm_, perm);
        else if (cert == best_cert_) record_automorphism(best_perm_, perm);
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_perm_ = std::move(perm);
        }
    }

    void record_automorphism(const Perm& a, const Perm& b) {
        Perm sigma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            sigma[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] =
                b[static_cast<std::size_t>(i)];
        if (is_identity(sigma)) return;
        for (const Perm& p : gens_)
            if (p == sigma) return;
        if (!is_automorphism(g_, sigma))
            throw StructureError("internal: leaf comparison produced a non-automorphism");
        gens_.push_back(std::move(sigma));
    }

    const BichromaticGraph& g_;
    int n_;
    int words_;
    bool have_first_ = false;
    std::vector<std::uint8_t> first_cert_, best_cert_;
    Perm first_perm_, best_perm_;
    std::vector<Perm> gens_;
    std::vector<int> prefix_;
};

}  // namespace

Certificate canonical_form(const BichromaticGraph& g) {
    if (g.order() > kCanonicalFormCap)
        throw ResourceError("canonical_form: graph exceeds " +
                            std::to_string(kCanonicalFormCap) + " vertices");
    CanonicalSearch search(g);
    search.run();
    return search.best_certificate();
}

std::optional<std::vector<int>> are_isomorphic(const BichromaticGraph& g,
                                               const BichromaticGraph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (g.count(Color::Short) != h.count(Color::Short)) return std::nullopt;
    auto degree_census = [](const BichromaticGraph& x) {
        std::vector<std::pair<int, int>> census;
        census.reserve(static_cast<std::size_t>(x.order()));
        for (int v = 0; v < x.order(); ++v)
            census.emplace_back(static_cast<int>(x.color(v)), x.degree(v));
        std::sort(census.begin(), census.end());
        return census;
    };
    if (degree_census(g) != degree_census(h)) return std::nullopt;

    Certificate cg = canonical_form(g);
    Certificate ch = canonical_form(h);
    if (!(cg == ch)) return std::nullopt;

    std::vector<int> map(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        map[static_cast<std::size_t>(cg.canonical_order[static_cast<std::size_t>(i)])] =
            ch.canonical_order[static_cast<std::size_t>(i)];
    // direct check before returning
    for (int v = 0; v < g.order(); ++v)
        if (h.color(map[static_cast<std::size_t>(v)]) != g.color(v))
            throw StructureError("internal: isomorphism candidate breaks colors");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[static_cast<std::size_t>(u)],
                                               map[static_cast<std::size_t>(v)]))
                throw StructureError("internal: isomorphism candidate breaks edges");
    return map;
}

AutSummary automorphism_group(const BichromaticGraph& g) {
    if (g.order() > kAutomorphismCap)
        throw ResourceError("automorphism_group: graph exceeds " +
                            std::to_string(kAutomorphismCap) + " vertices");
    CanonicalSearch search(g);
    search.run();
    std::vector<Perm> gens = std::move(search).generators();
    for (const Perm& p : gens)
        if (!is_automorphism(g, p))
            throw StructureError("internal: generator failed verification");
    AutSummary out;
    out.order = permutation_group_order(g.order(), gens);
    out.orbits = orbits(g.order(), gens);
    out.generators = std::move(gens);
    return out;
}

}  // namespace weyl
