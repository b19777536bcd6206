#include "weyl/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace weyl {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return out;
}

std::string cycle_notation(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        os << '(' << i;
        seen[i] = true;
        for (int j = p[i]; j != static_cast<int>(i);
             j = p[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            os << ' ' << j;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

std::vector<VertexSet> orbits(int n, const std::vector<Perm>& gens) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Perm& g : gens)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g[static_cast<std::size_t>(v)]);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, VertexSet> buckets;
    for (int v = 0; v < n; ++v) buckets[find(v)].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(buckets.size());
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    return out;
}

namespace {

// Deterministic Schreier-Sims. Level l holds generators known to fix the
// bases of all shallower levels; its transversal maps each orbit point of
// base[l] to a coset representative.
class StabilizerChain {
public:
    explicit StabilizerChain(int n) : n_(n) {}

    void insert(Perm g, std::size_t level = 0) {
        if (is_identity(g)) return;
        if (level == levels_.size()) {
            int base = 0;
            while (g[static_cast<std::size_t>(base)] == base) ++base;
            levels_.push_back(Level{base, {}, {}});
            rebuild_orbit(level);
        }
        {
            int base = levels_[level].base;
            int image = g[static_cast<std::size_t>(base)];
            auto it = levels_[level].transversal.find(image);
            if (it != levels_[level].transversal.end()) {
                insert(compose(inverse(it->second), g), level + 1);
                return;
            }
        }
        levels_[level].gens.push_back(std::move(g));
        rebuild_orbit(level);
        // Close the level: every Schreier generator must sift to identity.
        // Snapshots guard against reallocation of levels_ during recursion.
        const std::vector<std::pair<int, Perm>> transversal(
            levels_[level].transversal.begin(), levels_[level].transversal.end());
        const std::vector<Perm> gens_now = levels_[level].gens;
        for (const auto& [point, rep] : transversal)
            for (const Perm& s : gens_now) {
                Perm to =
                    levels_[level].transversal.at(s[static_cast<std::size_t>(point)]);
                insert(compose(inverse(to), compose(s, rep)), level + 1);
            }
    }

    GroupOrder order() const {
        GroupOrder result = 1;
        for (const Level& lv : levels_) result *= lv.transversal.size();
        return result;
    }

private:
    struct Level {
        int base;
        std::vector<Perm> gens;
        std::map<int, Perm> transversal;
    };

    void rebuild_orbit(std::size_t level) {
        Level& lv = levels_[level];
        lv.transversal.clear();
        lv.transversal[lv.base] = identity_perm(n_);
        std::deque<int> queue{lv.base};
        while (!queue.empty()) {
            int point = queue.front();
            queue.pop_front();
            for (const Perm& g : lv.gens) {
                int image = g[static_cast<std::size_t>(point)];
                if (!lv.transversal.count(image)) {
                    lv.transversal[image] = compose(g, lv.transversal[point]);
                    queue.push_back(image);
                }
            }
        }
    }

    int n_;
    std::vector<Level> levels_;
};

}  // namespace

GroupOrder permutation_group_order(int n, const std::vector<Perm>& gens) {
    StabilizerChain chain(n);
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw InputError("generator degree does not match point count");
        chain.insert(g);
    }
    return chain.order();
}

}  // namespace weyl
