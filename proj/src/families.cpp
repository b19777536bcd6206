#include "weyl/families.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace weyl {

namespace {

void collect_subsets(int n, int k, int from, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int x = from; x <= n; ++x) {
        current.push_back(x);
        collect_subsets(n, k, x + 1, current, out);
        current.pop_back();
    }
}

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

constexpr std::uint32_t kOddBits = 0x55555555u;  // x_1, x_3, ... (bits 0,2,...)

}  // namespace

BichromaticGraph kneser(int n, int k) {
    if (k < 1) throw InputError("kneser: k must be at least 1");
    if (k > n) throw InputError("kneser: k exceeds n");
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    collect_subsets(n, k, 1, current, subsets);

    std::vector<std::uint64_t> masks;
    std::vector<std::string> labels;
    masks.reserve(subsets.size());
    for (const auto& s : subsets) {
        std::uint64_t m = 0;
        for (int x : s) m |= 1ULL << x;
        masks.push_back(m);
        labels.push_back(subset_label(s));
    }
    const int count = static_cast<int>(subsets.size());
    std::vector<Edge> edges;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if ((masks[static_cast<std::size_t>(i)] &
                 masks[static_cast<std::size_t>(j)]) == 0)
                edges.emplace_back(i, j);
    return BichromaticGraph(count, uniform_colors(count, Color::Long), edges,
                            std::move(labels));
}

int symplectic_form(std::uint32_t x, std::uint32_t y, int n) {
    const std::uint32_t live = (n >= 16) ? ~0u : ((1u << (2 * n)) - 1);
    std::uint32_t swapped = ((y & kOddBits) << 1) | ((y >> 1) & kOddBits);
    return std::popcount(x & swapped & live) & 1;
}

int quadratic_form(std::uint32_t x, int n, QuadricSign sign) {
    int q = std::popcount(x & (x >> 1) & kOddBits) & 1;
    if (sign == QuadricSign::Minus) {
        int a = (x >> (2 * n - 2)) & 1;
        int b = (x >> (2 * n - 1)) & 1;
        q ^= a ^ b;
    }
    return q;
}

namespace {

std::string vector_label(std::uint32_t x, int n) {
    std::string out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) out.push_back(((x >> i) & 1) ? '1' : '0');
    return out;
}

BichromaticGraph perp_graph(const std::vector<std::uint32_t>& vectors, int n) {
    const int count = static_cast<int>(vectors.size());
    std::vector<Edge> edges;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (symplectic_form(vectors[static_cast<std::size_t>(i)],
                                vectors[static_cast<std::size_t>(j)], n) == 0)
                edges.emplace_back(i, j);
    std::vector<std::string> labels;
    labels.reserve(vectors.size());
    for (std::uint32_t x : vectors) labels.push_back(vector_label(x, n));
    return BichromaticGraph(count, uniform_colors(count, Color::Long), edges,
                            std::move(labels));
}

}  // namespace

BichromaticGraph symplectic_graph(int n) {
    if (n < 1) throw InputError("symplectic_graph: n must be at least 1");
    if (n > 5) throw ResourceError("symplectic_graph: n > 5 is out of range");
    std::vector<std::uint32_t> vectors;
    for (std::uint32_t x = 1; x < (1u << (2 * n)); ++x) vectors.push_back(x);
    return perp_graph(vectors, n);
}

BichromaticGraph quadric_graph(int n, QuadricSign sign) {
    if (n < 2) throw InputError("quadric_graph: n must be at least 2");
    if (n > 5) throw ResourceError("quadric_graph: n > 5 is out of range");
    std::vector<std::uint32_t> vectors;
    for (std::uint32_t x = 1; x < (1u << (2 * n)); ++x)
        if (quadratic_form(x, n, sign) == 1) vectors.push_back(x);
    return perp_graph(vectors, n);
}

}  // namespace weyl
