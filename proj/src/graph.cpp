#include "weyl/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace weyl {

char color_char(Color c) { return c == Color::Short ? 's' : 'l'; }

Color color_from_char(char c) {
    if (c == 's') return Color::Short;
    if (c == 'l') return Color::Long;
    throw InputError(std::string("unknown color character '") + c + "'");
}

std::vector<Color> uniform_colors(int n, Color c) {
    if (n < 0) throw InputError("negative vertex count");
    return std::vector<Color>(static_cast<std::size_t>(n), c);
}

BichromaticGraph::BichromaticGraph(int n, std::vector<Color> colors,
                                   const std::vector<Edge>& edges,
                                   std::vector<std::string> labels)
    : n_(n),
      words_((n + 63) / 64),
      colors_(std::move(colors)),
      labels_(std::move(labels)) {
    if (n_ < 0) throw InputError("negative vertex count");
    if (static_cast<int>(colors_.size()) != n_)
        throw InputError("color list size does not match vertex count");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != n_)
            throw InputError("label list size does not match vertex count");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != n_)
            throw InputError("vertex labels are not unique");
    }
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InputError("edge endpoint out of range: (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw InputError("loop edge at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
        adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    }
    std::size_t bits = 0;
    for (std::uint64_t w : adj_) bits += static_cast<std::size_t>(std::popcount(w));
    edges_ = bits / 2;
}

int BichromaticGraph::count(Color c) const {
    return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

bool BichromaticGraph::adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int BichromaticGraph::degree(int v) const {
    int d = 0;
    for (int i = 0; i < words_; ++i)
        d += std::popcount(adj_[static_cast<std::size_t>(v) * words_ + i]);
    return d;
}

VertexSet BichromaticGraph::neighbors(int v) const {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (int i = 0; i < words_; ++i) {
        std::uint64_t w = adj_[static_cast<std::size_t>(v) * words_ + i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(64 * i + b);
            w &= w - 1;
        }
    }
    return out;
}

const std::string& BichromaticGraph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_.at(static_cast<std::size_t>(v));
}

std::span<const std::uint64_t> BichromaticGraph::row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
}

BichromaticGraph build_graph(int n, std::vector<Color> colors,
                             const std::vector<Edge>& edges,
                             std::vector<std::string> labels) {
    return BichromaticGraph(n, std::move(colors), edges, std::move(labels));
}

}  // namespace weyl
