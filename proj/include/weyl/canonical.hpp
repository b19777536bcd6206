#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/graph.hpp"
#include "weyl/permgroup.hpp"

namespace weyl {

// Canonical encoding of a bichromatic graph: the color string of the
// canonically relabeled graph followed by its packed adjacency matrix rows.
// Two graphs have equal certificates exactly when they are isomorphic as
// bichromatic graphs.
struct Certificate {
    std::vector<std::uint8_t> bytes;
    std::vector<int> canonical_order;  // position -> original vertex

    bool operator==(const Certificate& o) const { return bytes == o.bytes; }
    std::strong_ordering operator<=>(const Certificate& o) const {
        return bytes <=> o.bytes;
    }
    std::string hex() const;
};

inline constexpr int kCanonicalFormCap = 512;
inline constexpr int kAutomorphismCap = 256;

// Canonical labeling by iterative color refinement (seeded with declared
// vertex color and degree) plus individualization-refinement backtracking
// with automorphism pruning. Deterministic; caps at 512 vertices.
Certificate canonical_form(const BichromaticGraph& g);

// A color- and adjacency-preserving bijection g -> h, or absent. The map is
// re-verified edge by edge before being returned.
std::optional<std::vector<int>> are_isomorphic(const BichromaticGraph& g,
                                               const BichromaticGraph& h);

struct AutSummary {
    GroupOrder order;
    std::vector<VertexSet> orbits;
    std::vector<Perm> generators;
};

// Full color-preserving automorphism group; caps at 256 vertices.
AutSummary automorphism_group(const BichromaticGraph& g);

bool is_automorphism(const BichromaticGraph& g, const Perm& p);

}  // namespace weyl
