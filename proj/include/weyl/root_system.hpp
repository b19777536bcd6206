#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/graph.hpp"

namespace weyl {

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

TypeLabel type_label_from_char(char c);

// An irreducible crystallographic root system in standard coordinates.
// F4 and the E series are scaled by 2 so every coordinate is an integer;
// orthogonality and length classes are scale-invariant.
struct RootSystem {
    TypeLabel type;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<std::vector<int>> roots;  // closed under negation, sorted
    std::vector<Color> length_class;      // per root; two lengths: shorter = Short
};

// Legal pairs: A n>=1, B/C n>=2, D n>=4, E6/E7/E8, F4, G2.
RootSystem root_system(TypeLabel type, int rank);

// One reflection per +/- root pair, represented by the lexicographically
// positive root, in lexicographic order.
struct Reflection {
    std::vector<int> root;
    Color color;
};

std::vector<Reflection> reflections(const RootSystem& rs);

// s_alpha(x) = x - (2 (alpha.x)/(alpha.alpha)) alpha; exact, throws if the
// crystallographic integrality fails.
std::vector<int> apply_reflection(const std::vector<int>& alpha,
                                  const std::vector<int>& x);

// The commuting graph of the Weyl group on its reflections: one vertex per
// reflection, adjacent exactly when the roots are orthogonal, colored by root
// length, labeled with the representative's coordinates.
BichromaticGraph weyl_graph(const RootSystem& rs);

// Index-pair models: vertices y_{i,j}.
//   A: 1 <= i < j <= n+1, adjacency = index disjointness, all long.
//   B: 1 <= i,j <= n, y_{i,i} short, y_{i,j} (i != j) long,
//      y_{i,j} ~ y_{k,l} iff {i,j} and {k,l} are disjoint or (k,l) = (j,i).
//   C: B with the colors exchanged.
//   D: the B adjacency restricted to i != j, all long.
BichromaticGraph combinatorial_weyl(TypeLabel type, int n);

// Each reflection as a permutation of the root list (the action on roots is
// faithful on their span).
std::vector<std::vector<int>> reflection_root_permutations(const RootSystem& rs);

// Order of the group generated by the reflections, by closure over root
// permutations. Throws ResourceError beyond the limit.
std::uint64_t reflection_group_order(const RootSystem& rs,
                                     std::uint64_t limit = 10'000'000);

}  // namespace weyl
