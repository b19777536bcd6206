#pragma once

#include <cstdint>

#include "weyl/graph.hpp"

namespace weyl {

// Kneser graph K(n, k): k-subsets of {1..n} in lexicographic order, adjacent
// exactly when disjoint. All vertices long.
BichromaticGraph kneser(int n, int k);

enum class QuadricSign { Plus, Minus };

// Fixed forms on F_2^{2n}, coordinates x_1..x_{2n} packed as bits 0..2n-1:
//   B(x,y)   = sum_i (x_{2i-1} y_{2i} + x_{2i} y_{2i-1})
//   Q+(x)    = sum_i x_{2i-1} x_{2i}
//   Q-(x)    = Q+(x) + x_{2n-1} + x_{2n}
// Q- replaces the last hyperbolic block of Q+ by the anisotropic
// x_{2n-1} + x_{2n-1} x_{2n} + x_{2n} and has minimal Witt index; both
// polarize to B. The non-singular census validates the choice.
int symplectic_form(std::uint32_t x, std::uint32_t y, int n);
int quadratic_form(std::uint32_t x, int n, QuadricSign sign);

// Graph on the nonzero vectors of F_2^{2n}; x ~ y iff B(x,y) = 0 and x != y.
// Vertices ordered by integer value of the bit string. n <= 5.
BichromaticGraph symplectic_graph(int n);

// Induced subgraph of symplectic_graph(n) on the vectors non-singular under
// the chosen quadratic form. n >= 2.
BichromaticGraph quadric_graph(int n, QuadricSign sign);

}  // namespace weyl
