#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "weyl/graph.hpp"

namespace weyl {

using Perm = std::vector<int>;
using GroupOrder = boost::multiprecision::cpp_int;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
// (a * b)(x) = a[b[x]]
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
std::string cycle_notation(const Perm& p);

// Orbits of the group generated by gens, ordered by smallest member.
std::vector<VertexSet> orbits(int n, const std::vector<Perm>& gens);

// Exact order of the permutation group generated by gens, via a
// base-and-transversal stabilizer chain.
GroupOrder permutation_group_order(int n, const std::vector<Perm>& gens);

}  // namespace weyl
