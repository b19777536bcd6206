#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weyl/canonical.hpp"
#include "weyl/graph.hpp"
#include "weyl/graph_ops.hpp"

namespace weyl {

// Per-color local-graph certificates of a locally homogeneous graph, or a
// same-color witness pair with non-isomorphic local graphs.
struct LocalProfile {
    bool homogeneous = false;
    std::optional<Certificate> short_local;
    std::optional<Certificate> long_local;
    std::optional<std::pair<int, int>> witness;
};

LocalProfile local_profile(const BichromaticGraph& g);

struct LocalReference {
    std::optional<Certificate> short_cert;
    std::optional<Certificate> long_cert;
};

LocalReference local_reference(const std::optional<BichromaticGraph>& short_ref,
                               const std::optional<BichromaticGraph>& long_ref);

struct LocalLikeResult {
    bool ok = false;
    std::optional<int> witness;  // vertex whose local graph deviates
};

// True exactly when every short/long local graph of g is isomorphic, as a
// bichromatic graph, to the respective reference.
LocalLikeResult is_locally_like(const BichromaticGraph& g, const LocalReference& ref);
LocalLikeResult is_locally_like(const BichromaticGraph& g,
                                const std::optional<BichromaticGraph>& short_ref,
                                const std::optional<BichromaticGraph>& long_ref);

struct CotriangularResult {
    bool ok = false;
    std::optional<std::pair<int, int>> witness;  // non-adjacent pair in no cotriangle
};

// Every non-adjacent pair must extend to a 3-coclique {x,y,z} such that every
// other vertex is adjacent to all or exactly one of x, y, z.
CotriangularResult is_cotriangular(const BichromaticGraph& g);

// Partition into monochromatic k-cliques: the monochromatic components, each
// verified to be a k-clique, ordered by smallest member. Throws
// StructureError carrying the offending component otherwise.
CliquePartition clique_partition(const BichromaticGraph& g, int k);

// Common-neighborhood parameters of distance-2 pairs in a graph locally like
// the F4 Weyl graph. Same-type pairs must meet mu pairwise non-adjacent
// vertices of the opposite color, mu in {1,2,3}; mixed pairs decompose into
// monochromatic edges with mu_s + mu_l in {1,2}.
struct MuReport {
    struct SameTypePair {
        int x, y, mu;
    };
    struct MixedPair {
        int x, y, mu_short, mu_long;
    };
    std::vector<SameTypePair> same_type;
    std::vector<MixedPair> mixed;
    std::optional<int> mu_min, mu_max;
    std::optional<int> mu_s_min, mu_s_max, mu_l_min, mu_l_max;

    bool mu_constant(int value) const;
};

MuReport mu_report(const BichromaticGraph& g);

// Every long vertex has a neighbor in every short component and vice versa.
bool is_tightly_connected(const BichromaticGraph& g);

// Swaps the pairing between a strongly connected pair of opposite-color
// 4-clique blocks: the two adjacencies x1,x2 ~ y1,y2 and x3,x4 ~ y3,y4
// become x1,x2 ~ y3,y4 and x3,x4 ~ y1,y2. Validates the pattern.
BichromaticGraph twist(const BichromaticGraph& g, const VertexSet& block_x,
                       const VertexSet& block_y);

// Twist at the first strongly connected opposite-color block pair.
BichromaticGraph twist_first(const BichromaticGraph& g);

// For each directed edge (x,y) of the host, a 2-subset of {1,2,3,4} encoded
// as an index into the lexicographic list {1,2},{1,3},{1,4},{2,3},{2,4},{3,4};
// the complement of subset i is subset 5-i.
struct EdgeLabeling {
    std::map<std::pair<int, int>, int> subset;
};

std::pair<int, int> two_subset(int index);

// Deterministic legal labeling: per vertex, strong neighbors first (ascending)
// take {1,2},{1,3},{1,4}; remaining neighbors take the smallest subsets that
// avoid the complements of the strong assignments.
EdgeLabeling canonical_edge_labeling(const BichromaticGraph& lambda,
                                     const std::set<std::pair<int, int>>& strong);

struct LambdaBuild {
    BichromaticGraph graph;   // one monochromatic 4-clique per host vertex
    BichromaticGraph lambda;  // the properly 2-colored host actually used
};

// Expands a connected bipartite bivalency-6 host into a graph locally like
// the F4 Weyl graph; contracting the 4-cliques returns the host. A proper
// input coloring is kept, otherwise one is derived.
LambdaBuild build_locally_f4(const BichromaticGraph& lambda,
                             const std::set<std::pair<int, int>>& strong = {},
                             const std::optional<EdgeLabeling>& labeling = {});

// The bivalency-(2,6) analogue: hosts with bivalency 6 on one side and 2 on
// the other expand to graphs locally like the B4 Weyl graph. Side colors are
// derived from the bivalencies (6 = short).
LambdaBuild build_locally_b4(const BichromaticGraph& lambda,
                             const std::set<std::pair<int, int>>& strong = {},
                             const std::optional<EdgeLabeling>& labeling = {});

enum class F4Verdict { WF4, TwistedWF4, Other };

std::string to_string(F4Verdict v);

struct F4Report {
    F4Verdict verdict = F4Verdict::Other;
    int order = 0;
    int short_count = 0;
    int long_count = 0;
    bool divisible_by_8 = false;
    bool tightly_connected = false;
    std::optional<int> diameter;
    MuReport mu;
    bool hyp_order_24 = false;
    bool hyp_tightly_connected = false;
    bool hyp_diameter_2 = false;
    bool hyp_mu_3 = false;
};

// Requires g connected and locally like the F4 Weyl graph. Each hypothesis is
// evaluated independently; the verdict compares certificates against the two
// reference graphs.
F4Report classify_f4_candidate(const BichromaticGraph& g);

// Reference graphs, built once.
const BichromaticGraph& wf4();
const BichromaticGraph& wf4_twisted();
const BichromaticGraph& wf4_short_local();  // B3 Weyl graph
const BichromaticGraph& wf4_long_local();   // C3 Weyl graph
const BichromaticGraph& wb4();
const LocalReference& wf4_local_reference();
const LocalReference& wb4_local_reference();

// Structural facts that hold in every graph locally like the F4 Weyl graph:
// equal color counts, order divisible by 8 and at least 24, exactly 12 long
// vertices at distance 1 from each short 4-clique with the index-pair
// adjacency restriction. Returns human-readable violations, empty when clean.
std::vector<std::string> f4_family_violations(const BichromaticGraph& g);

}  // namespace weyl
