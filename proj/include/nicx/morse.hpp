#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nicx/complexes.hpp"
#include "nicx/graphs.hpp"

namespace nicx {

// All faces of a complex (with the empty face as node 0) plus the Hasse
// cover edges of its face lattice minus the top.  Nodes sorted by
// (dimension, mask), edges stored lower-to-upper in that node order.
struct MatchingDigraph {
    std::vector<Face> nodes;
    std::vector<std::pair<int, int>> edges; // (lower id, upper id)
    std::map<Face, int> index;

    int node_of(Face f) const; // throws for unknown faces
};

MatchingDigraph build_matching_digraph(const SimplicialComplex& c);

// Matching on Hasse edges, each pair as (face, coface) masks.
struct MorseMatching {
    std::vector<std::pair<Face, Face>> pairs;
};

struct MatchingReport {
    bool matching = false; // node-disjoint
    bool perfect = false;  // covers every node
    bool acyclic = false;  // reversing the pairs leaves the digraph acyclic
    bool all() const { return matching && perfect && acyclic; }
};

// The three flags are independent; pairs that are not Hasse edges of c are
// rejected with an error.  The acyclicity search works layer by layer
// (directed cycles can only live in two consecutive dimensions).
MatchingReport is_acyclic_perfect_matching(const SimplicialComplex& c,
                                           const MorseMatching& m);

// Exposed for cross-checking the layered search against the naive one.
bool matching_has_cycle_layered(const MatchingDigraph& g, const MorseMatching& m);
bool matching_has_cycle_full(const MatchingDigraph& g, const MorseMatching& m);

struct CollapseStep {
    Face free_face = 0;
    Face containing = 0;
};

struct CollapseResult {
    bool ok = false;
    std::string reason; // failure diagnostic when !ok
    std::vector<CollapseStep> trace;
    Face final_node = 0; // the vertex removed by the last step
};

// Executes elementary collapses guided by the matching until nothing is
// left; fails with a diagnostic when the matching is not perfect or gets
// stuck (which happens exactly when it has a directed cycle).
CollapseResult collapse_by_matching(const SimplicialComplex& c, const MorseMatching& m);

// (N_G(0), components of G - 0) for a not-2-connected G; vertices 0-based,
// so the distinguished vertex of the construction is 0 and blocks partition
// {1..n-1}.  2-connected input is rejected.
struct PhiValue {
    std::uint32_t neighbors = 0;
    std::vector<std::uint32_t> blocks; // component masks, ordered by lowest vertex

    friend bool operator==(const PhiValue&, const PhiValue&) = default;
    friend bool operator<(const PhiValue& a, const PhiValue& b) {
        return a.neighbors != b.neighbors ? a.neighbors < b.neighbors
                                          : a.blocks < b.blocks;
    }
};
PhiValue phi_map(const Graph& g);
// componentwise order: neighbor set contained and partition refined
bool phi_leq(const PhiValue& a, const PhiValue& b);

// Subcomplex of the not-2-connected complex where vertex 0's neighborhood is
// restricted to {1..k-1}; requires 2 <= k <= n-1.
SimplicialComplex build_delta_k(int n, int k);
// Faces G with N_G(0) in {1..k-2} such that G plus the edge {0,k-1} is still
// not 2-connected; requires 3 <= k <= n-1.
SimplicialComplex build_delta_k1k(int n, int k);

// The structured matching on build_delta_k1k(n, k): faces split into three
// classes, each toggling one edge.
//   NoAnchor:   N_G(0) empty            -> toggle {1,2}
//   Anchored:   N_G(0) nonempty but not Separating
//               -> toggle {min N_G(0), k-1}
//   Separating: G+{0,k-1} is connected with cutpoint set exactly {0}
//               -> toggle the two smallest elements of the reroute set
// (Connectivity matters: a disconnected G+{0,k-1} can have {0} as its
// cutpoint set, but its reroute set is empty, so those faces are Anchored.)
enum class ApmClass { NoAnchor, Anchored, Separating };
ApmClass classify_apm(int n, int k, Face g);

// Reroute set of a Separating face: neighbors x of 0 in G+{0,k-1} lying in
// the component C of vertex n-1 in (G+{0,k-1})-0, from which n-1 is
// reachable inside C without passing through another neighbor of 0.
std::vector<int> reroute_set(int n, int k, Face g);

MorseMatching apm_matching(int n, int k);

std::string format_face(Face f);                          // "-" or "1 4 7"
std::string format_matching(const MorseMatching& m);      // one "a <-> b" per line

} // namespace nicx
