#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nicx/bits.hpp"
#include "nicx/combinat.hpp"

namespace nicx {

constexpr int kMaxVertices = 16;

// Simple graph on vertex set {0..n-1}; edge membership over the C(n,2)
// universe of vertex pairs in colexicographic order.  Isolated vertices are
// part of the graph (the vertex set is always all of {0..n-1}).
struct Graph {
    int n = 0;
    Bits128 edges;

    Graph() = default;
    explicit Graph(int n_) : n(n_) {}
    Graph(int n_, const std::vector<std::pair<int, int>>& es);

    static int universe_size(int n) { return n * (n - 1) / 2; }
    bool has_edge(int a, int b) const;
    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    int edge_count() const { return edges.count(); }
    std::vector<std::pair<int, int>> edge_list() const;
    // neighbor masks; index = vertex
    std::array<std::uint32_t, kMaxVertices> adjacency() const;
    bool operator==(const Graph&) const = default;
};

// k-uniform hypergraph on {0..n-1}; edges over the C(n,k) universe of
// k-subsets in colex order.
struct HyperGraph {
    int n = 0;
    int k = 2;
    Bits128 edges;

    HyperGraph() = default;
    HyperGraph(int n_, int k_) : n(n_), k(k_) {}
    HyperGraph(int n_, int k_, const std::vector<std::vector<int>>& es);

    static int universe_size(int n, int k);
    std::vector<std::vector<int>> edge_list() const;
    bool operator==(const HyperGraph&) const = default;
};

// vertex set (0-based ascending) of the idx-th k-subset, plus mask form
std::vector<int> kset_vertices(int k, int idx);
std::uint32_t kset_mask(int k, int idx);

struct BlockDecomposition {
    // maximal 2-connected subgraphs plus bridges, plus isolated vertices as
    // singleton blocks; each block is an ascending vertex list.  Ordered by
    // (smallest vertex, size, lexicographic).
    std::vector<std::vector<int>> blocks;
    std::vector<int> cutpoints; // ascending
    // Bipartite incidence of blocks and cutpoints: vertices 0..B-1 are the
    // blocks, B..B+C-1 the cutpoints, with an edge when the cutpoint lies in
    // the block.  Always a forest.
    Graph block_forest;
};

// Components as ascending vertex lists, ordered by smallest vertex.
// Isolated vertices are components; the 1-vertex graph is connected.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Definition-level test: g is i-connected when no deletion of fewer than i
// vertices disconnects it.  Requires 1 <= i <= n-1.
bool is_i_connected(const Graph& g, int i);
// Independent route via internally disjoint paths (max-flow) between all
// non-adjacent pairs.
bool menger_i_connected(const Graph& g, int i);

BlockDecomposition block_decomposition(const Graph& g);

Graph underlying_graph(const HyperGraph& h);
// Smallest hypergraph containing h that induces the complete k-graph on every
// block of its underlying graph.  Extensive, monotone, idempotent.
HyperGraph block_closure(const HyperGraph& h);

// --- low-level helpers shared with the complex builders -------------------
// Connectivity of the subgraph induced on `active` (nonempty vertex mask),
// given neighbor masks.
bool connected_masked(const std::array<std::uint32_t, kMaxVertices>& adj, std::uint32_t active);
// is_i_connected on a prebuilt adjacency (all of {0..n-1} is the vertex set).
bool is_i_connected_adj(const std::array<std::uint32_t, kMaxVertices>& adj, int n, int i);

// Edge-universe permutation induced by a vertex permutation (vperm[v] = image).
std::vector<int> pair_universe_perm(int n, const std::vector<int>& vperm);
std::vector<int> kset_universe_perm(int n, int k, const std::vector<int>& vperm);

// JSON I/O: {"n": n, "k": k, "edges": [[a,b],...]} with 1-based vertices.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const HyperGraph& h);
HyperGraph hypergraph_from_json(const nlohmann::json& j);

} // namespace nicx
