#include "nicx/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <queue>

#include <nlohmann/json.hpp>

#include "nicx/errors.hpp"

namespace nicx {

Graph::Graph(int n_, const std::vector<std::pair<int, int>>& es) : n(n_) {
    for (auto [a, b] : es) add_edge(a, b);
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return edges.test(pair_rank(a, b));
}

void Graph::add_edge(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw invalid_request("Graph::add_edge: bad endpoints");
    if (a > b) std::swap(a, b);
    edges.set(pair_rank(a, b));
}

void Graph::remove_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    edges.reset(pair_rank(a, b));
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    edges.for_each([&](int idx) {
        auto [a, b] = pair_unrank(idx);
        out.emplace_back(a, b);
    });
    return out;
}

std::array<std::uint32_t, kMaxVertices> Graph::adjacency() const {
    std::array<std::uint32_t, kMaxVertices> adj{};
    edges.for_each([&](int idx) {
        auto [a, b] = pair_unrank(idx);
        adj[a] |= (1u << b);
        adj[b] |= (1u << a);
    });
    return adj;
}

int HyperGraph::universe_size(int n, int k) {
    std::uint64_t u = binom(n, k);
    if (u > 128) throw invalid_request("HyperGraph: universe C(n,k) exceeds 128");
    return int(u);
}

HyperGraph::HyperGraph(int n_, int k_, const std::vector<std::vector<int>>& es) : n(n_), k(k_) {
    universe_size(n, k);
    for (auto e : es) {
        std::sort(e.begin(), e.end());
        if (int(e.size()) != k) throw invalid_request("HyperGraph: edge arity mismatch");
        edges.set(int(subset_rank(e)));
    }
}

std::vector<std::vector<int>> HyperGraph::edge_list() const {
    std::vector<std::vector<int>> out;
    edges.for_each([&](int idx) { out.push_back(subset_unrank(idx, k)); });
    return out;
}

std::vector<int> kset_vertices(int k, int idx) { return subset_unrank(idx, k); }

std::uint32_t kset_mask(int k, int idx) {
    std::uint32_t m = 0;
    for (int v : subset_unrank(idx, k)) m |= (1u << v);
    return m;
}

bool connected_masked(const std::array<std::uint32_t, kMaxVertices>& adj, std::uint32_t active) {
    if (!active) return true;
    std::uint32_t seen = active & (~active + 1); // lowest vertex
    while (true) {
        std::uint32_t frontier = seen;
        std::uint32_t grown = seen;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= adj[v] & active;
        }
        if (grown == seen) break;
        seen = grown;
    }
    return seen == active;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    auto adj = g.adjacency();
    std::uint32_t all = g.n >= 32 ? ~0u : ((1u << g.n) - 1);
    std::uint32_t left = all;
    std::vector<std::vector<int>> comps;
    while (left) {
        std::uint32_t seed = left & (~left + 1);
        std::uint32_t comp = seed;
        while (true) {
            std::uint32_t grown = comp;
            std::uint32_t f = comp;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                grown |= adj[v] & left;
            }
            if (grown == comp) break;
            comp = grown;
        }
        std::vector<int> verts;
        std::uint32_t c = comp;
        while (c) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        comps.push_back(verts);
        left &= ~comp;
    }
    return comps;
}

bool is_i_connected_adj(const std::array<std::uint32_t, kMaxVertices>& adj, int n, int i) {
    std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
    // deletion sets of every size j < i
    for (int j = 0; j < i; ++j) {
        bool ok = true;
        for_each_k_subset(n, j, [&](Face del) {
            if (!ok) return;
            std::uint32_t active = all & ~std::uint32_t(del);
            if (!connected_masked(adj, active)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_i_connected(const Graph& g, int i) {
    if (i < 1 || i > g.n - 1)
        throw invalid_request("is_i_connected: need 1 <= i <= n-1");
    return is_i_connected_adj(g.adjacency(), g.n, i);
}

namespace {

// unit-capacity max flow on a small dense network, early exit at `need`
int max_flow_upto(std::vector<std::vector<int>>& cap, int s, int t, int need) {
    int N = int(cap.size());
    int flow = 0;
    std::vector<int> prev(N);
    while (flow < need) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && prev[t] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < N; ++v)
                if (prev[v] == -1 && cap[u][v] > 0) {
                    prev[v] = u;
                    q.push(v);
                }
        }
        if (prev[t] == -1) break;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool menger_i_connected(const Graph& g, int i) {
    if (i < 1 || i > g.n - 1)
        throw invalid_request("menger_i_connected: need 1 <= i <= n-1");
    int n = g.n;
    const int big = 2 * n + 4;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            // split vertices: in(v)=2v, out(v)=2v+1
            std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
            for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
            for (auto [a, b] : g.edge_list()) {
                cap[2 * a + 1][2 * b] = 1;
                cap[2 * b + 1][2 * a] = 1;
            }
            if (max_flow_upto(cap, 2 * s + 1, 2 * t, i) < i) return false;
        }
    }
    return true;
}

namespace {

struct BlockDfs {
    const std::array<std::uint32_t, kMaxVertices>& adj;
    int n;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockDfs(const std::array<std::uint32_t, kMaxVertices>& a, int n_)
        : adj(a), n(n_), disc(n_, -1), low(n_, 0), is_cut(n_, 0) {}

    void pop_block(int u, int v) {
        std::uint32_t verts = 0;
        while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts |= (1u << a) | (1u << b);
            if (a == u && b == v) break;
        }
        std::vector<int> vs;
        while (verts) {
            vs.push_back(std::countr_zero(verts));
            verts &= verts - 1;
        }
        blocks.push_back(vs);
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        std::uint32_t nb = adj[u];
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v == parent) continue;
            if (disc[v] == -1) {
                ++children;
                estack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1) is_cut[u] = 1;
                    pop_block(u, v);
                }
            } else if (disc[v] < disc[u]) {
                estack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children >= 2) is_cut[u] = 1;
    }
};

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    auto adj = g.adjacency();
    BlockDfs d(adj, g.n);
    for (int v = 0; v < g.n; ++v) {
        if (d.disc[v] == -1) {
            d.dfs(v, -1);
            if (adj[v] == 0) d.blocks.push_back({v}); // isolated vertex
        }
    }
    std::sort(d.blocks.begin(), d.blocks.end(), [](const auto& a, const auto& b) {
        if (a.front() != b.front()) return a.front() < b.front();
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    BlockDecomposition out;
    out.blocks = std::move(d.blocks);
    for (int v = 0; v < g.n; ++v)
        if (d.is_cut[v]) out.cutpoints.push_back(v);

    int B = int(out.blocks.size()), C = int(out.cutpoints.size());
    Graph forest(B + C);
    for (int b = 0; b < B; ++b)
        for (int c = 0; c < C; ++c)
            if (std::binary_search(out.blocks[b].begin(), out.blocks[b].end(), out.cutpoints[c]))
                forest.add_edge(b, B + c);
    out.block_forest = forest;
    return out;
}

Graph underlying_graph(const HyperGraph& h) {
    Graph g(h.n);
    h.edges.for_each([&](int idx) {
        auto vs = subset_unrank(idx, h.k);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    });
    return g;
}

HyperGraph block_closure(const HyperGraph& h) {
    auto bd = block_decomposition(underlying_graph(h));
    HyperGraph out(h.n, h.k);
    for (const auto& blk : bd.blocks) {
        if (int(blk.size()) < h.k) continue;
        // all k-subsets of the block
        std::vector<int> idxs(h.k);
        for (int i = 0; i < h.k; ++i) idxs[i] = i;
        while (true) {
            std::vector<int> verts(h.k);
            for (int i = 0; i < h.k; ++i) verts[i] = blk[idxs[i]];
            out.edges.set(int(subset_rank(verts)));
            int i = h.k - 1;
            while (i >= 0 && idxs[i] == int(blk.size()) - h.k + i) --i;
            if (i < 0) break;
            ++idxs[i];
            for (int j = i + 1; j < h.k; ++j) idxs[j] = idxs[j - 1] + 1;
        }
    }
    if (!h.edges.subset_of(out.edges))
        throw invariant_violation("block_closure: closure not extensive");
    return out;
}

std::vector<int> pair_universe_perm(int n, const std::vector<int>& vperm) {
    int m = Graph::universe_size(n);
    std::vector<int> out(m);
    for (int idx = 0; idx < m; ++idx) {
        auto [a, b] = pair_unrank(idx);
        int a2 = vperm[a], b2 = vperm[b];
        if (a2 > b2) std::swap(a2, b2);
        out[idx] = pair_rank(a2, b2);
    }
    return out;
}

std::vector<int> kset_universe_perm(int n, int k, const std::vector<int>& vperm) {
    int m = HyperGraph::universe_size(n, k);
    std::vector<int> out(m);
    for (int idx = 0; idx < m; ++idx) {
        auto vs = subset_unrank(idx, k);
        for (int& v : vs) v = vperm[v];
        std::sort(vs.begin(), vs.end());
        out[idx] = int(subset_rank(vs));
    }
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["k"] = 2;
    auto arr = nlohmann::json::array();
    for (auto [a, b] : g.edge_list()) arr.push_back({a + 1, b + 1});
    j["edges"] = arr;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n")) throw invalid_request("graph_from_json: missing n");
    if (j.value("k", 2) != 2) throw invalid_request("graph_from_json: k must be 2");
    Graph g(j["n"].get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array()))
        g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    return g;
}

nlohmann::json hypergraph_to_json(const HyperGraph& h) {
    nlohmann::json j;
    j["n"] = h.n;
    j["k"] = h.k;
    auto arr = nlohmann::json::array();
    for (const auto& e : h.edge_list()) {
        nlohmann::json je = nlohmann::json::array();
        for (int v : e) je.push_back(v + 1);
        arr.push_back(je);
    }
    j["edges"] = arr;
    return j;
}

HyperGraph hypergraph_from_json(const nlohmann::json& j) {
    HyperGraph h(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        std::vector<int> vs;
        for (const auto& v : e) vs.push_back(v.get<int>() - 1);
        std::sort(vs.begin(), vs.end());
        if (int(vs.size()) != h.k) throw invalid_request("hypergraph_from_json: arity mismatch");
        h.edges.set(int(subset_rank(vs)));
    }
    return h;
}

} // namespace nicx
