#include "nicx/morse.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "nicx/errors.hpp"

namespace nicx {

namespace {

Graph graph_of(int n, Face edges) {
    Graph g(n);
    g.edges = Bits128{edges, 0};
    return g;
}

std::array<std::uint32_t, kMaxVertices> adjacency_of(int n, Face edges) {
    std::array<std::uint32_t, kMaxVertices> adj{};
    for_each_bit(edges, [&](int e) {
        auto [a, b] = pair_unrank(e);
        adj[std::size_t(a)] |= 1u << b;
        adj[std::size_t(b)] |= 1u << a;
    });
    (void)n;
    return adj;
}

// component masks of the induced subgraph on `active`, ordered by lowest vertex
std::vector<std::uint32_t> component_masks(const std::array<std::uint32_t, kMaxVertices>& adj,
                                           std::uint32_t active) {
    std::vector<std::uint32_t> out;
    while (active) {
        std::uint32_t comp = active & (~active + 1);
        for (;;) {
            std::uint32_t grow = comp;
            std::uint32_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[std::size_t(v)] & active;
            }
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        active &= ~comp;
    }
    return out;
}

// DFS cycle detection on a node-subset of the matching digraph with the
// matching-reversed orientation.
bool oriented_cycle(const MatchingDigraph& g, const std::set<std::pair<int, int>>& matched,
                    const std::vector<int>& nodes) {
    std::map<int, std::vector<int>> succ;
    std::set<int> inset(nodes.begin(), nodes.end());
    for (auto [l, u] : g.edges) {
        if (!inset.count(l) || !inset.count(u)) continue;
        if (matched.count({l, u}))
            succ[l].push_back(u);
        else
            succ[u].push_back(l);
    }
    std::map<int, int> color; // 0 new, 1 open, 2 done
    for (int start : nodes) {
        if (color[start]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto& out = succ[v];
            if (next >= out.size()) {
                color[v] = 2;
                stack.pop_back();
                continue;
            }
            int w = out[next++];
            if (color[w] == 1) return true;
            if (color[w] == 0) {
                color[w] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }
    return false;
}

std::set<std::pair<int, int>> matched_ids(const MatchingDigraph& g, const MorseMatching& m) {
    std::set<std::pair<int, int>> ids;
    for (auto [a, b] : m.pairs) {
        if (popcount(a) > popcount(b)) std::swap(a, b);
        int la = g.node_of(a), lb = g.node_of(b);
        if (popcount(b) != popcount(a) + 1 || (a & ~b) != 0)
            throw invalid_request("matching pair is not a Hasse edge");
        ids.emplace(la, lb);
    }
    return ids;
}

} // namespace

int MatchingDigraph::node_of(Face f) const {
    auto it = index.find(f);
    if (it == index.end()) throw invalid_request("face is not a node of the digraph");
    return it->second;
}

MatchingDigraph build_matching_digraph(const SimplicialComplex& c) {
    if (!c.complete)
        throw invalid_request("matching digraph needs a fully enumerated complex");
    MatchingDigraph g;
    g.nodes = c.all_faces();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) g.index[g.nodes[i]] = int(i);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Face f = g.nodes[i];
        for_each_bit(f, [&](int b) {
            Face sub = f ^ (Face{1} << b);
            auto it = g.index.find(sub);
            if (it == g.index.end())
                throw invalid_request("complex is not downward closed");
            g.edges.emplace_back(it->second, int(i));
        });
    }
    return g;
}

MatchingReport is_acyclic_perfect_matching(const SimplicialComplex& c,
                                           const MorseMatching& m) {
    MatchingDigraph g = build_matching_digraph(c);
    std::set<std::pair<int, int>> ids = matched_ids(g, m);
    MatchingReport rep;
    std::set<int> used;
    rep.matching = true;
    for (auto [l, u] : ids) {
        if (used.count(l) || used.count(u)) rep.matching = false;
        used.insert(l);
        used.insert(u);
    }
    if (ids.size() != m.pairs.size()) rep.matching = false; // duplicate pairs
    rep.perfect = rep.matching && used.size() == g.nodes.size();
    rep.acyclic = !matching_has_cycle_layered(g, m);
    return rep;
}

bool matching_has_cycle_layered(const MatchingDigraph& g, const MorseMatching& m) {
    std::set<std::pair<int, int>> ids = matched_ids(g, m);
    std::map<int, std::vector<int>> by_dim;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        by_dim[popcount(g.nodes[i]) - 1].push_back(int(i));
    for (auto it = by_dim.begin(); it != by_dim.end(); ++it) {
        auto up = std::next(it);
        if (up == by_dim.end()) break;
        if (up->first != it->first + 1) continue;
        std::vector<int> layer = it->second;
        layer.insert(layer.end(), up->second.begin(), up->second.end());
        if (oriented_cycle(g, ids, layer)) return true;
    }
    return false;
}

bool matching_has_cycle_full(const MatchingDigraph& g, const MorseMatching& m) {
    std::vector<int> all(g.nodes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    return oriented_cycle(g, matched_ids(g, m), all);
}

CollapseResult collapse_by_matching(const SimplicialComplex& c, const MorseMatching& m) {
    MatchingDigraph g = build_matching_digraph(c);
    std::set<std::pair<int, int>> ids = matched_ids(g, m);
    CollapseResult res;
    std::vector<int> partner(g.nodes.size(), -1);
    for (auto [l, u] : ids) {
        if (partner[std::size_t(l)] != -1 || partner[std::size_t(u)] != -1) {
            res.reason = "matching reuses a face";
            return res;
        }
        partner[std::size_t(l)] = u;
        partner[std::size_t(u)] = l;
    }
    if (2 * ids.size() != g.nodes.size()) {
        res.reason = "matching is not perfect (" + std::to_string(ids.size()) +
                     " pairs, " + std::to_string(g.nodes.size()) + " faces)";
        return res;
    }
    std::vector<std::vector<int>> up(g.nodes.size()), down(g.nodes.size());
    for (auto [l, u] : g.edges) {
        up[std::size_t(l)].push_back(u);
        down[std::size_t(u)].push_back(l);
    }
    std::vector<char> alive(g.nodes.size(), 1);
    std::vector<int> up_cnt(g.nodes.size());
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        up_cnt[i] = int(up[i].size());
        if (up_cnt[i] == 1) ready.push(int(i));
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        if (!alive[std::size_t(a)] || up_cnt[std::size_t(a)] != 1) continue;
        int b = -1;
        for (int u2 : up[std::size_t(a)])
            if (alive[std::size_t(u2)]) b = u2;
        if (b != partner[std::size_t(a)]) continue; // only couples collapse
        res.trace.push_back({g.nodes[std::size_t(a)], g.nodes[std::size_t(b)]});
        alive[std::size_t(a)] = alive[std::size_t(b)] = 0;
        removed += 2;
        for (int x : {a, b})
            for (int nb : down[std::size_t(x)])
                if (alive[std::size_t(nb)] && --up_cnt[std::size_t(nb)] == 1)
                    ready.push(nb);
    }
    if (removed != g.nodes.size()) {
        res.reason = "stuck with " + std::to_string(g.nodes.size() - removed) +
                     " faces left: no free pair (the matching has a directed cycle)";
        return res;
    }
    if (res.trace.back().free_face != 0)
        throw invariant_violation("collapse did not end at the empty face");
    res.ok = true;
    res.final_node = res.trace.back().containing;
    return res;
}

PhiValue phi_map(const Graph& g) {
    if (g.n < 3) throw invalid_request("phi_map needs at least 3 vertices");
    if (is_i_connected(g, 2)) throw invalid_request("phi_map: input is 2-connected");
    auto adj = g.adjacency();
    PhiValue v;
    v.neighbors = adj[0];
    std::uint32_t rest = ((1u << g.n) - 1) & ~1u;
    v.blocks = component_masks(adj, rest);
    return v;
}

bool phi_leq(const PhiValue& a, const PhiValue& b) {
    if (a.neighbors & ~b.neighbors) return false;
    for (std::uint32_t blk : a.blocks) {
        bool inside = false;
        for (std::uint32_t big : b.blocks)
            if ((blk & ~big) == 0) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

namespace {

SimplicialComplex complex_from_levels(int universe, std::map<int, std::vector<Face>> lv) {
    SimplicialComplex c;
    c.universe = universe;
    c.levels = std::move(lv);
    c.complete = true;
    return c;
}

} // namespace

SimplicialComplex build_delta_k(int n, int k) {
    if (n < 3 || n > 11 || k < 2 || k > n - 1)
        throw invalid_request("build_delta_k expects 3 <= n <= 11, 2 <= k <= n-1");
    int u = Graph::universe_size(n);
    std::uint32_t allowed = ((1u << k) - 1) & ~1u; // {1..k-1}
    auto pred = [n, allowed](Face f) {
        auto adj = adjacency_of(n, f);
        if (adj[0] & ~allowed) return false;
        return !is_i_connected_adj(adj, n, 2);
    };
    return complex_from_levels(u, enumerate_closed(u, pred));
}

SimplicialComplex build_delta_k1k(int n, int k) {
    if (n < 4 || n > 11 || k < 3 || k > n - 1)
        throw invalid_request("build_delta_k1k expects 4 <= n <= 11, 3 <= k <= n-1");
    int u = Graph::universe_size(n);
    int bridge = pair_rank(0, k - 1);
    std::uint32_t allowed = ((1u << (k - 1)) - 1) & ~1u; // {1..k-2}
    // neighbor condition is on f itself, the connectivity condition on f+bridge
    auto pred = [n, allowed, bridge](Face f) {
        auto adj = adjacency_of(n, f);
        if (adj[0] & ~allowed) return false;
        auto adj2 = adjacency_of(n, f | (Face{1} << bridge));
        return !is_i_connected_adj(adj2, n, 2);
    };
    return complex_from_levels(u, enumerate_closed(u, pred));
}

ApmClass classify_apm(int n, int k, Face g) {
    auto adj = adjacency_of(n, g);
    std::uint32_t allowed = ((1u << (k - 1)) - 1) & ~1u;
    if (adj[0] & ~allowed) throw invalid_request("face is outside the matching domain");
    if (adj[0] == 0) return ApmClass::NoAnchor;
    Face h = g | (Face{1} << pair_rank(0, k - 1));
    auto adj2 = adjacency_of(n, h);
    if (is_i_connected_adj(adj2, n, 2))
        throw invalid_request("face is outside the matching domain");
    // The reroute step needs a path from 0 to n-1, so a disconnected h falls
    // back to the anchored rule even when 0 is its only cutpoint.
    if (component_masks(adj2, (1u << n) - 1).size() == 1) {
        BlockDecomposition bd = block_decomposition(graph_of(n, h));
        if (bd.cutpoints == std::vector<int>{0}) return ApmClass::Separating;
    }
    return ApmClass::Anchored;
}

std::vector<int> reroute_set(int n, int k, Face g) {
    Face h = g | (Face{1} << pair_rank(0, k - 1));
    auto adj = adjacency_of(n, h);
    std::uint32_t nbr0 = adj[0];
    std::uint32_t rest = ((1u << n) - 1) & ~1u;
    std::uint32_t c1 = 0;
    for (std::uint32_t comp : component_masks(adj, rest))
        if (comp & (1u << (n - 1))) c1 = comp;
    std::vector<int> out;
    std::uint32_t candidates = c1 & nbr0;
    while (candidates) {
        int x = std::countr_zero(candidates);
        candidates &= candidates - 1;
        std::uint32_t area = (c1 & ~nbr0) | (1u << x);
        std::uint32_t seen = 1u << x;
        for (;;) {
            std::uint32_t grow = seen;
            std::uint32_t scan = seen;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[std::size_t(v)] & area;
            }
            if (grow == seen) break;
            seen = grow;
        }
        if (seen & (1u << (n - 1))) out.push_back(x);
    }
    return out;
}

MorseMatching apm_matching(int n, int k) {
    SimplicialComplex dom = build_delta_k1k(n, k);
    MorseMatching m;
    for (Face g : dom.all_faces()) {
        ApmClass cls = classify_apm(n, k, g);
        int toggle;
        switch (cls) {
            case ApmClass::NoAnchor:
                toggle = pair_rank(1, 2);
                break;
            case ApmClass::Anchored: {
                auto adj = adjacency_of(n, g);
                toggle = pair_rank(std::countr_zero(adj[0]), k - 1);
                break;
            }
            case ApmClass::Separating: {
                std::vector<int> s = reroute_set(n, k, g);
                if (s.size() < 2)
                    throw invariant_violation("reroute set smaller than 2");
                toggle = pair_rank(s[0], s[1]);
                break;
            }
        }
        Face bit = Face{1} << toggle;
        if (g & bit) continue; // emit each pair from its lower face
        if (!dom.is_face(g | bit))
            throw invariant_violation("matching partner fell outside the domain");
        m.pairs.emplace_back(g, g | bit);
    }
    return m;
}

std::string format_face(Face f) {
    if (f == 0) return "-";
    std::string s;
    for_each_bit(f, [&](int b) {
        if (!s.empty()) s += ' ';
        s += std::to_string(b);
    });
    return s;
}

std::string format_matching(const MorseMatching& m) {
    std::string out;
    for (auto [a, b] : m.pairs) {
        out += format_face(a);
        out += " <-> ";
        out += format_face(b);
        out += '\n';
    }
    return out;
}

} // namespace nicx
