#include "nicx/sigma.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "nicx/combinat.hpp"
#include "nicx/errors.hpp"

namespace nicx {

namespace {

Graph graph_of(int n, Face edges) {
    Graph g(n);
    g.edges = Bits128{edges, 0};
    return g;
}

Face clique_edges(std::uint32_t vset) {
    Face out = 0;
    std::uint32_t a = vset;
    while (a) {
        int i = std::countr_zero(a);
        a &= a - 1;
        std::uint32_t b = a;
        while (b) {
            int j = std::countr_zero(b);
            b &= b - 1;
            out |= Face{1} << pair_rank(i, j);
        }
    }
    return out;
}

std::uint32_t vertex_mask(const std::vector<int>& vs) {
    std::uint32_t m = 0;
    for (int v : vs) m |= 1u << v;
    return m;
}

Face edges_within(Face g, std::uint32_t vset) {
    Face out = 0;
    for_each_bit(g, [&](int e) {
        auto [a, b] = pair_unrank(e);
        if ((vset >> a) & (vset >> b) & 1) out |= Face{1} << e;
    });
    return out;
}

// smallest supergraph whose blocks are cliques
Face complete_blocks(int n, Face g) {
    Face out = g;
    for (const auto& blk : block_decomposition(graph_of(n, g)).blocks)
        if (blk.size() >= 2) out |= clique_edges(vertex_mask(blk));
    return out;
}

std::string edge_label(Face g) {
    if (g == 0) return "-";
    std::string s;
    for_each_bit(g, [&](int e) {
        auto [a, b] = pair_unrank(e);
        if (!s.empty()) s += ' ';
        s += std::to_string(a + 1) + "-" + std::to_string(b + 1);
    });
    return s;
}

void check_range(int n, int k) {
    if (n < 2 || n > 11 || k < 2 || k > n)
        throw invalid_request("sigma lattice needs 2 <= k <= n <= 11");
}

} // namespace

std::vector<std::uint32_t> component_partition(int n, Face g) {
    auto adj = graph_of(n, g).adjacency();
    std::uint32_t active = (1u << n) - 1;
    std::vector<std::uint32_t> out;
    while (active) {
        std::uint32_t comp = active & (~active + 1);
        for (;;) {
            std::uint32_t grow = comp, scan = comp;
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

bool is_sigma_element(int n, int k, Face g) {
    check_range(n, k);
    for (const auto& blk : block_decomposition(graph_of(n, g)).blocks) {
        if (blk.size() == 1) continue;
        if (int(blk.size()) < k) return false;
        Face want = clique_edges(vertex_mask(blk));
        if ((want & ~g) != 0) return false;
    }
    return true;
}

Face sigma_join(int n, int k, Face a, Face b) {
    if (!is_sigma_element(n, k, a) || !is_sigma_element(n, k, b))
        throw invalid_request("join operands are not lattice elements");
    return complete_blocks(n, a | b);
}

Face sigma_meet(int n, int k, Face a, Face b) {
    if (!is_sigma_element(n, k, a) || !is_sigma_element(n, k, b))
        throw invalid_request("meet operands are not lattice elements");
    Face g = a & b;
    Face out = 0;
    for (const auto& blk : block_decomposition(graph_of(n, g)).blocks)
        if (int(blk.size()) >= k) out |= edges_within(g, vertex_mask(blk));
    return out;
}

SigmaLattice sigma_lattice(int n, int k) {
    check_range(n, k);
    std::vector<Face> atoms;
    for_each_k_subset(n, k, [&](Face vset) {
        atoms.push_back(clique_edges(std::uint32_t(vset)));
    });
    std::set<Face> seen{0};
    std::deque<Face> queue{0};
    while (!queue.empty()) {
        Face x = queue.front();
        queue.pop_front();
        for (Face a : atoms) {
            Face y = complete_blocks(n, x | a);
            if (seen.insert(y).second) {
                if (seen.size() > 50000) throw infeasible("sigma lattice too large");
                queue.push_back(y);
            }
        }
    }
    SigmaLattice s;
    s.n = n;
    s.k = k;
    s.graphs.assign(seen.begin(), seen.end());
    std::vector<std::string> labels;
    labels.reserve(s.graphs.size());
    for (Face g : s.graphs) labels.push_back(edge_label(g));
    const std::vector<Face>& gs = s.graphs;
    s.poset = poset_from_leq(
        int(gs.size()),
        [&gs](int i, int j) { return (gs[std::size_t(i)] & ~gs[std::size_t(j)]) == 0; },
        std::move(labels));
    return s;
}

int SigmaLattice::index_of(Face g) const {
    auto it = std::lower_bound(graphs.begin(), graphs.end(), g);
    if (it == graphs.end() || *it != g)
        throw invalid_request("graph is not a lattice element");
    return int(it - graphs.begin());
}

namespace {

int diff_degree(Face diff, int v) {
    int d = 0;
    for_each_bit(diff, [&](int e) {
        auto [a, b] = pair_unrank(e);
        if (a == v || b == v) ++d;
    });
    return d;
}

std::uint32_t diff_vertices(Face diff) {
    std::uint32_t s = 0;
    for_each_bit(diff, [&](int e) {
        auto [a, b] = pair_unrank(e);
        s |= (1u << a) | (1u << b);
    });
    return s;
}

std::uint32_t diff_neighbors(Face diff, int v) {
    std::uint32_t s = 0;
    for_each_bit(diff, [&](int e) {
        auto [a, b] = pair_unrank(e);
        if (a == v) s |= 1u << b;
        if (b == v) s |= 1u << a;
    });
    return s;
}

int component_of(const std::vector<std::uint32_t>& comps, int v) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if ((comps[i] >> v) & 1) return int(i);
    return -1;
}

bool matches_clique_across(int n, int k, Face gx, Face diff) {
    std::uint32_t s = diff_vertices(diff);
    if (std::popcount(s) != k) return false;
    if (clique_edges(s) != diff) return false;
    auto comps = component_partition(n, gx);
    std::set<int> cids;
    std::uint32_t bits = s;
    while (bits) {
        cids.insert(component_of(comps, std::countr_zero(bits)));
        bits &= bits - 1;
    }
    return int(cids.size()) == k;
}

bool matches_block_merge(int n, Face gx, Face diff) {
    std::uint32_t s = diff_vertices(diff);
    int a0 = std::countr_zero(s);
    std::uint32_t partb = diff_neighbors(diff, a0);
    std::uint32_t parta = s & ~partb;
    if (!parta || !partb || (parta & partb)) return false;
    std::uint32_t bits = parta;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        if (diff_neighbors(diff, v) != partb) return false;
    }
    bits = partb;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        if (diff_neighbors(diff, v) != parta) return false;
    }
    std::uint32_t hinge_a = 0, hinge_b = 0; // candidate shared vertices
    for (const auto& blk : block_decomposition(graph_of(n, gx)).blocks) {
        std::uint32_t bm = vertex_mask(blk);
        if ((parta & ~bm) == 0 && std::popcount(bm) == std::popcount(parta) + 1)
            hinge_a |= bm & ~parta;
        if ((partb & ~bm) == 0 && std::popcount(bm) == std::popcount(partb) + 1)
            hinge_b |= bm & ~partb;
    }
    return (hinge_a & hinge_b & ~s) != 0;
}

bool matches_star_join(int n, int k, Face gx, Face diff) {
    if (k <= 2) return false;
    std::uint32_t s = diff_vertices(diff);
    int m = std::popcount(s);
    if (m < 3) return false;
    int center = -1;
    std::uint32_t bits = s;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        int d = diff_degree(diff, v);
        if (d == m - 1)
            center = (center == -1) ? v : -2;
        else if (d != 1)
            return false;
    }
    if (center < 0) return false;
    std::uint32_t leaves = s & ~(1u << center);
    bool is_block = false;
    for (const auto& blk : block_decomposition(graph_of(n, gx)).blocks)
        if (vertex_mask(blk) == leaves) is_block = true;
    if (!is_block) return false;
    auto comps = component_partition(n, gx);
    return component_of(comps, center) !=
           component_of(comps, std::countr_zero(leaves));
}

} // namespace

std::map<std::pair<int, int>, CoverType> classify_covers(const SigmaLattice& s) {
    std::map<std::pair<int, int>, CoverType> out;
    for (auto [x, y] : s.poset.cover_pairs()) {
        Face gx = s.graphs[std::size_t(x)];
        Face diff = s.graphs[std::size_t(y)] & ~gx;
        int hits = 0;
        CoverType t{};
        if (matches_clique_across(s.n, s.k, gx, diff)) {
            ++hits;
            t = CoverType::CliqueAcross;
        }
        if (matches_block_merge(s.n, gx, diff)) {
            ++hits;
            t = CoverType::BlockMerge;
        }
        if (matches_star_join(s.n, s.k, gx, diff)) {
            ++hits;
            t = CoverType::StarJoin;
        }
        if (hits != 1)
            throw invariant_violation("cover " + s.poset.label(x) + " -> " +
                                      s.poset.label(y) + " matches " +
                                      std::to_string(hits) + " cover shapes");
        out[{x, y}] = t;
    }
    return out;
}

int sigma_rank(int n, int k, Face g) {
    if (k != 2 && k != 3) throw invalid_request("closed-form rank needs k = 2 or 3");
    int c = int(component_partition(n, g).size());
    int b = 0;
    for (const auto& blk : block_decomposition(graph_of(n, g)).blocks)
        if (blk.size() >= 2) ++b;
    return k == 2 ? 2 * n - 2 * c - b : n - c - b;
}

ChainReport rank_and_chain_spectrum(const SigmaLattice& s) {
    ChainReport rep;
    const FinitePoset& p = s.poset;
    if (p.bottom < 0 || p.top < 0)
        throw invariant_violation("sigma lattice lost its bounds");
    std::vector<std::set<int>> lengths(static_cast<std::size_t>(p.n));
    for (int x = p.n - 1; x >= 0; --x) {
        if (x == p.top) {
            lengths[std::size_t(x)].insert(0);
            continue;
        }
        for (int y : p.covers_up[std::size_t(x)])
            for (int l : lengths[std::size_t(y)]) lengths[std::size_t(x)].insert(l + 1);
    }
    rep.chain_lengths = lengths[std::size_t(p.bottom)];
    if (s.k <= 3) {
        rep.rank_checked = true;
        rep.graded = sigma_rank(s.n, s.k, s.graphs[std::size_t(p.bottom)]) == 0;
        for (auto [x, y] : p.cover_pairs())
            if (sigma_rank(s.n, s.k, s.graphs[std::size_t(y)]) !=
                sigma_rank(s.n, s.k, s.graphs[std::size_t(x)]) + 1)
                rep.graded = false;
    }
    return rep;
}

} // namespace nicx
