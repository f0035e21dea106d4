#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "nicx/errors.hpp"
#include "nicx/graphs.hpp"

#include <nlohmann/json.hpp>

using namespace nicx;

TEST_CASE("pair rank is colexicographic and round-trips") {
    // {0,1} {0,2} {1,2} {0,3} {1,3} {2,3} ...
    CHECK(pair_rank(0, 1) == 0);
    CHECK(pair_rank(0, 2) == 1);
    CHECK(pair_rank(1, 2) == 2);
    CHECK(pair_rank(0, 3) == 3);
    CHECK(pair_rank(2, 3) == 5);
    for (int idx = 0; idx < 120; ++idx) {
        auto [a, b] = pair_unrank(idx);
        CHECK(a < b);
        CHECK(pair_rank(a, b) == idx);
    }
    // colex: pairs sorted by (b, a)
    int prev_b = -1, prev_a = -1;
    for (int idx = 0; idx < 45; ++idx) {
        auto [a, b] = pair_unrank(idx);
        CHECK((b > prev_b || (b == prev_b && a > prev_a)));
        prev_a = a;
        prev_b = b;
    }
}

TEST_CASE("subset rank round-trips against colex enumeration") {
    for (int k = 1; k <= 4; ++k) {
        std::uint64_t expect = 0;
        std::vector<Face> seen;
        for_each_k_subset(9, k, [&](Face f) { seen.push_back(f); });
        CHECK(seen.size() == binom(9, k));
        CHECK(std::is_sorted(seen.begin(), seen.end())); // numeric = colex
        for (Face f : seen) {
            auto verts = bits_of(f);
            CHECK(subset_rank(verts) == expect);
            CHECK(subset_unrank(expect, k) == verts);
            ++expect;
        }
    }
}

TEST_CASE("kset universe helpers agree with subset unranking") {
    for (int idx = 0; idx < 20; ++idx) {
        auto verts = kset_vertices(3, idx);
        CHECK(int(verts.size()) == 3);
        std::uint32_t mask = 0;
        for (int v : verts) mask |= 1u << v;
        CHECK(kset_mask(3, idx) == mask);
    }
}

TEST_CASE("number theory helpers") {
    CHECK(mobius_mu(1) == 1);
    CHECK(mobius_mu(2) == -1);
    CHECK(mobius_mu(4) == 0);
    CHECK(mobius_mu(6) == 1);
    CHECK(mobius_mu(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(10) == 4);
    CHECK(divisors_of(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    // Gauss: sum of phi over divisors is n
    for (int n = 1; n <= 60; ++n) {
        int s = 0;
        for (int d : divisors_of(n)) s += euler_phi(d);
        CHECK(s == n);
    }
    CHECK(factorial_big(10) == 3628800);
    CHECK(binomial_big(50, 25).str() == "126410606437752");
    CHECK(binom(10, 3) == 120);
}

TEST_CASE("partitions and set partitions have the right counts") {
    // p(n) for n = 1..9
    const int p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 1; n <= 9; ++n) {
        auto parts = partitions_of(n);
        CHECK(int(parts.size()) == p[n - 1]);
        for (const auto& q : parts) {
            int sum = 0;
            for (int x : q) {
                CHECK(x > 0);
                sum += x;
            }
            CHECK(sum == n);
            CHECK(std::is_sorted(q.rbegin(), q.rend()));
        }
    }
    // Bell numbers
    const std::int64_t bell[] = {1, 2, 5, 15, 52, 203, 877};
    for (int n = 1; n <= 7; ++n) {
        std::int64_t count = 0;
        for_each_set_partition(n, [&](const std::vector<std::uint32_t>& blocks) {
            ++count;
            std::uint32_t all = 0;
            for (std::uint32_t b : blocks) {
                CHECK((all & b) == 0); // disjoint
                all |= b;
            }
            CHECK(all == (1u << n) - 1);
        });
        CHECK(count == bell[n - 1]);
    }
}

TEST_CASE("graph edge bookkeeping") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 1);
    g.add_edge(4, 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 3));
    CHECK(!g.has_edge(0, 2));
    g.remove_edge(1, 3);
    CHECK(!g.has_edge(1, 3));
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {2, 4}});
    auto adj = g.adjacency();
    CHECK(adj[0] == 0b00010u);
    CHECK(adj[1] == 0b00001u);
    CHECK(adj[2] == 0b10000u);
    CHECK(adj[4] == 0b00100u);
    CHECK_THROWS_AS(g.add_edge(2, 2), invalid_request);
    CHECK_THROWS_AS(g.add_edge(0, 5), invalid_request);
}

TEST_CASE("connected components include isolated vertices") {
    Graph g(6, {{0, 1}, {1, 2}, {4, 5}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK(connected_components(Graph(1)).size() == 1);
}

TEST_CASE("vertex connectivity by definition") {
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_i_connected(path, 1));
    CHECK(!is_i_connected(path, 2));

    Graph cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(is_i_connected(cycle, 2));
    CHECK(!is_i_connected(cycle, 3));

    Graph k5(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.add_edge(a, b);
    for (int i = 1; i <= 4; ++i) CHECK(is_i_connected(k5, i));

    Graph disc(4, {{0, 1}, {2, 3}});
    CHECK(!is_i_connected(disc, 1));

    CHECK_THROWS_AS(is_i_connected(path, 0), invalid_request);
    CHECK_THROWS_AS(is_i_connected(path, 4), invalid_request);
}

TEST_CASE("deletion and path-count connectivity routes agree exhaustively") {
    // all graphs on 5 vertices, i = 1..4
    for (Face mask = 0; mask < (Face(1) << 10); ++mask) {
        Graph g(5);
        g.edges = Bits128{mask, 0};
        for (int i = 1; i <= 4; ++i)
            REQUIRE(is_i_connected(g, i) == menger_i_connected(g, i));
    }
}

TEST_CASE("block decomposition of a path") {
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    auto bd = block_decomposition(path);
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(bd.cutpoints == std::vector<int>{1, 2});
    // forest: 3 blocks + 2 cutpoints, 4 incidences
    CHECK(bd.block_forest.n == 5);
    CHECK(bd.block_forest.edge_count() == 4);
}

TEST_CASE("block decomposition of a triangle with a pendant edge") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto bd = block_decomposition(g);
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}});
    CHECK(bd.cutpoints == std::vector<int>{2});
}

TEST_CASE("isolated vertices become singleton blocks") {
    Graph g(4, {{1, 2}});
    auto bd = block_decomposition(g);
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
    CHECK(bd.cutpoints.empty());
}

TEST_CASE("two triangles sharing a vertex") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bd = block_decomposition(g);
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    CHECK(bd.cutpoints == std::vector<int>{2});
}

TEST_CASE("cutpoints match the deletion definition exhaustively") {
    for (Face mask = 0; mask < (Face(1) << 10); ++mask) {
        Graph g(5);
        g.edges = Bits128{mask, 0};
        auto bd = block_decomposition(g);
        std::set<int> cut(bd.cutpoints.begin(), bd.cutpoints.end());
        std::size_t before = connected_components(g).size();
        for (int v = 0; v < 5; ++v) {
            // delete v: count components among the rest
            Graph h(5);
            for (auto [a, b] : g.edge_list())
                if (a != v && b != v) h.add_edge(a, b);
            auto comps = connected_components(h);
            std::size_t after = 0;
            for (const auto& c : comps)
                if (!(c.size() == 1 && c[0] == v)) ++after;
            bool is_cut = after > before;
            REQUIRE(cut.count(v) == std::size_t(is_cut));
        }
    }
}

TEST_CASE("hypergraph basics") {
    CHECK(HyperGraph::universe_size(5, 3) == 10);
    CHECK(HyperGraph::universe_size(6, 2) == 15);
    HyperGraph h(5, 3, {{0, 1, 2}, {2, 3, 4}});
    CHECK(h.edges.count() == 2);
    CHECK(h.edge_list() == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    CHECK_THROWS_AS(HyperGraph(5, 3, {{0, 1}}), invalid_request);

    Graph u = underlying_graph(h);
    CHECK(u.edge_count() == 6); // two triangles sharing vertex 2
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_edge(3, 4));
    CHECK(!u.has_edge(0, 3));
}

TEST_CASE("block closure is extensive, monotone and idempotent") {
    // exhaustive over all 3-uniform hypergraphs on 5 vertices
    std::vector<HyperGraph> all;
    for (Face mask = 0; mask < (Face(1) << 10); ++mask) {
        HyperGraph h(5, 3);
        h.edges = Bits128{mask, 0};
        all.push_back(h);
    }
    std::vector<HyperGraph> closed;
    closed.reserve(all.size());
    for (const auto& h : all) {
        HyperGraph c = block_closure(h);
        CHECK(h.edges.subset_of(c.edges));                     // extensive
        CHECK(block_closure(c).edges == c.edges);              // idempotent
        closed.push_back(c);
    }
    // monotone, spot-checked against sub-hypergraphs obtained by dropping one edge
    for (std::size_t i = 0; i < all.size(); ++i) {
        Face mask = all[i].edges.lo;
        for_each_bit(mask, [&](int b) {
            Face sub = mask & ~(Face(1) << b);
            CHECK(closed[sub].edges.subset_of(closed[i].edges));
        });
    }
}

TEST_CASE("permuting vertices permutes the pair universe consistently") {
    std::vector<int> vperm = {2, 0, 3, 1, 4};
    auto eperm = pair_universe_perm(5, vperm);
    REQUIRE(int(eperm.size()) == 10);
    for (int idx = 0; idx < 10; ++idx) {
        auto [a, b] = pair_unrank(idx);
        int x = std::min(vperm[a], vperm[b]), y = std::max(vperm[a], vperm[b]);
        CHECK(eperm[idx] == pair_rank(x, y));
    }
    auto kperm = kset_universe_perm(5, 3, vperm);
    REQUIRE(int(kperm.size()) == 10);
    for (int idx = 0; idx < 10; ++idx) {
        auto verts = kset_vertices(3, idx);
        std::vector<int> img;
        for (int v : verts) img.push_back(vperm[v]);
        std::sort(img.begin(), img.end());
        CHECK(kperm[idx] == int(subset_rank(img)));
    }
}

TEST_CASE("masked helpers agree with the graph-level routes") {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    auto adj = g.adjacency();
    CHECK(connected_masked(adj, 0b000111u));
    CHECK(!connected_masked(adj, 0b011001u));
    CHECK(connected_masked(adj, 0b011000u));
    for (Face mask = 0; mask < (Face(1) << 10); mask += 7) {
        Graph h(5);
        h.edges = Bits128{mask, 0};
        auto a = h.adjacency();
        for (int i = 1; i <= 4; ++i)
            REQUIRE(is_i_connected_adj(a, 5, i) == is_i_connected(h, i));
    }
}

TEST_CASE("graph json round trip") {
    Graph g(5, {{0, 1}, {2, 4}});
    nlohmann::json j = graph_to_json(g);
    CHECK(j.at("n") == 5);
    CHECK(j.at("edges").size() == 2);
    CHECK(j.at("edges")[0] == nlohmann::json::array({1, 2})); // 1-based
    CHECK(graph_from_json(j) == g);

    HyperGraph h(5, 3, {{0, 1, 4}});
    nlohmann::json hj = hypergraph_to_json(h);
    CHECK(hj.at("k") == 3);
    HyperGraph back = hypergraph_from_json(hj);
    CHECK(back == h);
}
