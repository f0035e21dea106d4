#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "nicx/complexes.hpp"
#include "nicx/errors.hpp"
#include "nicx/graphs.hpp"
#include "nicx/homology.hpp"
#include "nicx/morse.hpp"

using namespace nicx;

namespace {

Graph graph_of(int n, Face f) {
    Graph g(n);
    g.edges = Bits128{f, 0};
    return g;
}

int comp_count(const std::array<std::uint32_t, kMaxVertices>& adj, std::uint32_t mask) {
    int cnt = 0;
    std::uint32_t left = mask;
    while (left) {
        std::uint32_t seen = 1u << std::countr_zero(left);
        for (;;) {
            std::uint32_t grow = seen, scan = seen;
            while (scan) {
                int w = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[std::size_t(w)] & mask;
            }
            if (grow == seen) break;
            seen = grow;
        }
        left &= ~seen;
        ++cnt;
    }
    return cnt;
}

// cutpoints of the graph h on all n vertices, by deletion
std::vector<int> brute_cutpoints(int n, Face h) {
    auto adj = graph_of(n, h).adjacency();
    std::uint32_t full = (1u << n) - 1;
    int base = comp_count(adj, full);
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v)
        if (comp_count(adj, full & ~(1u << v)) > base) cuts.push_back(v);
    return cuts;
}

std::set<Face> face_set(const SimplicialComplex& c) {
    std::set<Face> s;
    for (const auto& [d, lv] : c.levels) s.insert(lv.begin(), lv.end());
    return s;
}

} // namespace

TEST_CASE("digraph of tiny complexes") {
    SimplicialComplex pt = SimplicialComplex::from_faces(1, {1});
    MatchingDigraph g = build_matching_digraph(pt);
    CHECK(g.nodes == std::vector<Face>{0, 1});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(g.node_of(0) == 0);
    CHECK(g.node_of(1) == 1);
    CHECK_THROWS_AS(g.node_of(2), invalid_request);

    SimplicialComplex seg = SimplicialComplex::from_faces(2, {1, 2, 3});
    MatchingDigraph gs = build_matching_digraph(seg);
    CHECK(gs.nodes == std::vector<Face>{0, 1, 2, 3});
    CHECK(gs.edges.size() == 4);

    SimplicialComplex tri = SimplicialComplex::from_faces(3, {1, 2, 4, 3, 5, 6});
    MatchingDigraph gt = build_matching_digraph(tri);
    CHECK(gt.nodes.size() == 7);
    CHECK(gt.edges.size() == 9);
}

TEST_CASE("digraph input validation") {
    SimplicialComplex facets = SimplicialComplex::from_facets(3, {0b011});
    CHECK_THROWS_AS(build_matching_digraph(facets), invalid_request);

    SimplicialComplex broken;
    broken.universe = 2;
    broken.levels[1] = {0b11}; // edge without its vertices
    broken.complete = true;
    CHECK_THROWS_AS(build_matching_digraph(broken), invalid_request);
}

TEST_CASE("matching report flags are independent") {
    SimplicialComplex seg = SimplicialComplex::from_faces(2, {1, 2, 3});

    MatchingReport good = is_acyclic_perfect_matching(seg, {{{0, 1}, {2, 3}}});
    CHECK(good.all());

    // pair order does not matter
    CHECK(is_acyclic_perfect_matching(seg, {{{1, 0}, {2, 3}}}).all());

    MatchingReport partial = is_acyclic_perfect_matching(seg, {{{0, 1}}});
    CHECK(partial.matching);
    CHECK(!partial.perfect);
    CHECK(partial.acyclic);

    MatchingReport overlap = is_acyclic_perfect_matching(seg, {{{0, 1}, {1, 3}}});
    CHECK(!overlap.matching);

    MatchingReport dup = is_acyclic_perfect_matching(seg, {{{0, 1}, {0, 1}}});
    CHECK(!dup.matching);

    SimplicialComplex tri = SimplicialComplex::from_faces(3, {1, 2, 4, 3, 5, 6});
    CHECK_THROWS_AS(is_acyclic_perfect_matching(tri, {{{1, 6}}}), invalid_request);
    CHECK_THROWS_AS(is_acyclic_perfect_matching(tri, {{{8, 9}}}), invalid_request);
}

TEST_CASE("cycle searches agree on the hollow triangle") {
    SimplicialComplex tri = SimplicialComplex::from_faces(3, {1, 2, 4, 3, 5, 6});
    MatchingDigraph g = build_matching_digraph(tri);

    // each vertex matched upward along the triangle: a directed loop
    MorseMatching looped{{{1, 3}, {2, 6}, {4, 5}}};
    CHECK(matching_has_cycle_layered(g, looped));
    CHECK(matching_has_cycle_full(g, looped));

    MorseMatching tame{{{0, 1}, {2, 3}, {4, 5}}};
    CHECK(!matching_has_cycle_layered(g, tame));
    CHECK(!matching_has_cycle_full(g, tame));

    MatchingReport rep = is_acyclic_perfect_matching(tri, looped);
    CHECK(rep.matching);
    CHECK(!rep.perfect); // seven faces, three pairs
    CHECK(!rep.acyclic);
}

TEST_CASE("collapse walks a segment down to nothing") {
    SimplicialComplex seg = SimplicialComplex::from_faces(2, {1, 2, 3});
    CollapseResult res = collapse_by_matching(seg, {{{0, 1}, {2, 3}}});
    REQUIRE(res.ok);
    CHECK(res.reason.empty());
    CHECK(res.trace.size() == 2);
    CHECK(res.trace.back().free_face == 0);
    CHECK(res.final_node == 1);
}

TEST_CASE("collapse failure diagnostics") {
    SimplicialComplex seg = SimplicialComplex::from_faces(2, {1, 2, 3});
    CollapseResult partial = collapse_by_matching(seg, {{{0, 1}}});
    CHECK(!partial.ok);
    CHECK(partial.reason.find("not perfect") != std::string::npos);

    // hollow triangle plus a spare vertex: perfect but cyclic
    SimplicialComplex c = SimplicialComplex::from_faces(4, {1, 2, 4, 8, 3, 5, 6});
    MorseMatching m{{{1, 3}, {2, 6}, {4, 5}, {0, 8}}};
    CHECK(is_acyclic_perfect_matching(c, m).perfect);
    CHECK(!is_acyclic_perfect_matching(c, m).acyclic);
    CollapseResult stuck = collapse_by_matching(c, m);
    CHECK(!stuck.ok);
    CHECK(stuck.reason.find("stuck") != std::string::npos);
}

TEST_CASE("phi values of small graphs") {
    PhiValue lone = phi_map(Graph(4, {{1, 2}}));
    CHECK(lone.neighbors == 0);
    CHECK(lone.blocks == std::vector<std::uint32_t>{0b0110, 0b1000});

    PhiValue path = phi_map(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(path.neighbors == 0b0010);
    CHECK(path.blocks == std::vector<std::uint32_t>{0b1110});

    CHECK_THROWS_AS(phi_map(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})), invalid_request);
    CHECK_THROWS_AS(phi_map(Graph(2, {{0, 1}})), invalid_request);
}

TEST_CASE("phi is monotone along face inclusions") {
    SimplicialComplex delta = not_i_connected_complex(4, 2, 2);
    std::set<PhiValue> values;
    for (Face f : delta.all_faces()) {
        if (f == 0) continue;
        PhiValue vf = phi_map(graph_of(4, f));
        values.insert(vf);
        for_each_bit(f, [&](int b) {
            Face sub = f ^ (Face{1} << b);
            if (sub == 0) return;
            CHECK(phi_leq(phi_map(graph_of(4, sub)), vf));
        });
    }
    // partial-order axioms on the observed values
    for (const PhiValue& a : values) CHECK(phi_leq(a, a));
    for (const PhiValue& a : values)
        for (const PhiValue& b : values) {
            if (phi_leq(a, b) && phi_leq(b, a)) CHECK(a == b);
            for (const PhiValue& c : values)
                if (phi_leq(a, b) && phi_leq(b, c)) CHECK(phi_leq(a, c));
        }
}

TEST_CASE("neighborhood-restricted subcomplexes") {
    SimplicialComplex delta = not_i_connected_complex(4, 2, 2);

    // k = n-1 just forbids the edge {0, n-1}
    std::set<Face> expect3;
    Face bridge = Face{1} << pair_rank(0, 3);
    for (Face f : face_set(delta))
        if (!(f & bridge)) expect3.insert(f);
    CHECK(face_set(build_delta_k(4, 3)) == expect3);

    // k = 2 leaves {0,1} as the only edge at the base vertex
    Face banned = (Face{1} << pair_rank(0, 2)) | (Face{1} << pair_rank(0, 3));
    std::set<Face> expect2;
    for (Face f : face_set(delta))
        if (!(f & banned)) expect2.insert(f);
    CHECK(face_set(build_delta_k(4, 2)) == expect2);

    // nested along k
    std::set<Face> prev;
    for (int k = 2; k <= 4; ++k) {
        std::set<Face> cur = k == 4 ? face_set(not_i_connected_complex(5, 2, 2))
                                    : face_set(build_delta_k(5, k));
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = std::move(cur);
    }

    CHECK_THROWS_AS(build_delta_k(4, 1), invalid_request);
    CHECK_THROWS_AS(build_delta_k(4, 4), invalid_request);
    CHECK_THROWS_AS(build_delta_k(12, 3), invalid_request);
    CHECK_THROWS_AS(build_delta_k1k(4, 2), invalid_request);
    CHECK_THROWS_AS(build_delta_k1k(5, 5), invalid_request);
}

TEST_CASE("adding the bridge edge maps the matching domain onto the slab") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {5, 4}, {6, 4}}) {
        std::set<Face> hi = face_set(build_delta_k(n, k));
        for (Face f : face_set(build_delta_k(n, k - 1))) hi.erase(f);

        Face bit = Face{1} << pair_rank(0, k - 1);
        std::set<Face> image;
        for (Face f : build_delta_k1k(n, k).all_faces()) image.insert(f | bit);
        CHECK(hi == image);
    }
}

TEST_CASE("filtration pieces have no homology") {
    for (int n = 4; n <= 5; ++n) {
        for (int k = 2; k <= n - 1; ++k)
            for (const auto& [d, g] : reduced_homology(build_delta_k(n, k)))
                if (d >= 0) CHECK(g.trivial());
        for (int k = 3; k <= n - 1; ++k)
            for (const auto& [d, g] : reduced_homology(build_delta_k1k(n, k)))
                if (d >= 0) CHECK(g.trivial());
    }
}

TEST_CASE("face classes follow the anchor and separation rules") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {5, 4}, {6, 4}}) {
        Face bit = Face{1} << pair_rank(0, k - 1);
        for (Face g : build_delta_k1k(n, k).all_faces()) {
            ApmClass cls = classify_apm(n, k, g);
            std::uint32_t nbr0 = graph_of(n, g).adjacency()[0];
            if (nbr0 == 0) {
                CHECK(cls == ApmClass::NoAnchor);
                continue;
            }
            CHECK(cls != ApmClass::NoAnchor);
            Face h = g | bit;
            bool connected = comp_count(graph_of(n, h).adjacency(), (1u << n) - 1) == 1;
            bool zero_cut = brute_cutpoints(n, h) == std::vector<int>{0};
            CHECK((cls == ApmClass::Separating) == (connected && zero_cut));
            if (cls == ApmClass::Separating) CHECK(reroute_set(n, k, g).size() >= 2);
        }
    }
}

TEST_CASE("a lone cut vertex on a disconnected graph does not separate") {
    // 0 is the only cut vertex of {01,02,03} on five vertices, but vertex 4
    // is unreachable, so the face stays anchored
    Face g = (Face{1} << pair_rank(0, 1)) | (Face{1} << pair_rank(0, 2));
    Face h = g | (Face{1} << pair_rank(0, 3));
    CHECK(brute_cutpoints(5, h) == std::vector<int>{0});
    CHECK(comp_count(graph_of(5, h).adjacency(), 0b11111) == 2);
    CHECK(classify_apm(5, 4, g) == ApmClass::Anchored);
}

TEST_CASE("reroute set of a concrete separating face") {
    // 0-1-4-2-0 square; adding {0,3} leaves 0 as the unique cut vertex
    Graph g(5, {{0, 1}, {0, 2}, {1, 4}, {2, 4}});
    Face f = g.edges.lo;
    CHECK(classify_apm(5, 4, f) == ApmClass::Separating);
    CHECK(reroute_set(5, 4, f) == std::vector<int>{1, 2});

    // with {3,4} added the bridged graph becomes 2-connected: out of domain
    Graph h(5, {{0, 1}, {0, 2}, {1, 4}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(classify_apm(5, 4, h.edges.lo), invalid_request);
}

TEST_CASE("structured matching collapses its domain") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}, {6, 3}}) {
        SimplicialComplex dom = build_delta_k1k(n, k);
        MorseMatching m = apm_matching(n, k);
        CHECK(is_acyclic_perfect_matching(dom, m).all());
        CollapseResult res = collapse_by_matching(dom, m);
        REQUIRE(res.ok);
        CHECK(2 * res.trace.size() == dom.all_faces().size());
        CHECK(res.trace.back().free_face == 0);
    }
}

TEST_CASE("matched pairs stay in one class and toggle the documented edge") {
    int n = 5, k = 4;
    for (auto [a, b] : apm_matching(n, k).pairs) {
        REQUIRE(popcount(b) == popcount(a) + 1);
        REQUIRE((a & ~b) == 0);
        ApmClass ca = classify_apm(n, k, a);
        CHECK(ca == classify_apm(n, k, b));
        int toggled = std::countr_zero(a ^ b);
        switch (ca) {
            case ApmClass::NoAnchor:
                CHECK(toggled == pair_rank(1, 2));
                break;
            case ApmClass::Anchored: {
                std::uint32_t nbr0 = graph_of(n, a).adjacency()[0];
                CHECK(toggled == pair_rank(std::countr_zero(nbr0), k - 1));
                break;
            }
            case ApmClass::Separating: {
                std::vector<int> s = reroute_set(n, k, a);
                REQUIRE(s.size() >= 2);
                CHECK(s == reroute_set(n, k, b));
                CHECK(toggled == pair_rank(s[0], s[1]));
                break;
            }
        }
    }
}

TEST_CASE("face and matching formatting") {
    CHECK(format_face(0) == "-");
    CHECK(format_face(0b1001) == "0 3");
    MorseMatching m{{{0b1001, 0b1011}}};
    CHECK(format_matching(m) == "0 3 <-> 0 1 3\n");
}
