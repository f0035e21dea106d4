#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "nicx/complexes.hpp"
#include "nicx/errors.hpp"

using namespace nicx;

namespace {
// full level-by-level enumeration of a membership-testable complex
SimplicialComplex expand(const SimplicialComplex& c) {
    SimplicialComplex out;
    out.universe = c.universe;
    out.levels = enumerate_closed(c.universe, [&](Face f) { return c.is_face(f); });
    out.complete = true;
    return out;
}
} // namespace

TEST_CASE("from_faces closes nothing but sorts and dedups") {
    SimplicialComplex c = SimplicialComplex::from_faces(3, {0b011, 0b001, 0b010, 0b011});
    CHECK(c.complete);
    CHECK(c.universe == 3);
    CHECK(c.levels.at(0) == std::vector<Face>{0b001, 0b010});
    CHECK(c.levels.at(1) == std::vector<Face>{0b011});
    CHECK(c.dim() == 1);
    CHECK(c.stored_face_count() == 3);
}

TEST_CASE("from_facets keeps only the maximal faces") {
    // 0b0011 is swallowed by 0b0111
    SimplicialComplex c = SimplicialComplex::from_facets(4, {0b0111, 0b1100, 0b0011});
    CHECK(!c.complete);
    CHECK(c.has_facets);
    CHECK(c.facets == std::vector<Face>{0b0111, 0b1100});
    CHECK(c.is_face(0));
    CHECK(c.is_face(0b0101));
    CHECK(!c.is_face(0b1001));

    SimplicialComplex e = expand(c);
    CHECK(e.levels.at(0) == std::vector<Face>{1, 2, 4, 8});
    CHECK(e.levels.at(1) == std::vector<Face>{0b0011, 0b0101, 0b0110, 0b1100});
    CHECK(e.levels.at(2) == std::vector<Face>{0b0111});
    auto fs = e.compute_facets();
    std::sort(fs.begin(), fs.end());
    CHECK(fs == std::vector<Face>{0b0111, 0b1100});
}

TEST_CASE("the empty complex has dimension -1") {
    SimplicialComplex c = SimplicialComplex::from_faces(0, {});
    CHECK(c.dim() == -1);
    CHECK(c.is_face(0));
    CHECK(c.f_vector().counts == std::vector<std::int64_t>{1});
    CHECK(c.reduced_euler() == -1);
    CHECK(c.all_faces() == std::vector<Face>{0});
}

TEST_CASE("f-vector and euler characteristic of the triangle boundary") {
    SimplicialComplex c = expand(SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110}));
    auto f = c.f_vector();
    CHECK(f.counts == std::vector<std::int64_t>{1, 3, 3});
    CHECK(f.max_dim() == 1);
    CHECK(c.reduced_euler() == -1 + 3 - 3);
    CHECK(f.reduced_euler() == c.reduced_euler());
}

TEST_CASE("window keeps three consecutive levels") {
    SimplicialComplex c = expand(SimplicialComplex::from_facets(4, {0b1111}));
    SimplicialComplex w = c.window(1);
    CHECK(!w.complete);
    CHECK(w.level_stored(0));
    CHECK(w.level_stored(1));
    CHECK(w.level_stored(2));
    CHECK(!w.level_stored(3));
    CHECK(w.level(1).size() == 6);
    CHECK_THROWS_AS(w.level(3), invalid_request);
    CHECK_THROWS_AS(w.f_vector(), invalid_request);
    CHECK_THROWS_AS(c.window(-1), invalid_request);
}

TEST_CASE("all_faces is ordered by dimension then mask") {
    SimplicialComplex c = expand(SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110}));
    auto faces = c.all_faces();
    REQUIRE(faces.size() == 7);
    CHECK(faces[0] == 0);
    for (std::size_t i = 1; i < faces.size(); ++i) {
        int da = popcount(faces[i - 1]), db = popcount(faces[i]);
        CHECK((da < db || (da == db && faces[i - 1] < faces[i])));
    }
}

TEST_CASE("enumerate_closed matches brute force on a parity predicate") {
    // downward closed: masks avoiding point 4 entirely, plus everything of
    // size <= 2
    auto pred = [](Face f) { return (f & 0b10000) == 0 || popcount(f) <= 2; };
    auto levels = enumerate_closed(5, pred);
    std::set<Face> got;
    for (const auto& [d, faces] : levels)
        for (Face f : faces) got.insert(f);
    std::set<Face> want;
    for (Face f = 1; f < 32; ++f) {
        // keep only genuinely downward-closed members: all subsets satisfy pred
        bool ok = true;
        for (Face s = f; s; s = (s - 1) & f)
            if (!pred(s)) ok = false;
        if (ok) want.insert(f);
    }
    CHECK(got == want);
}

TEST_CASE("enumeration is deterministic across job counts") {
    auto pred = not_i_connected_predicate(5, 2, 2);
    auto a = enumerate_closed(10, pred, -1, 0, 1);
    auto b = enumerate_closed(10, pred, -1, 0, 4);
    CHECK(a == b);
}

TEST_CASE("the face guard aborts oversized enumerations") {
    auto all = [](Face) { return true; };
    CHECK_THROWS_AS(enumerate_closed(20, all, -1, 1000), infeasible);
    CHECK_NOTHROW(enumerate_closed(10, all, -1, 2000));
}

TEST_CASE("not-2-connected graphs on 3 vertices form the triangle boundary") {
    SimplicialComplex c = not_i_connected_complex(3, 2, 2);
    auto f = c.f_vector();
    CHECK(f.counts == std::vector<std::int64_t>{1, 3, 3});
    CHECK(!c.is_face(0b111)); // the triangle itself is 2-connected
}

TEST_CASE("predicate and complex membership agree") {
    auto pred = not_i_connected_predicate(5, 2, 3);
    SimplicialComplex c = not_i_connected_complex(5, 2, 3);
    for (Face f = 0; f < (Face(1) << 10); ++f)
        REQUIRE(pred(f) == c.is_face(f));
}

TEST_CASE("not-1-connected complexes are the disconnected graphs") {
    SimplicialComplex c = not_i_connected_complex(4, 2, 1);
    CHECK(c.is_face(0));
    // a spanning tree is connected, so not a face
    Face tree = 0;
    tree |= Face(1) << 0; // {0,1}
    tree |= Face(1) << 2; // {1,2}
    tree |= Face(1) << 5; // {2,3}
    CHECK(!c.is_face(tree));
}

TEST_CASE("parameter validation on the complex builders") {
    CHECK_THROWS_AS(not_i_connected_complex(1, 2, 1), invalid_request);
    CHECK_THROWS_AS(not_i_connected_complex(17, 2, 2), invalid_request);
    CHECK_THROWS_AS(not_i_connected_complex(5, 6, 2), invalid_request);
    CHECK_THROWS_AS(not_i_connected_complex(5, 1, 2), invalid_request);
    CHECK_THROWS_AS(not_i_connected_complex(5, 2, 0), invalid_request);
    CHECK_THROWS_AS(not_i_connected_complex(5, 2, 5), invalid_request);
    CHECK_THROWS_AS(matching_complex(0), invalid_request);
    CHECK_THROWS_AS(matching_complex(13), infeasible); // C(13,2) = 78 > 64
    CHECK_THROWS_AS(chessboard_complex(0, 3), invalid_request);
    CHECK_THROWS_AS(chessboard_complex(8, 9), infeasible);
    CHECK_THROWS_AS(not_i_connected_complex(12, 3, 2), infeasible); // C(12,3) > 64
}

TEST_CASE("maximal separable facets count and match the enumerated facets") {
    for (int n = 3; n <= 5; ++n)
        for (int i = 2; i < n; ++i) {
            auto facets = maximal_separable_facets(n, i);
            CHECK(facets.size() ==
                  binom(n, i - 1) * ((std::uint64_t(1) << (n - i)) - 1));
            SimplicialComplex c = not_i_connected_complex(n, 2, i);
            auto computed = c.compute_facets();
            std::sort(facets.begin(), facets.end());
            std::sort(computed.begin(), computed.end());
            CHECK(facets == computed);
        }
}

TEST_CASE("matching complex on 4 vertices is three disjoint segments") {
    SimplicialComplex c = matching_complex(4);
    auto f = c.f_vector();
    CHECK(f.counts == std::vector<std::int64_t>{1, 6, 3});
    // facets: the three perfect matchings, pairwise disjoint as vertex sets
    auto facets = c.compute_facets();
    REQUIRE(facets.size() == 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) CHECK((facets[a] & facets[b]) == 0);
}

TEST_CASE("matching complex face counts follow the involution formula") {
    // #(m-edge matchings on n vertices) = n! / (m! 2^m (n-2m)!)
    for (int n = 5; n <= 8; ++n) {
        SimplicialComplex c = matching_complex(n);
        auto f = c.f_vector();
        for (int m = 1; m <= n / 2; ++m) {
            BigInt want = factorial_big(n) /
                          (factorial_big(m) * (BigInt(1) << m) * factorial_big(n - 2 * m));
            CHECK(BigInt(f.counts[std::size_t(m)]) == want);
        }
    }
}

TEST_CASE("small chessboard complexes") {
    // 1 x 1: a single point
    SimplicialComplex c11 = chessboard_complex(1, 1);
    CHECK(c11.f_vector().counts == std::vector<std::int64_t>{1, 1});
    // 2 x 3: the hexagon
    SimplicialComplex c23 = chessboard_complex(2, 3);
    auto f = c23.f_vector();
    CHECK(f.counts == std::vector<std::int64_t>{1, 6, 6});
    auto facets = c23.compute_facets();
    CHECK(facets.size() == 6);
    // rook placements: f_j = C(m,j+1) C(n,j+1) (j+1)!
    SimplicialComplex c34 = chessboard_complex(3, 4);
    auto f34 = c34.f_vector();
    for (int j = 0; j <= f34.max_dim(); ++j) {
        BigInt want = binomial_big(3, j + 1) * binomial_big(4, j + 1) * factorial_big(j + 1);
        CHECK(BigInt(f34.counts[std::size_t(j) + 1]) == want);
    }
}

TEST_CASE("path-or-cycle complexes bound the vertex degrees") {
    SimplicialComplex c = paths_cycles_complex(5, false);
    for (const auto& [d, faces] : c.levels)
        for (Face f : faces) {
            Graph g(5);
            g.edges = Bits128{f, 0};
            for (auto m : g.adjacency()) CHECK(popcount(Face(m)) <= 2);
        }
    // forbidding 4-cycles removes exactly the C(5,4)*3 squares on 5 vertices
    SimplicialComplex nc = paths_cycles_complex(5, true);
    CHECK(c.stored_face_count() - nc.stored_face_count() == 5 * 3);
}

TEST_CASE("degree-two no-square complexes are duals of high connectivity") {
    for (int n = 4; n <= 6; ++n) {
        SimplicialComplex delta = not_i_connected_complex(n, 2, n - 3);
        SimplicialComplex dual = alexander_dual(delta);
        SimplicialComplex direct = paths_cycles_complex(n, true);
        CHECK(dual.levels == direct.levels);
    }
}

TEST_CASE("alexander duality is an involution") {
    SimplicialComplex c = matching_complex(4);
    SimplicialComplex d = alexander_dual(alexander_dual(c));
    CHECK(d.levels == c.levels);
    // dual of {∅} is the boundary of the simplex
    SimplicialComplex point = SimplicialComplex::from_faces(4, {});
    SimplicialComplex bd = alexander_dual(point);
    auto f = bd.f_vector();
    CHECK(f.counts == std::vector<std::int64_t>{1, 4, 6, 4});
}

TEST_CASE("facet file round trip") {
    SimplicialComplex c = matching_complex(5);
    std::ostringstream os;
    write_facet_file(os, c);
    std::istringstream is(os.str());
    SimplicialComplex back = read_facet_file(is);
    CHECK(back.universe == c.universe);
    CHECK(back.has_facets);
    auto a = c.compute_facets();
    auto b = back.facets;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    std::istringstream bad("garbage");
    CHECK_THROWS_AS(read_facet_file(bad), invalid_request);
}

TEST_CASE("dimension-bounded enumeration stops early") {
    SimplicialComplex full = not_i_connected_complex(5, 2, 2);
    SimplicialComplex cut = not_i_connected_complex(5, 2, 2, 3);
    CHECK(!cut.complete);
    for (int d = 0; d <= 3; ++d) CHECK(cut.level(d) == full.level(d));
    CHECK(!cut.level_stored(4));
}
