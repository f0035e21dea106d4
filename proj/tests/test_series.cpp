#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "nicx/complexes.hpp"
#include "nicx/errors.hpp"
#include "nicx/posets.hpp"
#include "nicx/series.hpp"
#include "nicx/sigma.hpp"

using namespace nicx;

namespace {

RationalSeries one_plus_x(int n) {
    return RationalSeries::constant(1, n) + RationalSeries::x(n);
}

} // namespace

TEST_CASE("coefficient access and truncation") {
    RationalSeries x = RationalSeries::x(5);
    CHECK(x.coeff(0) == 0);
    CHECK(x.coeff(1) == 1);
    CHECK(x.coeff(5) == 0);
    CHECK_THROWS_AS(x.coeff(6), invalid_request);
    x.set_coeff(3, Rat(7, 2));
    CHECK(x.coeff(3) == Rat(7, 2));
    CHECK_THROWS_AS(x.set_coeff(6, 1), invalid_request);

    RationalSeries t = truncate(x, 2);
    CHECK(t.order == 2);
    CHECK(t.coeff(1) == 1);
    CHECK_THROWS_AS(truncate(t, 3), invalid_request);
}

TEST_CASE("ring operations") {
    int n = 6;
    RationalSeries p = one_plus_x(n), m = RationalSeries::constant(1, n) - RationalSeries::x(n);
    RationalSeries prod = p * m;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(3) == 0);

    CHECK((p - p) == RationalSeries(n));
    CHECK((Rat(3) * RationalSeries::x(n)).coeff(1) == 3);
    CHECK((p / m) * m == p);
    CHECK_THROWS_AS(p / RationalSeries::x(n), invalid_request);
}

TEST_CASE("calculus inverses") {
    RationalSeries f = p_k_series(4, 5);
    CHECK(derivative(integrate(f)) == f);
    CHECK(integrate(RationalSeries::constant(1, 3)) ==
          RationalSeries::x(4));

    RationalSeries g = RationalSeries::x(8);
    g.set_coeff(2, Rat(1, 3));
    CHECK(log_series(exp_series(g)) == g);
    CHECK(exp_series(log_series(one_plus_x(8))) == one_plus_x(8));
    CHECK_THROWS_AS(exp_series(one_plus_x(4)), invalid_request);
    CHECK_THROWS_AS(log_series(RationalSeries::x(4)), invalid_request);
}

TEST_CASE("composition") {
    int n = 7;
    RationalSeries geo = RationalSeries::constant(1, n) /
                         (RationalSeries::constant(1, n) - RationalSeries::x(n));
    RationalSeries doubled = compose(geo, Rat(2) * RationalSeries::x(n));
    Rat pow = 1;
    for (int i = 0; i <= n; ++i) {
        CHECK(doubled.coeff(i) == pow);
        pow *= 2;
    }
    CHECK(compose(geo, RationalSeries::x(n)) == geo);
    CHECK_THROWS_AS(compose(geo, one_plus_x(n)), invalid_request);
}

TEST_CASE("both reversion routes agree") {
    int n = 9;
    // x/(1+x) inverts to x/(1-x)
    RationalSeries f = RationalSeries::x(n) / one_plus_x(n);
    RationalSeries rev = reversion(f);
    for (int i = 1; i <= n; ++i) CHECK(rev.coeff(i) == 1);
    CHECK(rev == reversion_lagrange(f));
    CHECK(compose(f, rev) == RationalSeries::x(n));

    RationalSeries g = RationalSeries::x(n);
    g.set_coeff(2, Rat(1, 2));
    g.set_coeff(3, Rat(1, 6));
    g.set_coeff(4, Rat(1, 77));
    CHECK(reversion(g) == reversion_lagrange(g));

    RationalSeries no_linear(4);
    no_linear.set_coeff(2, 1);
    CHECK_THROWS_AS(reversion(no_linear), invalid_request);
    CHECK_THROWS_AS(reversion(one_plus_x(4)), invalid_request);
    CHECK_THROWS_AS(reversion_lagrange(no_linear), invalid_request);
}

TEST_CASE("truncated exponentials") {
    RationalSeries p1 = p_k_series(1, 4);
    CHECK(p1 == RationalSeries::constant(1, 4));
    RationalSeries p4 = p_k_series(4, 6);
    CHECK(p4.coeff(0) == 1);
    CHECK(p4.coeff(1) == 1);
    CHECK(p4.coeff(2) == Rat(1, 2));
    CHECK(p4.coeff(3) == Rat(1, 6));
    CHECK(p4.coeff(4) == 0);
    CHECK_THROWS_AS(p_k_series(0, 4), invalid_request);
}

TEST_CASE("value extraction scales by factorials") {
    EgfSequence e = egf_values(exp_series(RationalSeries::x(8)));
    for (int n = 0; n <= 8; ++n) CHECK(e.at(n) == 1);
    CHECK_THROWS_AS(e.at(9), invalid_request);
    CHECK_THROWS_AS(e.at(-1), invalid_request);

    RationalSeries half = Rat(1, 2) * RationalSeries::x(3);
    CHECK_THROWS_AS(egf_values(half), check_failure);
}

TEST_CASE("rational rendering") {
    CHECK(rat_string(Rat(3)) == "3");
    CHECK(rat_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_string(Rat(0)) == "0");
}

TEST_CASE("block-count transforms: frozen values") {
    EgfSequence t3 = tau_series(3);
    std::vector<long long> want3 = {1, 0, -1, 3, -6, 0, 90, -630, 2520, 0, -113400, 1247400};
    for (int n = 1; n <= 12; ++n) CHECK(t3.at(n) == want3[std::size_t(n - 1)]);

    EgfSequence t4 = tau_series(4);
    std::vector<long long> want4 = {1, 0,    0,     -1,   4,     -10,
                                    20, -70, 560, -4200, 25200, -138600};
    for (int n = 1; n <= 12; ++n) CHECK(t4.at(n) == want4[std::size_t(n - 1)]);

    CHECK_THROWS_AS(tau_series(1), invalid_request);
    CHECK_THROWS_AS(alpha_series(1), invalid_request);
    CHECK_THROWS_AS(mobius_series(1), invalid_request);
}

TEST_CASE("signed and unsigned factorial closed forms") {
    EgfSequence a2 = alpha_series(2);
    EgfSequence m2 = mobius_series(2);
    CHECK(a2.at(1) == 0);
    CHECK(m2.at(1) == 0);
    for (int n = 2; n <= 12; ++n) {
        BigInt f = factorial_big(n - 2);
        CHECK(a2.at(n) == (n % 2 == 0 ? -f : f));
        CHECK(m2.at(n) == -f);
    }

    EgfSequence a3 = alpha_series(3);
    std::vector<long long> want = {0, 0,  -1,   3,     -9,      30,
                                   -120, 630, -4410, 37800, -362880, 3742200};
    for (int n = 1; n <= 12; ++n) CHECK(a3.at(n) == want[std::size_t(n - 1)]);
}

TEST_CASE("third moebius transform matches the lattice") {
    EgfSequence m3 = mobius_series(3);
    std::vector<long long> want = {-1, 3, -21, 180, -2010, 27090, -430290};
    for (int n = 3; n <= 9; ++n) CHECK(m3.at(n) == want[std::size_t(n - 3)]);
    CHECK(m3.at(10) == 7862400);

    for (int n = 3; n <= 5; ++n)
        CHECK(m3.at(n) == moebius_full(sigma_lattice(n, 3).poset));
}

TEST_CASE("path and cycle generating functions match their complexes") {
    SeriesWithValues free4 = cycles_paths_series();
    std::vector<long long> head_free = {-1, -1, 0, 0, 3, -9, 36, -180};
    for (int n = 0; n <= 7; ++n) CHECK(free4.values.at(n) == head_free[std::size_t(n)]);

    SeriesWithValues no4 = dual_euler_series_nminus3();
    std::vector<long long> head_no4 = {-1, -1, 0, 0, 6, 6, 36, -180};
    for (int n = 0; n <= 7; ++n) CHECK(no4.values.at(n) == head_no4[std::size_t(n)]);

    for (int n = 3; n <= 6; ++n) {
        CHECK(free4.values.at(n) == paths_cycles_complex(n, false).reduced_euler());
        CHECK(no4.values.at(n) == paths_cycles_complex(n, true).reduced_euler());
    }
}

TEST_CASE("exponential formula cross-check") {
    CHECK(exponential_formula_check(tau_series(3), 8));
    CHECK(exponential_formula_check(alpha_series(2), 6));
    CHECK_THROWS_AS(exponential_formula_check(tau_series(3), 0), invalid_request);
    CHECK_THROWS_AS(exponential_formula_check(tau_series(3), 13), invalid_request);
    EgfSequence tiny = egf_values(RationalSeries::x(3));
    CHECK_THROWS_AS(exponential_formula_check(tiny, 5), invalid_request);
}

TEST_CASE("the summary table of generating functions") {
    std::vector<LabeledSeries> t6 = table6_series();
    REQUIRE(t6.size() == 5);
    CHECK(t6[0].name == "F1");
    CHECK(t6[1].name == "F2");
    CHECK(t6[2].name == "G1");
    CHECK(t6[3].name == "G2");
    CHECK(t6[4].name == "G3");
    for (const LabeledSeries& s : t6) CHECK(!s.note.empty());

    EgfSequence f1 = egf_values(t6[0].series);
    EgfSequence f2 = egf_values(t6[1].series);
    for (int n = 1; n <= 8; ++n) {
        BigInt want = factorial_big(n - 1);
        CHECK(f1.at(n) == (n % 2 == 1 ? want : -want));
        if (n >= 2) CHECK(f2.at(n) == factorial_big(n - 2));
    }

    CHECK(t6[2].series.coeff(0) == -1);
    for (int i = 1; i <= kDefaultSeriesOrder; ++i) CHECK(t6[2].series.coeff(i) == 0);
    CHECK(t6[4].series == dual_euler_series_nminus3().series);

    EgfSequence g2 = egf_values(t6[3].series);
    for (int n = 2; n <= 7; ++n)
        CHECK(g2.at(n) == matching_complex(n).reduced_euler());
}
