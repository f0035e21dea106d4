#pragma once

#include <string>
#include <vector>

#include "nicx/combinat.hpp"

namespace nicx {

inline constexpr int kDefaultSeriesOrder = 12;

// Truncated power series with exact rational coefficients c[0..order].
struct RationalSeries {
    int order = 0;
    std::vector<Rat> c;

    RationalSeries() : c(1) {}
    explicit RationalSeries(int n) : order(n), c(std::size_t(n) + 1) {}

    static RationalSeries constant(const Rat& v, int n);
    static RationalSeries x(int n);

    Rat coeff(int i) const;
    void set_coeff(int i, const Rat& v);
};

RationalSeries truncate(const RationalSeries& a, int n);
RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a);
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const Rat& s, const RationalSeries& a);
RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
RationalSeries derivative(const RationalSeries& a);
RationalSeries integrate(const RationalSeries& a); // zero constant term
RationalSeries exp_series(const RationalSeries& a); // needs a(0) = 0
RationalSeries log_series(const RationalSeries& a); // needs a(0) = 1
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);
RationalSeries reversion(const RationalSeries& f);          // coefficient solve
RationalSeries reversion_lagrange(const RationalSeries& f); // independent route

bool operator==(const RationalSeries& a, const RationalSeries& b);
std::string rat_string(const Rat& v);

// truncated exponential 1 + x + ... + x^{k-1}/(k-1)!
RationalSeries p_k_series(int k, int n);

// values[n] = n! * [x^n]; conversion asserts integrality
struct EgfSequence {
    int order = 0;
    std::vector<BigInt> values;
    BigInt at(int n) const;
};

EgfSequence egf_values(const RationalSeries& s);

EgfSequence tau_series(int k, int n = kDefaultSeriesOrder);
EgfSequence mobius_series(int k, int n = kDefaultSeriesOrder);
EgfSequence alpha_series(int k, int n = kDefaultSeriesOrder);

struct SeriesWithValues {
    RationalSeries series;
    EgfSequence values;
};

// Euler characteristics of the degree-<=2 graph complexes: components are
// paths and cycles, optionally with 4-cycles excluded.
SeriesWithValues dual_euler_series_nminus3(int n = kDefaultSeriesOrder);
SeriesWithValues cycles_paths_series(int n = kDefaultSeriesOrder);

// set-partition sum oracle for b = exp-transform of a; a(0) treated as 0
bool exponential_formula_check(const EgfSequence& a, int n);

struct LabeledSeries {
    std::string name;
    RationalSeries series;
    std::string note;
};

std::vector<LabeledSeries> table6_series(int n = kDefaultSeriesOrder);

} // namespace nicx
