#include "nicx/series.hpp"

#include <algorithm>

#include "nicx/errors.hpp"

namespace nicx {

RationalSeries RationalSeries::constant(const Rat& v, int n) {
    RationalSeries s(n);
    s.c[0] = v;
    return s;
}

RationalSeries RationalSeries::x(int n) {
    RationalSeries s(n);
    if (n >= 1) s.c[1] = 1;
    return s;
}

Rat RationalSeries::coeff(int i) const {
    if (i < 0 || i > order)
        throw invalid_request("coefficient beyond truncation order");
    return c[std::size_t(i)];
}

void RationalSeries::set_coeff(int i, const Rat& v) {
    if (i < 0 || i > order)
        throw invalid_request("coefficient beyond truncation order");
    c[std::size_t(i)] = v;
}

RationalSeries truncate(const RationalSeries& a, int n) {
    if (n > a.order)
        throw invalid_request("cannot extend a series beyond its order");
    RationalSeries r(n);
    for (int i = 0; i <= n; ++i) r.c[std::size_t(i)] = a.c[std::size_t(i)];
    return r;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        r.c[std::size_t(i)] = a.c[std::size_t(i)] + b.c[std::size_t(i)];
    return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        r.c[std::size_t(i)] = a.c[std::size_t(i)] - b.c[std::size_t(i)];
    return r;
}

RationalSeries operator-(const RationalSeries& a) {
    RationalSeries r(a.order);
    for (int i = 0; i <= r.order; ++i) r.c[std::size_t(i)] = -a.c[std::size_t(i)];
    return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; j <= i; ++j)
            r.c[std::size_t(i)] += a.c[std::size_t(j)] * b.c[std::size_t(i - j)];
    return r;
}

RationalSeries operator*(const Rat& s, const RationalSeries& a) {
    RationalSeries r(a.order);
    for (int i = 0; i <= r.order; ++i) r.c[std::size_t(i)] = s * a.c[std::size_t(i)];
    return r;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    if (b.c[0] == 0) throw invalid_request("division by a series with zero constant term");
    RationalSeries r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        Rat acc = a.c[std::size_t(i)];
        for (int j = 0; j < i; ++j) acc -= r.c[std::size_t(j)] * b.c[std::size_t(i - j)];
        r.c[std::size_t(i)] = acc / b.c[0];
    }
    return r;
}

RationalSeries derivative(const RationalSeries& a) {
    RationalSeries r(std::max(a.order - 1, 0));
    for (int i = 1; i <= a.order; ++i) r.c[std::size_t(i - 1)] = Rat(i) * a.c[std::size_t(i)];
    return r;
}

RationalSeries integrate(const RationalSeries& a) {
    RationalSeries r(a.order + 1);
    for (int i = 0; i <= a.order; ++i)
        r.c[std::size_t(i + 1)] = a.c[std::size_t(i)] / Rat(i + 1);
    return r;
}

RationalSeries exp_series(const RationalSeries& a) {
    if (a.c[0] != 0) throw invalid_request("exp needs zero constant term");
    RationalSeries r(a.order);
    r.c[0] = 1;
    for (int n = 1; n <= a.order; ++n) {
        Rat acc;
        for (int j = 1; j <= n; ++j)
            acc += Rat(j) * a.c[std::size_t(j)] * r.c[std::size_t(n - j)];
        r.c[std::size_t(n)] = acc / Rat(n);
    }
    return r;
}

RationalSeries log_series(const RationalSeries& a) {
    if (a.c[0] != 1) throw invalid_request("log needs constant term 1");
    RationalSeries r(a.order);
    for (int n = 1; n <= a.order; ++n) {
        Rat acc = a.c[std::size_t(n)];
        for (int j = 1; j < n; ++j)
            acc -= Rat(j) * r.c[std::size_t(j)] * a.c[std::size_t(n - j)] / Rat(n);
        r.c[std::size_t(n)] = acc;
    }
    return r;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
    if (g.c[0] != 0) throw invalid_request("compose needs inner constant term 0");
    int n = std::min(f.order, g.order);
    RationalSeries r = RationalSeries::constant(f.c[std::size_t(f.order)], n);
    for (int i = f.order - 1; i >= 0; --i) {
        r = r * truncate(g, n);
        r.c[0] += f.c[std::size_t(i)];
    }
    return r;
}

RationalSeries reversion(const RationalSeries& f) {
    if (f.c[0] != 0) throw invalid_request("reversion needs zero constant term");
    if (f.order < 1 || f.c[1] == 0)
        throw invalid_request("reversion needs an invertible linear coefficient");
    RationalSeries g(f.order);
    g.c[1] = Rat(1) / f.c[1];
    for (int n = 2; n <= f.order; ++n) {
        RationalSeries h = compose(truncate(f, n), truncate(g, n));
        g.c[std::size_t(n)] = -h.c[std::size_t(n)] / f.c[1];
    }
    return g;
}

RationalSeries reversion_lagrange(const RationalSeries& f) {
    if (f.c[0] != 0) throw invalid_request("reversion needs zero constant term");
    if (f.order < 1 || f.c[1] == 0)
        throw invalid_request("reversion needs an invertible linear coefficient");
    // u = f/x, then [x^n] g = (1/n) [x^{n-1}] u^{-n}
    RationalSeries u(f.order);
    for (int i = 1; i <= f.order; ++i) u.c[std::size_t(i - 1)] = f.c[std::size_t(i)];
    RationalSeries inv = RationalSeries::constant(1, f.order) / u;
    RationalSeries g(f.order);
    RationalSeries p = RationalSeries::constant(1, f.order);
    for (int n = 1; n <= f.order; ++n) {
        p = p * inv;
        g.c[std::size_t(n)] = p.c[std::size_t(n - 1)] / Rat(n);
    }
    return g;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    if (a.order != b.order) return false;
    return a.c == b.c;
}

std::string rat_string(const Rat& v) {
    BigInt num = numerator(v), den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

RationalSeries p_k_series(int k, int n) {
    if (k < 1) throw invalid_request("p_k needs k >= 1");
    RationalSeries s(n);
    for (int j = 0; j < k && j <= n; ++j) s.c[std::size_t(j)] = Rat(1) / Rat(factorial_big(j));
    return s;
}

BigInt EgfSequence::at(int n) const {
    if (n < 0 || n > order) throw invalid_request("index beyond sequence order");
    return values[std::size_t(n)];
}

EgfSequence egf_values(const RationalSeries& s) {
    EgfSequence e;
    e.order = s.order;
    e.values.resize(std::size_t(s.order) + 1);
    for (int n = 0; n <= s.order; ++n) {
        Rat v = s.c[std::size_t(n)] * Rat(factorial_big(n));
        if (denominator(v) != 1)
            throw check_failure("coefficient " + std::to_string(n) +
                                " is not an integer: " + rat_string(v));
        e.values[std::size_t(n)] = numerator(v);
    }
    return e;
}

EgfSequence tau_series(int k, int n) {
    if (k < 2) throw invalid_request("tau needs k >= 2");
    return egf_values(log_series(p_k_series(k, n)));
}

EgfSequence alpha_series(int k, int n) {
    if (k < 2) throw invalid_request("alpha needs k >= 2");
    RationalSeries ratio = p_k_series(k - 1, n) / p_k_series(k, n);
    return egf_values(truncate(integrate(log_series(ratio)), n));
}

EgfSequence mobius_series(int k, int n) {
    if (k < 2) throw invalid_request("mobius needs k >= 2");
    RationalSeries ratio = p_k_series(k - 1, n) / p_k_series(k, n);
    RationalSeries inner = RationalSeries::x(n) * ratio;
    RationalSeries deriv = compose(log_series(ratio), reversion(inner));
    return egf_values(truncate(integrate(deriv), n));
}

namespace {

// -exp(x/(2(1+x)) + extra) / sqrt(1+x), all under one exp
SeriesWithValues degree_two_egf(int n, const RationalSeries& extra) {
    RationalSeries one_plus_x = RationalSeries::constant(1, n) + RationalSeries::x(n);
    RationalSeries expo =
        RationalSeries::x(n) / (Rat(2) * one_plus_x) + extra -
        Rat(1, 2) * log_series(one_plus_x);
    SeriesWithValues out;
    out.series = -exp_series(expo);
    out.values = egf_values(out.series);
    return out;
}

RationalSeries parity_poly(int n, bool with_quartic) {
    RationalSeries p = RationalSeries::x(n);
    if (n >= 2) p.c[2] = Rat(-1, 4);
    if (with_quartic && n >= 4) p.c[4] = Rat(-1, 8);
    return p;
}

} // namespace

SeriesWithValues dual_euler_series_nminus3(int n) {
    if (n < 1) throw invalid_request("order must be at least 1");
    return degree_two_egf(n, parity_poly(n, true));
}

SeriesWithValues cycles_paths_series(int n) {
    if (n < 1) throw invalid_request("order must be at least 1");
    return degree_two_egf(n, parity_poly(n, false));
}

bool exponential_formula_check(const EgfSequence& a, int n) {
    if (n < 1 || n > 12) throw invalid_request("check supported for 1 <= n <= 12");
    if (a.order < n) throw invalid_request("sequence shorter than requested order");
    RationalSeries s(n);
    for (int j = 1; j <= n; ++j) s.c[std::size_t(j)] = Rat(a.at(j)) / Rat(factorial_big(j));
    RationalSeries b = exp_series(s);
    for (int m = 1; m <= n; ++m) {
        BigInt brute = 0;
        for_each_set_partition(m, [&](const std::vector<std::uint32_t>& blocks) {
            BigInt prod = 1;
            for (std::uint32_t blk : blocks) prod *= a.at(std::popcount(blk));
            brute += prod;
        });
        if (Rat(brute) != b.c[std::size_t(m)] * Rat(factorial_big(m))) return false;
    }
    return true;
}

std::vector<LabeledSeries> table6_series(int n) {
    std::vector<LabeledSeries> out;
    RationalSeries one = RationalSeries::constant(1, n);
    RationalSeries x = RationalSeries::x(n);
    RationalSeries log1mx = log_series(one - x);

    out.push_back({"F1", log_series(one + x),
                   "n!*[x^n] = (-1)^(n-1)(n-1)! = chi~ of the disconnected-graphs complex"});
    out.push_back({"F2", (one - x) * log1mx + one + x,
                   "n!*[x^n] = +(n-2)!; the complex's chi~ is -(n-2)! (mobius k=2): "
                   "the two differ by sign"});
    out.push_back({"G1", RationalSeries::constant(-1, n),
                   "per-n value: the dual of the not-(n-1)-connected complex is {[]}, "
                   "chi~ = -1 for every n (not an EGF)"});
    out.push_back({"G2", -exp_series(x - Rat(1, 2) * (x * x)),
                   "n!*[x^n] = chi~ of the matching complex M_n"});
    out.push_back({"G3", dual_euler_series_nminus3(n).series,
                   "n!*[x^n] = chi~ of the dual of the not-(n-3)-connected complex"});
    return out;
}

} // namespace nicx
