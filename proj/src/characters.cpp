#include "nicx/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nicx/errors.hpp"

namespace nicx {

std::vector<CycleType> classes_of(int n) {
    if (n < 1) throw invalid_request("classes need n >= 1");
    std::vector<CycleType> out = partitions_of(n);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt z_lambda(const CycleType& t) {
    std::map<int, int> mult;
    for (int part : t) {
        if (part <= 0) throw invalid_request("cycle type parts must be positive");
        ++mult[part];
    }
    BigInt z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial_big(m);
    }
    return z;
}

BigInt class_size(const CycleType& t) {
    int n = 0;
    for (int part : t) n += part;
    return factorial_big(n) / z_lambda(t);
}

CycleType cycle_type_of(const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<char> seen(std::size_t(n), 0);
    CycleType t;
    for (int i = 0; i < n; ++i) {
        if (seen[std::size_t(i)]) continue;
        int len = 0, j = i;
        while (!seen[std::size_t(j)]) {
            seen[std::size_t(j)] = 1;
            j = perm[std::size_t(j)];
            if (j < 0 || j >= n) throw invalid_request("not a permutation");
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::vector<int> representative_of(const CycleType& t) {
    std::vector<int> perm;
    int base = 0;
    for (int len : t) {
        for (int i = 0; i < len; ++i) perm.push_back(base + (i + 1) % len);
        base += len;
    }
    return perm;
}

Face permute_face(const std::vector<int>& perm, Face f) {
    Face out = 0;
    for_each_bit(f, [&](int i) {
        if (i >= int(perm.size())) throw invalid_request("face exceeds permutation domain");
        out |= Face{1} << perm[std::size_t(i)];
    });
    return out;
}

int ClassFunction::index_of(const CycleType& t) const {
    CycleType key(t);
    std::sort(key.rbegin(), key.rend());
    auto it = std::lower_bound(classes.begin(), classes.end(), key);
    if (it == classes.end() || *it != key)
        throw invalid_request("cycle type is not a class of S_n");
    return int(it - classes.begin());
}

const Rat& ClassFunction::at(const CycleType& t) const {
    return values[std::size_t(index_of(t))];
}

ClassFunction lie_character(int n) {
    ClassFunction f;
    f.n = n;
    f.classes = classes_of(n);
    f.values.resize(f.classes.size());
    for (std::size_t i = 0; i < f.classes.size(); ++i) {
        const CycleType& t = f.classes[i];
        int d = t[0];
        if (std::count(t.begin(), t.end(), d) != int(t.size()) || n % d != 0) continue;
        BigInt v = factorial_big(n / d - 1);
        for (int j = 0; j < n / d - 1; ++j) v *= d;
        f.values[i] = Rat(v * mobius_mu(d));
    }
    return f;
}

ClassFunction lie_character_induced(int n) {
    // powers of the n-cycle, grouped by the reduced order of the root they carry
    std::vector<int> cyc = representative_of(CycleType{n});
    std::vector<std::vector<int>> power(static_cast<std::size_t>(n));
    power[0].resize(std::size_t(n));
    for (int i = 0; i < n; ++i) power[0][std::size_t(i)] = i;
    for (int j = 1; j < n; ++j) {
        power[std::size_t(j)].resize(std::size_t(n));
        for (int i = 0; i < n; ++i)
            power[std::size_t(j)][std::size_t(i)] =
                cyc[std::size_t(power[std::size_t(j - 1)][std::size_t(i)])];
    }
    std::map<CycleType, std::vector<int>> hits;
    for (int j = 0; j < n; ++j) hits[cycle_type_of(power[std::size_t(j)])].push_back(j);

    ClassFunction f;
    f.n = n;
    f.classes = classes_of(n);
    f.values.resize(f.classes.size());
    for (std::size_t i = 0; i < f.classes.size(); ++i) {
        auto it = hits.find(f.classes[i]);
        if (it == hits.end()) continue;
        // sum of e^(2 pi i j / n) over the hits, reduced to lowest terms u/q
        std::map<int, std::vector<int>> units;
        for (int j : it->second) {
            int g = std::gcd(j, n);
            units[n / g].push_back(g == 0 ? 0 : j / g);
        }
        long long root_sum = 0;
        for (auto& [q, us] : units) {
            std::sort(us.begin(), us.end());
            std::vector<int> expect;
            for (int u = 0; u < q; ++u)
                if (std::gcd(u, q) == 1 || q == 1) expect.push_back(u);
            if (us != expect)
                throw invariant_violation("cycle powers do not fill the unit group");
            // sum over primitive q-th roots via the full geometric sums:
            // sum_{d|q} mu(d) * (q/d == 1 ? 1 : 0)
            long long s = 0;
            for (int d : divisors_of(q))
                if (q / d == 1) s += mobius_mu(d);
            root_sum += s;
        }
        Rat v = Rat(z_lambda(f.classes[i])) * Rat(root_sum) / Rat(n);
        if (denominator(v) != 1)
            throw invariant_violation("induced value is not an integer");
        f.values[i] = v;
    }
    return f;
}

ClassFunction induce_from_point_stabilizer(const ClassFunction& chi) {
    ClassFunction f;
    f.n = chi.n + 1;
    f.classes = classes_of(f.n);
    f.values.resize(f.classes.size());
    for (std::size_t i = 0; i < f.classes.size(); ++i) {
        const CycleType& t = f.classes[i];
        long long m1 = std::count(t.begin(), t.end(), 1);
        if (m1 == 0) continue;
        CycleType rest(t);
        rest.erase(std::find(rest.rbegin(), rest.rend(), 1).base() - 1);
        f.values[i] = Rat(m1) * (rest.empty() ? Rat(1) : chi.at(rest));
    }
    return f;
}

ClassFunction omega_n2(int n) {
    if (n < 3) throw invalid_request("omega^2 needs n >= 3");
    ClassFunction up = induce_from_point_stabilizer(lie_character(n - 1));
    ClassFunction lie = lie_character(n);
    ClassFunction f = up;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        f.values[i] -= lie.values[i];
        if (denominator(f.values[i]) != 1)
            throw invariant_violation("omega^2 value is not an integer");
    }
    return f;
}

Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n) throw invalid_request("inner product needs matching degree");
    Rat acc;
    for (std::size_t i = 0; i < a.classes.size(); ++i)
        acc += Rat(class_size(a.classes[i])) * a.values[i] * b.values[i];
    return acc / Rat(factorial_big(a.n));
}

BigInt trivial_multiplicity(int n) {
    if (n < 3) throw invalid_request("multiplicity formula needs n >= 3");
    Rat acc;
    for (int d : divisors_of(n)) {
        BigInt v = factorial_big(n / d - 1);
        for (int j = 0; j < n / d - 1; ++j) v *= d;
        acc += Rat(BigInt(mobius_mu(d) * euler_phi(d)) * v);
    }
    Rat w = Rat(factorial_big(n - 2)) - acc / Rat(n);
    if (denominator(w) != 1)
        throw invariant_violation("trivial multiplicity is not an integer");
    return numerator(w);
}

BigInt omega_cn_trivial(int n) {
    if (n < 3) throw invalid_request("restriction oracle needs n >= 3");
    ClassFunction om = omega_n2(n);
    std::vector<int> cyc = representative_of(CycleType{n});
    std::vector<int> cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cur[std::size_t(i)] = i;
    Rat acc;
    for (int j = 0; j < n; ++j) {
        acc += om.at(cycle_type_of(cur));
        for (int i = 0; i < n; ++i) cur[std::size_t(i)] = cyc[std::size_t(cur[std::size_t(i)])];
    }
    acc = acc / Rat(n);
    if (denominator(acc) != 1)
        throw invariant_violation("averaged multiplicity is not an integer");
    return numerator(acc);
}

long long fixed_point_moebius_trace(const std::vector<int>& g,
                                    const SimplicialComplex& c) {
    if (int(g.size()) != c.universe)
        throw invalid_request("permutation does not match the universe");
    {
        std::vector<char> seen(g.size(), 0);
        for (int v : g) {
            if (v < 0 || v >= int(g.size()) || seen[std::size_t(v)])
                throw invalid_request("not a permutation");
            seen[std::size_t(v)] = 1;
        }
    }
    if (!c.complete)
        throw invalid_request("trace needs a fully enumerated complex");
    std::vector<Face> fixed{0};
    for (Face f : c.all_faces()) {
        if (f == 0) continue;
        Face h = permute_face(g, f);
        if (!c.is_face(h))
            throw invalid_request("permutation does not stabilize the complex");
        if (h == f) fixed.push_back(f);
    }
    std::sort(fixed.begin(), fixed.end(), [](Face a, Face b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    std::vector<long long> mu(fixed.size());
    long long total = 0;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        long long s = (i == 0) ? 1 : 0;
        for (std::size_t j = 0; j < i; ++j)
            if ((fixed[j] & ~fixed[i]) == 0) s -= mu[j];
        mu[i] = s;
        total += s;
    }
    return total;
}

} // namespace nicx
