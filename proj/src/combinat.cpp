#include "nicx/combinat.hpp"

#include <array>
#include <limits>

#include "nicx/errors.hpp"

namespace nicx {

namespace {
constexpr int kPascalMax = 130;
// Pascal table with saturation; sentinel marks entries past uint64 range.
struct PascalTable {
    std::array<std::array<std::uint64_t, kPascalMax + 1>, kPascalMax + 1> c{};
    PascalTable() {
        constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
        for (int n = 0; n <= kPascalMax; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                std::uint64_t a = c[n - 1][k - 1];
                std::uint64_t b = k <= n - 1 ? c[n - 1][k] : 0;
                c[n][k] = (a == inf || b == inf || a > inf - b) ? inf : a + b;
            }
            for (int k = n + 1; k <= kPascalMax; ++k) c[n][k] = 0;
        }
    }
};
const PascalTable& pascal() {
    static const PascalTable t;
    return t;
}
} // namespace

std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    if (n > kPascalMax) throw invalid_request("binom: n too large, use binomial_big");
    std::uint64_t v = pascal().c[n][k];
    if (v == std::numeric_limits<std::uint64_t>::max())
        throw invalid_request("binom: value exceeds 64 bits, use binomial_big");
    return v;
}

BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt factorial_big(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::pair<int, int> pair_unrank(int idx) {
    int b = 1;
    while ((b + 1) * b / 2 <= idx) ++b;
    return {idx - b * (b - 1) / 2, b};
}

std::uint64_t subset_rank(const std::vector<int>& verts) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) r += binom(verts[i], int(i) + 1);
    return r;
}

std::vector<int> subset_unrank(std::uint64_t idx, int k) {
    std::vector<int> out(k);
    for (int i = k; i >= 1; --i) {
        int v = i - 1;
        while (binom(v + 1, i) <= idx) ++v;
        out[i - 1] = v;
        idx -= binom(v, i);
    }
    return out;
}

void for_each_k_subset(int m, int k, const std::function<void(Face)>& fn) {
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(0);
        return;
    }
    Face v = (k == 64) ? ~Face{0} : ((Face{1} << k) - 1);
    Face last = v << (m - k);
    while (true) {
        fn(v);
        if (v == last) break;
        v = next_same_popcount(v);
    }
}

int mobius_mu(int n) {
    if (n <= 0) throw invalid_request("mobius_mu: n must be positive");
    int res = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            res = -res;
        }
    }
    if (n > 1) res = -res;
    return res;
}

int euler_phi(int n) {
    int res = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            res -= res / p;
        }
    }
    if (n > 1) res -= res / n;
    return res;
}

std::vector<int> divisors_of(int n) {
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

void for_each_set_partition(int n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    // restricted growth strings
    std::vector<int> rgs(n, 0), maxv(n, 0);
    std::vector<std::uint32_t> blocks;
    auto emit = [&]() {
        int nb = 0;
        for (int i = 0; i < n; ++i) nb = std::max(nb, rgs[i] + 1);
        blocks.assign(nb, 0);
        for (int i = 0; i < n; ++i) blocks[rgs[i]] |= (1u << i);
        fn(blocks);
    };
    if (n == 0) {
        blocks.clear();
        fn(blocks);
        return;
    }
    while (true) {
        emit();
        int i = n - 1;
        while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
        if (i == 0) break;
        rgs[i] += 1;
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
}

} // namespace nicx
