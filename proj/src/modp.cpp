#include "nicx/modp.hpp"

#include <queue>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nicx/errors.hpp"
#include "nicx/homology.hpp"

namespace nicx {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    for (b %= p; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

// Minimum-degree Gaussian elimination: repeatedly pivot in the sparsest
// column, preferring the sparsest row within it.
struct FieldElim {
    std::int64_t p;
    int m, n;
    std::vector<std::unordered_map<int, std::int64_t>> rows;
    std::vector<std::unordered_set<int>> cols;
    using Item = std::tuple<std::size_t, int>; // (col fill, col)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    long long rank = 0;

    FieldElim(const SparseMatZ& a, std::int64_t p_) : p(p_), m(a.rows), n(a.cols) {
        rows.resize(std::size_t(m));
        cols.resize(std::size_t(n));
        for (int c = 0; c < n; ++c) {
            for (auto [r, v] : a.col[std::size_t(c)]) {
                std::int64_t w = ((v % p) + p) % p;
                if (w == 0) continue;
                rows[std::size_t(r)][c] = w;
                cols[std::size_t(c)].insert(r);
            }
            if (!cols[std::size_t(c)].empty())
                heap.emplace(cols[std::size_t(c)].size(), c);
        }
    }

    void run() {
        while (!heap.empty()) {
            auto [sz, c] = heap.top();
            heap.pop();
            auto& colset = cols[std::size_t(c)];
            if (colset.empty()) continue;
            if (colset.size() != sz) { // stale entry; re-rank
                heap.emplace(colset.size(), c);
                continue;
            }
            int pr = -1;
            std::size_t best = 0;
            for (int r : colset)
                if (pr < 0 || rows[std::size_t(r)].size() < best ||
                    (rows[std::size_t(r)].size() == best && r < pr)) {
                    pr = r;
                    best = rows[std::size_t(r)].size();
                }
            eliminate(pr, c);
            ++rank;
        }
    }

    void eliminate(int pr, int pc) {
        auto& prow = rows[std::size_t(pr)];
        std::int64_t inv = pow_mod(prow[pc], p - 2, p);
        std::vector<int> victims(cols[std::size_t(pc)].begin(), cols[std::size_t(pc)].end());
        for (int r : victims) {
            if (r == pr) continue;
            auto& row = rows[std::size_t(r)];
            std::int64_t factor = row[pc] * inv % p;
            for (const auto& [c, v] : prow) {
                auto it = row.find(c);
                std::int64_t delta = factor * v % p;
                if (it == row.end()) {
                    row[c] = p - delta; // delta != 0: p prime, both factors nonzero
                    cols[std::size_t(c)].insert(r);
                    heap.emplace(cols[std::size_t(c)].size(), c);
                } else {
                    it->second = (it->second - delta % p + p) % p;
                    if (it->second == 0) {
                        row.erase(it);
                        cols[std::size_t(c)].erase(r);
                    }
                }
            }
        }
        for (const auto& [c, v] : prow) cols[std::size_t(c)].erase(pr);
        prow.clear();
    }
};

} // namespace

long long rank_mod_p(const SparseMatZ& a, std::int64_t p) {
    if (!is_prime(p)) throw invalid_request("rank_mod_p: modulus must be prime");
    FieldElim e(a, p);
    e.run();
    return e.rank;
}

std::int64_t betti_mod_p(const SimplicialComplex& c, int d, std::int64_t p) {
    if (!is_prime(p)) throw invalid_request("betti_mod_p: modulus must be prime");
    if (d < 0) throw invalid_request("betti_mod_p: dimension must be >= 0");
    SparseMatZ low = boundary_matrix(c, d);
    SparseMatZ high = boundary_matrix(c, d + 1);
    return std::int64_t(low.cols) - rank_mod_p(low, p) - rank_mod_p(high, p);
}

} // namespace nicx
