#include "nicx/snf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "nicx/errors.hpp"

namespace nicx {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct DenseSNF {
    std::vector<std::vector<BigInt>>& a;
    int m, n;
    bool wit;
    std::vector<std::vector<BigInt>> U, V;

    DenseSNF(std::vector<std::vector<BigInt>>& a_, bool w)
        : a(a_), m(int(a_.size())), n(m ? int(a_[0].size()) : 0), wit(w) {
        for (const auto& row : a)
            if (int(row.size()) != n) throw invalid_request("snf: ragged matrix");
        if (wit) {
            U.assign(std::size_t(m), std::vector<BigInt>(std::size_t(m), 0));
            V.assign(std::size_t(n), std::vector<BigInt>(std::size_t(n), 0));
            for (int i = 0; i < m; ++i) U[i][i] = 1;
            for (int j = 0; j < n; ++j) V[j][j] = 1;
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (wit) std::swap(U[i], U[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        if (wit)
            for (int r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
    }
    // row i -= q * row t
    void row_sub(int i, int t, const BigInt& q) {
        for (int j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
        if (wit)
            for (int j = 0; j < m; ++j) U[i][j] -= q * U[t][j];
    }
    // col j -= q * col t
    void col_sub(int j, int t, const BigInt& q) {
        for (int i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
        if (wit)
            for (int i = 0; i < n; ++i) V[i][j] -= q * V[i][t];
    }
    void row_add(int i, int src) {
        for (int j = 0; j < n; ++j) a[i][j] += a[src][j];
        if (wit)
            for (int j = 0; j < m; ++j) U[i][j] += U[src][j];
    }
    void negate_row(int i) {
        for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
        if (wit)
            for (int j = 0; j < m; ++j) U[i][j] = -U[i][j];
    }

    SNFResult run() {
        SNFResult res;
        int t = 0;
        while (t < m && t < n) {
        restart:
            int bi = -1, bj = -1;
            BigInt bv;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (a[i][j] != 0) {
                        BigInt av = abs_big(a[i][j]);
                        if (bi < 0 || av < bv) {
                            bv = av;
                            bi = i;
                            bj = j;
                        }
                    }
            if (bi < 0) break; // submatrix is zero
            swap_rows(t, bi);
            swap_cols(t, bj);
            const BigInt p = a[t][t];
            for (int i = t + 1; i < m; ++i)
                if (a[i][t] != 0) {
                    BigInt q = a[i][t] / p;
                    if (q != 0) row_sub(i, t, q);
                    if (a[i][t] != 0) goto restart; // remainder smaller than |p|
                }
            for (int j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    BigInt q = a[t][j] / p;
                    if (q != 0) col_sub(j, t, q);
                    if (a[t][j] != 0) goto restart;
                }
            for (int i = t + 1; i < m; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % p != 0) {
                        row_add(t, i); // drag a non-multiple into row t
                        goto restart;
                    }
            if (a[t][t] < 0) negate_row(t);
            ++t;
        }
        for (int i = 0; i < t; ++i) res.diag.push_back(a[i][i]);
        if (wit) {
            res.has_witnesses = true;
            res.U = std::move(U);
            res.V = std::move(V);
        }
        return res;
    }
};

// ---- sparse phase --------------------------------------------------------

struct Overflow {};

// int64 with trapping arithmetic; any overflow aborts the machine-width run
struct I64 {
    std::int64_t v = 0;
    I64() = default;
    I64(std::int64_t x) : v(x) {}
    friend I64 operator+(I64 a, I64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return I64(r);
    }
    friend I64 operator*(I64 a, I64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return I64(r);
    }
    I64 operator-() const {
        if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
        return I64(-v);
    }
    bool operator==(const I64& o) const { return v == o.v; }
    BigInt big() const { return BigInt(v); }
};

BigInt to_big(const I64& x) { return x.big(); }
BigInt to_big(const BigInt& x) { return x; }

template <class T>
struct SparseElim {
    int m, n;
    std::vector<std::unordered_map<int, T>> rows; // row -> col -> value
    std::vector<std::unordered_set<int>> cols;    // col -> rows with entries
    std::vector<char> ralive, calive;
    // (markowitz cost, row, col), smallest first
    using Item = std::tuple<std::int64_t, int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    long long units = 0;

    explicit SparseElim(const SparseMatZ& a) : m(a.rows), n(a.cols) {
        rows.resize(std::size_t(m));
        cols.resize(std::size_t(n));
        ralive.assign(std::size_t(m), 1);
        calive.assign(std::size_t(n), 1);
        for (int c = 0; c < n; ++c)
            for (auto [r, v] : a.col[std::size_t(c)]) {
                if (v == 0) continue;
                rows[std::size_t(r)][c] = T(v);
                cols[std::size_t(c)].insert(r);
            }
        for (int r = 0; r < m; ++r)
            for (const auto& [c, v] : rows[std::size_t(r)])
                if (unit(v)) heap.emplace(cost(r, c), r, c);
    }

    static bool unit(const T& v) { return v == T(1) || v == T(-1); }
    std::int64_t cost(int r, int c) const {
        return std::int64_t(rows[std::size_t(r)].size() - 1) *
               std::int64_t(cols[std::size_t(c)].size() - 1);
    }

    void pivot(int r, int c) {
        const T p = rows[std::size_t(r)][c];
        std::vector<int> affected(cols[std::size_t(c)].begin(), cols[std::size_t(c)].end());
        std::sort(affected.begin(), affected.end());
        for (int r2 : affected) {
            if (r2 == r) continue;
            T mult = (p == T(1)) ? -rows[std::size_t(r2)][c] : rows[std::size_t(r2)][c];
            for (const auto& [c2, v2] : rows[std::size_t(r)]) {
                auto& row2 = rows[std::size_t(r2)];
                auto it = row2.find(c2);
                if (it == row2.end()) {
                    T nv = mult * v2;
                    row2.emplace(c2, nv);
                    cols[std::size_t(c2)].insert(r2);
                    if (unit(nv)) heap.emplace(cost(r2, c2), r2, c2);
                } else {
                    it->second = it->second + mult * v2;
                    if (it->second == T(0)) {
                        row2.erase(it);
                        cols[std::size_t(c2)].erase(r2);
                    } else if (unit(it->second)) {
                        heap.emplace(cost(r2, c2), r2, c2);
                    }
                }
            }
        }
        for (const auto& [c2, v2] : rows[std::size_t(r)]) cols[std::size_t(c2)].erase(r);
        rows[std::size_t(r)].clear();
        ralive[std::size_t(r)] = 0;
        calive[std::size_t(c)] = 0;
        ++units;
    }

    void eliminate() {
        while (!heap.empty()) {
            auto [cst, r, c] = heap.top();
            heap.pop();
            if (!ralive[std::size_t(r)] || !calive[std::size_t(c)]) continue;
            auto it = rows[std::size_t(r)].find(c);
            if (it == rows[std::size_t(r)].end() || !unit(it->second)) continue;
            std::int64_t now = cost(r, c);
            if (now > cst) {
                heap.emplace(now, r, c);
                continue;
            }
            pivot(r, c);
        }
    }

    SNFResult finish() {
        std::vector<int> live_r, live_c;
        for (int r = 0; r < m; ++r)
            if (ralive[std::size_t(r)] && !rows[std::size_t(r)].empty()) live_r.push_back(r);
        for (int c = 0; c < n; ++c)
            if (calive[std::size_t(c)] && !cols[std::size_t(c)].empty()) live_c.push_back(c);
        std::unordered_map<int, int> cidx;
        for (std::size_t j = 0; j < live_c.size(); ++j) cidx[live_c[j]] = int(j);
        std::vector<std::vector<BigInt>> dense(live_r.size(),
                                               std::vector<BigInt>(live_c.size(), 0));
        for (std::size_t i = 0; i < live_r.size(); ++i)
            for (const auto& [c, v] : rows[std::size_t(live_r[i])])
                dense[i][std::size_t(cidx[c])] = to_big(v);
        SNFResult tail = DenseSNF(dense, false).run();
        SNFResult res;
        res.diag.assign(std::size_t(units), BigInt(1));
        for (auto& d : tail.diag) res.diag.push_back(std::move(d));
        return res;
    }
};

template <class T>
SNFResult run_sparse(const SparseMatZ& a) {
    SparseElim<T> e(a);
    e.eliminate();
    return e.finish();
}

} // namespace

SNFResult smith_normal_form(std::vector<std::vector<BigInt>> a, bool witnesses) {
    return DenseSNF(a, witnesses).run();
}

SNFResult sparse_snf(const SparseMatZ& a) {
    try {
        return run_sparse<I64>(a);
    } catch (const Overflow&) {
        return run_sparse<BigInt>(a);
    }
}

} // namespace nicx
