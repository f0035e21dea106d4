#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "nicx/combinat.hpp"

namespace nicx {

// Column-major sparse integer matrix; per column a row-sorted list of
// (row, value) with value != 0.
struct SparseMatZ {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> col;

    std::int64_t nnz() const {
        std::int64_t s = 0;
        for (const auto& c : col) s += std::int64_t(c.size());
        return s;
    }
};

struct SNFResult {
    // positive elementary divisors, d_1 | d_2 | ... | d_r
    std::vector<BigInt> diag;
    bool has_witnesses = false;
    std::vector<std::vector<BigInt>> U, V; // U*A*V = diag (when requested)

    long long rank() const { return (long long)diag.size(); }
    std::vector<BigInt> nontrivial() const {
        std::vector<BigInt> t;
        for (const auto& d : diag)
            if (d > 1) t.push_back(d);
        return t;
    }
};

// Dense kernel.  Pivot rule: smallest nonzero absolute value, ties broken by
// lowest row then lowest column.  Arbitrary-precision throughout.
SNFResult smith_normal_form(std::vector<std::vector<BigInt>> a, bool witnesses = false);

// Sparse path: exhaust +-1 pivots in Markowitz-cost order (deterministic
// (cost, row, col) selection), then hand the residual to the dense kernel.
// Machine-width arithmetic with checked overflow; restarts with
// arbitrary-precision values if a coefficient ever overflows.
SNFResult sparse_snf(const SparseMatZ& a);

} // namespace nicx
