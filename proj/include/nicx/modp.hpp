#pragma once
#include <cstdint>

#include "nicx/complexes.hpp"
#include "nicx/snf.hpp"

namespace nicx {

bool is_prime(std::int64_t p);

// Rank over GF(p), computed by its own sparse elimination (shares nothing with
// the integer SNF kernel, so the two can cross-check each other).
long long rank_mod_p(const SparseMatZ& a, std::int64_t p);

// dim over F_p of the d-th reduced homology; needs faces in dims d-1..d+1.
std::int64_t betti_mod_p(const SimplicialComplex& c, int d, std::int64_t p);

} // namespace nicx
