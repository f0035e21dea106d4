#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nicx/complexes.hpp"

namespace nicx {

// Finite poset with element ids 0..n-1.  Ids are always topologically
// consistent: x < y in the order implies id(x) < id(y).  The full relation is
// kept as flat bitset rows (`up[x]` = everything above x, `down[y]` =
// everything below y), covers as the transitive reduction.
struct FinitePoset {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> up;
    std::vector<std::uint64_t> down;
    std::vector<std::vector<int>> covers_up;
    std::vector<std::string> labels; // may be empty
    int bottom = -1;                 // unique minimum, -1 if none
    int top = -1;                    // unique maximum, -1 if none

    bool leq(int x, int y) const {
        return (up[std::size_t(x) * words + (std::size_t(y) >> 6)] >> (y & 63)) & 1;
    }
    std::size_t size() const { return std::size_t(n); }
    std::vector<std::pair<int, int>> cover_pairs() const;
    std::string label(int x) const;
};

// Build from the full relation encoded as bitset rows (row x = everything
// above x, including x itself).  Verifies reflexivity and id-topology, then
// derives covers, bottom and top.
FinitePoset poset_from_up_bits(int n, std::vector<std::uint64_t> up,
                               std::vector<std::string> labels = {});

template <class F>
FinitePoset poset_from_leq(int n, F&& leq, std::vector<std::string> labels = {}) {
    int words = (n + 63) / 64;
    std::vector<std::uint64_t> up(std::size_t(n) * words);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x == y || leq(x, y))
                up[std::size_t(x) * words + (std::size_t(y) >> 6)] |=
                    std::uint64_t{1} << (y & 63);
    return poset_from_up_bits(n, std::move(up), std::move(labels));
}

// Build from an explicit cover list; every edge must go from a lower to a
// higher id.  Redundant (non-cover) edges are dropped after closure.
FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                              std::vector<std::string> labels = {});

long long moebius(const FinitePoset& p, int x, int y);
// mu(bottom, top); needs both marked
long long moebius_full(const FinitePoset& p);

// complex of chains; universe = element ids
SimplicialComplex order_complex(const FinitePoset& p, std::uint64_t face_guard = 1u << 24);

// all faces ordered by inclusion, plus an artificial maximum
FinitePoset face_lattice(const SimplicialComplex& c);

FinitePoset partition_lattice(int n);
FinitePoset k_equal_lattice(int n, int k); // blocks of size 1 or >= k
FinitePoset boolean_lattice(int n);

FinitePoset interval(const FinitePoset& p, int x, int y);
FinitePoset proper_part(const FinitePoset& p); // drop marked bottom and top
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

nlohmann::json poset_to_json(const FinitePoset& p);

// shared label helpers (1-based vertices)
std::string partition_label(int n, const std::vector<std::uint32_t>& blocks);

} // namespace nicx
