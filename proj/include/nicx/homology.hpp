#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nicx/combinat.hpp"
#include "nicx/complexes.hpp"
#include "nicx/snf.hpp"

namespace nicx {

struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<BigInt> torsion; // elementary divisors > 1, each dividing the next

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// dimension -> reduced group; the -1 slot is kept (Z only for the complex {∅})
using ReducedHomology = std::map<int, HomologyGroup>;

// Boundary ∂_d of the augmented chain complex: columns are the d-faces,
// rows the (d-1)-faces, both sorted ascending; ∂_0 maps every vertex to the
// empty face with coefficient +1.  A dimension that is not stored is an
// error unless the complex is completely enumerated (then it is empty).
SparseMatZ boundary_matrix(const SimplicialComplex& c, int d);

// All reduced homology groups, or only the dims listed (empty = all).
// Each requested d needs the faces of dims d-1, d, d+1.
ReducedHomology reduced_homology(const SimplicialComplex& c,
                                 const std::vector<int>& dims = {});

// Single dimension; a window(d) complex is sufficient input.
HomologyGroup homology_window(const SimplicialComplex& c, int d);

// "0", "Z", "Z^6", "Z_3", "Z^42 + Z_3^8"
std::string group_to_string(const HomologyGroup& g);

} // namespace nicx
