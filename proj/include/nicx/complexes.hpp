#pragma once
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "nicx/bits.hpp"
#include "nicx/graphs.hpp"

namespace nicx {

// f_{-1}, f_0, ..., f_maxdim; counts[j] is the number of (j-1)-dimensional
// faces, so counts[0] (the empty face) is always 1.
struct FVector {
    std::vector<std::int64_t> counts;

    int max_dim() const { return int(counts.size()) - 2; }
    std::int64_t reduced_euler() const;
};

// Downward-closed face family over an abstract vertex universe 0..universe-1
// (for the graph complexes, universe index = colex pair/k-set rank).  The
// empty face is always a member and is not stored.  Faces of dimension d are
// masks with d+1 bits, kept sorted ascending (= colex order on subsets).
//
// Representations:
//   - complete: `levels` holds every nonempty face;
//   - windowed: `levels` holds only some dimensions (complete == false);
//   - facet list: `facets` nonempty, levels possibly absent.
struct SimplicialComplex {
    int universe = 0;
    std::map<int, std::vector<Face>> levels;
    bool complete = false;
    std::vector<Face> facets;
    bool has_facets = false;

    static SimplicialComplex from_faces(int universe, std::vector<Face> faces);
    static SimplicialComplex from_facets(int universe, std::vector<Face> facets);

    bool level_stored(int d) const { return d == -1 || levels.count(d) > 0; }
    const std::vector<Face>& level(int d) const; // throws when not stored
    std::int64_t stored_face_count() const;      // nonempty faces in `levels`
    int dim() const;
    bool is_face(Face f) const;

    FVector f_vector() const;            // complete enumeration required
    std::int64_t reduced_euler() const;
    std::vector<Face> compute_facets() const;
    // all stored faces including the empty one, ordered by (dim, mask)
    std::vector<Face> all_faces() const;
    // restrict to dimensions d-1..d+1 (for single-dimension homology)
    SimplicialComplex window(int d) const;
};

// Level-by-level enumeration of {f : pred(f)} for a downward-closed pred with
// pred(0) == true.  Faces of dimension d+1 are generated by extending each
// dim-d face above its highest vertex, so each face appears exactly once.
// max_dim < 0 means unbounded; face_guard > 0 aborts (infeasible) when the
// total nonempty face count would exceed it.
std::map<int, std::vector<Face>> enumerate_closed(int universe,
                                                  const std::function<bool(Face)>& pred,
                                                  int max_dim = -1,
                                                  std::uint64_t face_guard = 0,
                                                  int jobs = 1);

// Faces: k-graphs on [n] whose underlying graph is not i-connected.
SimplicialComplex not_i_connected_complex(int n, int k, int i, int dim_bound = -1,
                                          std::uint64_t face_guard = 0, int jobs = 1);
// Membership predicate of the same complex (for spot tests and duals).
std::function<bool(Face)> not_i_connected_predicate(int n, int k, int i);

// The maximal not-i-connected graphs: pick an (i-1)-set A and an unordered
// partition of the rest into nonempty B, C; the facet is K_n minus all B-C
// edges.  C(n,i-1) * (2^(n-i) - 1) facets.
std::vector<Face> maximal_separable_facets(int n, int i);

SimplicialComplex matching_complex(int n, std::uint64_t face_guard = 0);
// Universe index of cell (row r, column c) in the m x n board is c*m + r.
SimplicialComplex chessboard_complex(int m, int n, std::uint64_t face_guard = 0);

// Graphs all of whose components are paths or cycles; with forbid_c4, cycle
// components of length 4 are excluded.
SimplicialComplex paths_cycles_complex(int n, bool forbid_c4, std::uint64_t face_guard = 0);

// {B : complement of B is not a face}; input needs a membership test
// (complete enumeration or facet list) and must not have the full universe
// as a face.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

// Facet file: "universe m" on line 1, then one facet per line as ascending
// 0-based universe indices (an empty line denotes the empty facet).
void write_facet_file(std::ostream& os, const SimplicialComplex& c);
SimplicialComplex read_facet_file(std::istream& is);

} // namespace nicx
