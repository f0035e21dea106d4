#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "nicx/graphs.hpp"
#include "nicx/posets.hpp"

namespace nicx {

// Lattice of graphs on [n] whose blocks are all cliques of size >= k (isolated
// vertices allowed), ordered by edge inclusion.
struct SigmaLattice {
    int n = 0;
    int k = 0;
    std::vector<Face> graphs; // ascending edge masks; front = empty, back = K_n
    FinitePoset poset;        // ids aligned with `graphs`
    int index_of(Face g) const;
};

SigmaLattice sigma_lattice(int n, int k);
bool is_sigma_element(int n, int k, Face g);
Face sigma_join(int n, int k, Face a, Face b);
Face sigma_meet(int n, int k, Face a, Face b);

// How a cover y was reached from x:
//   CliqueAcross: add a k-clique across k distinct components
//   BlockMerge:   merge two blocks sharing a cutpoint into one clique
//   StarJoin:     attach a vertex to a whole block of another component (k > 2)
enum class CoverType { CliqueAcross = 1, BlockMerge = 2, StarJoin = 3 };

std::map<std::pair<int, int>, CoverType> classify_covers(const SigmaLattice& s);

struct ChainReport {
    bool rank_checked = false; // closed-form rank exists (k = 2 or 3)
    bool graded = false;
    std::set<int> chain_lengths; // lengths of maximal bottom-to-top chains
};

ChainReport rank_and_chain_spectrum(const SigmaLattice& s);
int sigma_rank(int n, int k, Face g); // k = 2 or 3 only

// connected components as sorted vertex masks (isolated vertices included)
std::vector<std::uint32_t> component_partition(int n, Face g);

} // namespace nicx
