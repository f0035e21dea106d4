#pragma once

#include <vector>

#include "nicx/combinat.hpp"
#include "nicx/complexes.hpp"

namespace nicx {

// conjugacy class of S_n as a weakly decreasing partition of n
using CycleType = std::vector<int>;

std::vector<CycleType> classes_of(int n); // sorted ascending, identity first
BigInt z_lambda(const CycleType& t);      // centralizer order
BigInt class_size(const CycleType& t);
CycleType cycle_type_of(const std::vector<int>& perm);
std::vector<int> representative_of(const CycleType& t); // consecutive cycles
Face permute_face(const std::vector<int>& perm, Face f);

struct ClassFunction {
    int n = 0;
    std::vector<CycleType> classes; // classes_of(n)
    std::vector<Rat> values;
    int index_of(const CycleType& t) const;
    const Rat& at(const CycleType& t) const;
};

ClassFunction lie_character(int n);         // closed form, supported on d^(n/d)
ClassFunction lie_character_induced(int n); // generic induction from the n-cycle
ClassFunction induce_from_point_stabilizer(const ClassFunction& chi);
ClassFunction omega_n2(int n); // lie_{n-1} induced up, minus lie_n
Rat inner_product(const ClassFunction& a, const ClassFunction& b);
BigInt trivial_multiplicity(int n);
BigInt omega_cn_trivial(int n); // same multiplicity by averaging over the n-cycle

// sum of mu(empty, f) over the faces fixed by a universe permutation
long long fixed_point_moebius_trace(const std::vector<int>& g,
                                    const SimplicialComplex& c);

} // namespace nicx
