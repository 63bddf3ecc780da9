#pragma once

// The chamber decomposition of the hypersimplex induced by the admissible
// polytopes, and the disjoint-union theorem check.

#include "gn2/cortege.hpp"
#include "gn2/matroid.hpp"

#include <set>

namespace gn2 {

/// Points e_i + e_j, i < j, as rational vectors.
std::vector<QVec> hypersimplex_vertices(int n);

/// The distinct interior cutting hyperplanes x(S) = 1 of the arrangement,
/// one canonical representative per complementary pair {S, S^c}.
std::vector<Hyperplane> arrangement_hyperplanes(int n);

/// Deterministic generic rational points strictly inside the hypersimplex
/// and off every hyperplane x(S) = 1: witnesses never sit on any facet
/// plane of any admissible polytope.
std::vector<QVec> sample_generic_points(int n, std::uint64_t seed, std::size_t count);

struct Chamber {
    std::set<int> omega;  // census indices of polytopes strictly containing it
    QVec witness;
    int dim = 0;
};

/// Census indices of all full-dimensional admissible polytopes whose strict
/// facet system x satisfies. Throws OutOfHypersimplex if x is not in the
/// hypersimplex.
std::set<int> omega_of(const QVec& x, const std::vector<PolytopeGeom>& geoms);

/// All full-dimensional cells of the facet-hyperplane arrangement restricted
/// to the hypersimplex, with one exact interior witness each.
std::vector<Chamber> enumerate_chambers(int n, const std::vector<PolytopeGeom>& geoms);

/// True iff every decomposition has exactly one member whose interior
/// contains the chamber witness.
bool check_union_chamber(const Chamber& c, const std::vector<Cortege>& decompositions,
                         const DecompositionContext& ctx);

}  // namespace gn2
