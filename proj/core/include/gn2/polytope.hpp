#pragma once

// Exact low-dimensional polytope primitives: V-representation hulls with
// complete facet lists, lattice-normalized volumes via placing
// triangulations, and strict-interior feasibility.

#include "gn2/linalg.hpp"
#include "gn2/lp.hpp"
#include "gn2/rational.hpp"

namespace gn2 {

/// An ambient-space inequality normal*x <= offset (equality on the face it
/// supports).
struct Hyperplane {
    QVec normal;
    Rat offset;
};

/// Lattice point e_i + e_j and friends.
using LatticePoint = IVec;

/// Polytope given by an irredundant vertex set, with the affine hull and
/// the complete facet list cached at construction.
struct PolytopeV {
    int ambient = 0;
    int dim = -1;
    std::vector<QVec> vertices;       // irredundant, sorted
    QVec base;                        // a vertex, origin of the affine hull
    QMat affine_basis;                // direction vectors spanning the hull
    std::vector<Hyperplane> aff_eqs;  // normal*x = offset cutting out the hull
    std::vector<Hyperplane> facets;   // valid on P, tight exactly on facets
};

/// Convex hull of a nonempty finite rational point set.
PolytopeV hull(const std::vector<QVec>& points);

/// Lattice-normalized volume with respect to the lattice of the affine
/// hull: a unimodular simplex has volume 1.
Rat normalized_volume(const PolytopeV& p);

/// Same volume computed from any valid inequality description `rows` of
/// conv(vertices) that contains all facet-defining rows. Avoids the hull
/// facet search when a description is already known.
Rat normalized_volume(const std::vector<QVec>& vertices, const std::vector<Hyperplane>& rows);

/// True iff a rational point strictly inside both polytopes exists. Both
/// must be full-dimensional in the same affine hull; otherwise throws
/// DimensionMismatch.
bool interiors_intersect(const PolytopeV& p, const PolytopeV& q);

/// Strict membership of x in the relative interior described by `rows`
/// (all rows strict) plus the equalities `eqs`.
bool strictly_inside(const QVec& x, const std::vector<Hyperplane>& rows,
                     const std::vector<Hyperplane>& eqs);

/// x satisfies normal*x <= offset for every row and every equality.
bool inside(const QVec& x, const std::vector<Hyperplane>& rows,
            const std::vector<Hyperplane>& eqs);

}  // namespace gn2
