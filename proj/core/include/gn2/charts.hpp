#pragma once

// Exact model of the closure of the main-stratum parameter space inside
// (CP^1)^N over Q: the cubic relations, point sampling from Plucker
// matrices, the chart-transition automorphisms, Jacobian smoothness ranks,
// and the boundary extension/collapse classification.

#include "gn2/matroid.hpp"
#include "gn2/projpair.hpp"
#include "gn2/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace gn2 {

using Chart = IndexPair;  // standard chart M_kl, Plucker minor P^kl != 0

/// Point record of the parameter variety in a chart: one ProjPair per
/// unordered index pair of the chart complement. In the default chart
/// (1,2) the pairs are (c_ij : c'_ij), 3 <= i < j <= n, and the cubic
/// relations c'_ij c_ik c'_jk = c_ij c'_ik c_jk hold for all triples.
struct ChartPoint {
    int n = 0;
    Chart chart{1, 2};
    std::map<IndexPair, ProjPair> coords;

    const ProjPair& at(int p, int q) const;

    /// Raw components of the pair for any p != q under the swap convention
    /// c_qp = c'_pq: first = c_pq, second = c'_pq.
    std::pair<Rat, Rat> extended(int p, int q) const;

    /// Indices of the chart complement, sorted.
    std::vector<int> complement() const;

    /// Exact check of every cubic relation on the complement triples.
    bool satisfies_relations() const;

    /// Every coordinate off {(0:1), (1:0), (1:1)}: the main stratum.
    bool in_main_stratum() const;

    friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
        return a.n == b.n && a.chart == b.chart && a.coords == b.coords;
    }
    friend bool operator!=(const ChartPoint& a, const ChartPoint& b) { return !(a == b); }

    std::string str() const;
};

struct TransitionSingular : Error {
    IndexPair pair;
    explicit TransitionSingular(IndexPair p)
        : Error("transition evaluates to (0,0) at output pair (" + std::to_string(p.first) +
                "," + std::to_string(p.second) + ")"),
          pair(p) {}
};

struct LiftUndefined : Error {
    IndexPair pair;  // the G_pq / G'_pq locus witnesses
    explicit LiftUndefined(IndexPair p)
        : Error("lift undefined at pair (" + std::to_string(p.first) + "," +
                std::to_string(p.second) + ")"),
          pair(p) {}
};

struct NotBoundary : Error {
    NotBoundary() : Error("point lies in the main stratum, not on the boundary") {}
};

/// A 2 x n rational matrix with a chart whose minor is nonzero.
struct PluckerMatrix {
    int n = 0;
    QMat rows;  // 2 x n
    Chart chart{1, 2};

    Rat minor(int i, int j) const;  // P^ij, 1-based columns
    bool all_minors_nonzero() const;
};

/// Seeded random matrix with integer entries in [-9, 9] and every minor
/// nonzero (rejection sampled).
PluckerMatrix random_main_stratum(int n, Rng& rng);

/// Chart record of the matrix point: (d_pq : d'_pq) = (P^lp P^kq : P^lq P^kp)
/// in chart (k, l). Throws TransitionSingular if a pair is indeterminate.
ChartPoint plucker_to_params(const PluckerMatrix& m, Chart chart);

/// Full chart-(1,2) record from the n-3 base pairs (c_34, ..., c_3n):
/// (c_ij : c'_ij) = (c'_3i c_3j : c_3i c'_3j). Throws LiftUndefined exactly
/// on the loci where both base pairs are (1:0) or both are (0:1).
ChartPoint lift(int n, const std::vector<ProjPair>& base);

/// Chart-transition automorphism f_{12,target} evaluated at a main-stratum
/// point, via the bihomogeneous transition polynomials. Output pairs are
/// indexed by the target chart complement. Throws TransitionSingular when a
/// coordinate evaluates to (0,0) (boundary input; use classify_extension).
ChartPoint transition(Chart target, const ChartPoint& p);

/// The transition map as a value: source is always the chart (1,2).
struct TransitionMap {
    Chart target{1, 2};
    ChartPoint apply(const ChartPoint& p) const { return transition(target, p); }
};

/// A single output coordinate of f_{12,target} evaluated through one named
/// polynomial representative (0 = primary, 1 = alternate), or nullopt when
/// that representative vanishes identically at p. The representatives agree
/// modulo the relations ideal wherever both are nonzero.
std::optional<ProjPair> transition_representative(Chart target, const ChartPoint& p,
                                                  IndexPair out, int which);

/// Composition law: f_{kl,pq} = f_{12,pq} o f^{-1}_{12,kl}. Checked
/// operationally: a realizing matrix reproduces p in chart (1,2), and the
/// formula transitions to both charts match the direct per-chart matrix
/// recomputation exactly.
bool compose_check(Chart kl, Chart pq, const ChartPoint& p);

/// Rank of the Jacobian of the cubic relations in the affine chart adapted
/// to p (each pair dehomogenized at its nonzero canonical component).
int jacobian_rank_at(const ChartPoint& p);

struct ExtensionDefined {
    ChartPoint value;
};
struct ExtensionCollapses {
    ChartPoint value;
    std::vector<int> locus;  // {j, l, p}: source pairs (j,l), (j,p) equal (1:0)
    std::string description;
};
struct ExtensionUndefined {
    std::vector<int> locus;  // {j, l, p}: the (1:1)-triple obstruction
    std::string description;
};
using ExtensionVerdict = std::variant<ExtensionDefined, ExtensionCollapses, ExtensionUndefined>;

/// Boundary behavior of f_{12,1j} at p (p in chart (1,2), on the boundary;
/// throws NotBoundary otherwise). Every output coordinate is evaluated with
/// all available polynomial representatives; a coordinate with no nonzero
/// representative is the non-extendable case.
ExtensionVerdict classify_extension(int j, const ChartPoint& p);

/// Deterministic battery of boundary points (relations verified exactly):
/// per-coordinate degenerations to {0, 1, inf}, equal-pair diagonals,
/// forced-(1:1) triple patterns, and the collapse loci.
std::vector<ChartPoint> boundary_samples(int n, std::uint64_t seed, std::size_t count);

/// Realizes a main-stratum chart-(1,2) point as a matrix with columns
/// (1,0), (0,1), (1,1), (c'_34, c_34)-style normalization.
PluckerMatrix realize_matrix(const ChartPoint& p);

}  // namespace gn2
