#pragma once

// Admissible sets, their rank-2 matroid presentation (loops + parallel
// classes), admissible polytopes P_sigma, and the parameter-space
// descriptor of each stratum.

#include "gn2/polytope.hpp"
#include "gn2/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>

namespace gn2 {

using IndexPair = std::pair<int, int>;  // always i < j, 1-based

inline IndexPair make_pair_sorted(int i, int j) {
    return i < j ? IndexPair{i, j} : IndexPair{j, i};
}

/// Loops plus a partition of the non-loop indices into parallel classes.
/// Canonical form: classes internally sorted and ordered by minimum
/// element; at least two classes.
struct Rank2Matroid {
    int n = 0;
    std::vector<int> loops;
    std::vector<std::vector<int>> classes;

    void canonicalize();
    int k() const { return static_cast<int>(classes.size()); }
    bool full_dimensional() const { return loops.empty() && k() >= 3; }
    std::string name() const;

    friend bool operator==(const Rank2Matroid& a, const Rank2Matroid& b) {
        return a.n == b.n && a.loops == b.loops && a.classes == b.classes;
    }
    /// Enumeration order: (loops, sorted class-size multiset, classes).
    friend bool operator<(const Rank2Matroid& a, const Rank2Matroid& b);
};

struct AdmissibleSet {
    int n = 0;
    std::set<IndexPair> pairs;
};

/// F_sigma shape: a point for k <= 3, else M0k of dimension k-3 (for k = 4
/// this is CP^1 minus three points).
struct ParamDescriptor {
    int k = 0;
    enum Kind { Point, M0k } kind = Point;
    int dim = 0;

    friend bool operator==(const ParamDescriptor& a, const ParamDescriptor& b) {
        return a.k == b.k && a.kind == b.kind && a.dim == b.dim;
    }
};

/// Cross-class pair set: exactly the nonzero Plucker pattern of the stratum.
AdmissibleSet sigma_of(const Rank2Matroid& m);

/// The unique matroid presenting sigma, or nullopt when the stratum is
/// empty (sigma is not admissible).
std::optional<Rank2Matroid> recognize(const AdmissibleSet& sigma);

/// Vertices e_i + e_j over sigma_of(m), as rational points.
std::vector<QVec> matroid_vertices(const Rank2Matroid& m);

/// P_sigma with full hull data (irredundant vertices, facets).
PolytopeV polytope_of(const Rank2Matroid& m);

/// Valid inequality description of P_sigma from the matroid rank function:
/// x_i >= 0 and x(class) <= 1, plus the equalities sum x = 2 and x_l = 0
/// for loops. Contains every facet; may contain redundant rows.
void matroid_rows(const Rank2Matroid& m, std::vector<Hyperplane>& rows,
                  std::vector<Hyperplane>& eqs);

ParamDescriptor param_space(const Rank2Matroid& m);

/// All matroids on n in deterministic canonical order. With full_dim_only,
/// the loop-free ones with k >= 3 classes (set partitions into >= 3 blocks).
std::vector<Rank2Matroid> enumerate_admissible(int n, bool full_dim_only);

/// Cached exact geometry for the enumeration pipeline.
struct PolytopeGeom {
    Rank2Matroid matroid;
    std::vector<QVec> vertices;
    std::vector<Hyperplane> rows;
    std::vector<Hyperplane> eqs;
    Rat volume;
};

PolytopeGeom geometry_of(const Rank2Matroid& m);

std::string matroid_json(const Rank2Matroid& m);
Rank2Matroid matroid_from_json(const std::string& text);

}  // namespace gn2
