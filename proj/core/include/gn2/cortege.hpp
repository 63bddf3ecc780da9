#pragma once

// Corteges: families of full-dimensional admissible polytopes tiling the
// hypersimplex with disjoint interiors, and their bijection with stable
// trees.

#include "gn2/matroid.hpp"
#include "gn2/trees.hpp"

#include <map>
#include <string>

namespace gn2 {

struct Cortege {
    int n = 0;
    std::vector<Rank2Matroid> members;  // canonical order

    void canonicalize();
    bool trivial() const { return members.size() == 1; }

    friend bool operator==(const Cortege& a, const Cortege& b) {
        return a.n == b.n && a.members == b.members;
    }
    friend bool operator<(const Cortege& a, const Cortege& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.members < b.members;
    }
};

/// Shared exact state for decomposition search on a fixed n: the full-dim
/// census with geometry, generic interior sample points, and a pairwise
/// interior-disjointness cache.
class DecompositionContext {
  public:
    /// npoints = 0 picks a size appropriate for n.
    explicit DecompositionContext(int n, std::uint64_t seed = 0, std::size_t npoints = 0);

    int n() const { return n_; }
    const std::vector<PolytopeGeom>& geoms() const { return geoms_; }
    const Rat& total_volume() const { return total_volume_; }
    const std::vector<QVec>& sample_points() const { return points_; }

    /// Index of a matroid in the census (canonical order).
    int index_of(const Rank2Matroid& m) const;

    /// Exact interior disjointness, cached. The covering-pair certificate
    /// (classes A of one and B of the other with A u B = {1..n}) proves
    /// disjointness outright; everything else is decided by strict LP.
    bool interiors_disjoint(int i, int j);

  private:
    int n_;
    std::vector<PolytopeGeom> geoms_;
    std::map<Rank2Matroid, int> index_;
    Rat total_volume_;
    std::vector<QVec> points_;
    std::map<std::pair<int, int>, bool> disjoint_cache_;
};

/// Exact: pairwise disjoint interiors and volumes summing to the volume of
/// the hypersimplex. Throws DimensionMismatch on a non-full-dim member.
bool is_decomposition(DecompositionContext& ctx, const Cortege& c);

/// All polyhedral decompositions including the trivial one, deterministic
/// order. Search: cover the first uncovered generic sample point, prune by
/// exact volume; every output is certified by is_decomposition.
std::vector<Cortege> enumerate_decompositions(DecompositionContext& ctx);

/// One matroid per internal vertex: its parallel classes are the leaf sets
/// of the branches at that vertex.
Cortege tree_to_cortege(const StableTree& t);

struct BijectionReport {
    bool ok = false;
    std::size_t tree_count = 0;
    std::size_t decomposition_count = 0;
    std::string detail;  // first mismatch, empty when ok
};

/// tree_to_cortege is injective and its image equals the enumerated
/// decomposition set.
BijectionReport bijection_check(DecompositionContext& ctx);

std::string cortege_json(const Cortege& c);

}  // namespace gn2
