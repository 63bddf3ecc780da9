#pragma once

// Leaf-labeled stable trees (every internal vertex of degree >= 3), the
// combinatorial side of the cortege bijection.

#include <set>
#include <string>
#include <vector>

namespace gn2 {

/// A stable tree on leaves 1..n. Vertices 0..n-1 are the leaves; internal
/// vertices follow. Canonical identity is the split set: for each internal
/// edge, the leaf side not containing leaf 1, sorted.
struct StableTree {
    int n = 0;
    int vertices = 0;                          // total vertex count
    std::vector<std::pair<int, int>> edges;    // undirected

    std::vector<std::vector<int>> adjacency() const;
    /// Leaf sets of the connected components of tree minus vertex v.
    std::vector<std::vector<int>> branches_at(int v) const;
    /// Canonical split signature (sorted, each split sorted, leaf-1-free side).
    std::vector<std::vector<int>> splits() const;
    bool is_stable() const;
    std::string dot() const;
};

/// All isomorphism classes of stable trees on n labeled leaves, by
/// recursive leaf insertion with canonical deduplication. Deterministic
/// order (sorted by split signature).
std::vector<StableTree> enumerate_stable_trees(int n);

}  // namespace gn2
