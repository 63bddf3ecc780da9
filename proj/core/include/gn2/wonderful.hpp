#pragma once

// Combinatorial building set of the boundary intersections: families of
// disjoint index blocks of size >= 3 inside {3..n}, the o-function counting
// forced-(1:1) coordinates, the blow-up schedule, and nest candidates.

#include "gn2/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace gn2 {

/// An intersection of the forced-(1:1) triple subvarieties, recorded by its
/// blocks: pairwise disjoint subsets of {3..n}, each of size >= 3, ordered
/// by minimum element.
struct BuildingElement {
    std::vector<std::vector<int>> blocks;

    void canonicalize();
    /// Number of coordinates forced to (1:1): sum of C(|block|, 2).
    long o_value() const;
    /// The forced pair set itself.
    std::set<std::pair<int, int>> forced_pairs() const;
    std::string name() const;

    friend bool operator==(const BuildingElement& a, const BuildingElement& b) {
        return a.blocks == b.blocks;
    }
    friend bool operator<(const BuildingElement& a, const BuildingElement& b) {
        return a.blocks < b.blocks;
    }
};

/// Closure of a set of triples under the relation-forced propagation: two
/// forced pairs of a triple force the third. Blocks are the connected
/// components of the union graph of the triangles.
BuildingElement closure(const std::vector<std::vector<int>>& triples);

/// Combinatorial closure of the union of two elements.
BuildingElement merge(const BuildingElement& a, const BuildingElement& b);

/// True iff each block of `fine` is contained in some block of `coarse`
/// (the subvariety of `fine`... contains the one of `coarse`'s pattern
/// reversed: refinement of block families).
bool refines(const BuildingElement& fine, const BuildingElement& coarse);

/// All nonempty intersections of the triple subvarieties: every family of
/// pairwise disjoint blocks of size >= 3 in {3..n}. Empty for n = 4.
std::vector<BuildingElement> generate_building_set(int n);

struct BlowupSchedule {
    std::vector<BuildingElement> order;
};

struct ScheduleInvalid : Error {
    explicit ScheduleInvalid(const std::string& what) : Error(what) {}
};

/// Elements ordered by o-value descending, ties in canonical order, with
/// the prefix intersection-closure validation. Throws ScheduleInvalid if a
/// prefix fails (that would be a bug, not an input property).
BlowupSchedule schedule(const std::vector<BuildingElement>& elements);

/// Families totally ordered by refinement, emitted as candidates only.
std::vector<std::vector<BuildingElement>> nest_candidates(
    const std::vector<BuildingElement>& elements);

std::string building_element_json(const BuildingElement& e);

/// DOT export of the refinement (inclusion) poset.
std::string building_set_dot(const std::vector<BuildingElement>& elements);

}  // namespace gn2
