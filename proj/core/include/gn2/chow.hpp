#pragma once

// The component catalog of the Chow quotient: one component per cortege
// with the multiset product of its members' parameter spaces, the
// Z-tilde incidence sets, cycle projections, and exact one-parameter
// degeneration limits checked against the stored golden tables.

#include "gn2/charts.hpp"
#include "gn2/cortege.hpp"

#include <variant>

namespace gn2 {

/// Polynomial in one parameter t, coefficients low to high.
struct TPoly {
    QVec c;

    Rat at0() const { return c.empty() ? Rat(0) : c[0]; }
    Rat d_at0() const { return c.size() < 2 ? Rat(0) : c[1]; }
    bool zero() const;
    int valuation() const;  // lowest nonzero index, -1 for the zero poly
    TPoly shifted_down(int k) const;

    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
};

struct Component {
    int cortege_id = 0;  // index into the enumerated decomposition list
    std::vector<ParamDescriptor> factors;  // one per cortege member
    int dim = 0;
};

/// Unit for point factors, a ProjPair tuple for positive-dimensional ones.
using ParamValue = std::variant<std::monostate, std::vector<ProjPair>>;

struct Cycle {
    int n = 0;
    std::vector<std::pair<int, ParamValue>> summands;  // (census matroid id, parameter)
};

struct NotInCycle : Error {
    NotInCycle() : Error("matroid is not a summand of the cycle") {}
};
struct LimitUndefined : Error {
    IndexPair pair;
    explicit LimitUndefined(IndexPair p)
        : Error("degeneration limit indeterminate at pair (" + std::to_string(p.first) + "," +
                std::to_string(p.second) + ")"),
          pair(p) {}
};

/// A 2 x n matrix of degree-<=1 polynomials in t: columns within one
/// collision class share a direction at t = 0 and separate at first order.
struct DegenerationFamily {
    int n = 0;
    std::vector<std::vector<TPoly>> rows;             // 2 x n
    std::vector<std::vector<int>> collisions;         // colliding column sets
    Rank2Matroid target;                               // matroid of the t=0 pattern

    TPoly minor(int i, int j) const;  // P^ij as a polynomial in t
};

/// Seeded generic family realizing the collision pattern: all minors
/// nonzero as polynomials, and minor(i,j)(0) = 0 exactly when i, j collide.
DegenerationFamily make_degeneration(int n, const std::vector<std::vector<int>>& collisions,
                                     std::uint64_t seed);

/// Exact t -> 0 limit of the family's chart record: common powers of t are
/// cleared from each coordinate pair before evaluating.
ChartPoint limit_point(const DegenerationFamily& f, Chart chart);

/// First-order tangent data at a limit coordinate equal to (1:1): the
/// derivative of the coordinate ratio at t = 0.
Rat limit_direction(const DegenerationFamily& f, Chart chart, IndexPair pair);

/// One component per decomposition, in decomposition order.
std::vector<Component> catalog(DecompositionContext& ctx,
                               const std::vector<Cortege>& decompositions);

/// Ids of all components whose cortege contains P_sigma.
std::set<int> z_tilde(const Rank2Matroid& sigma, const std::vector<Cortege>& decompositions);

/// The parameter of the sigma-summand. Throws NotInCycle when absent.
ParamValue project_cycle(const Cycle& z, int matroid_id);

struct GoldenRow {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct GoldenReport {
    int n = 0;
    bool ok = false;
    std::vector<GoldenRow> rows;
};

/// Verifies every row of the stored golden table for n in {4, 5} by exact
/// degeneration limits over a battery of seeds.
GoldenReport golden_check(int n);

/// Resolved path of the golden table resource (env GN2_DATA_DIR overrides
/// the build-time default).
std::string golden_table_path(int n);

}  // namespace gn2
