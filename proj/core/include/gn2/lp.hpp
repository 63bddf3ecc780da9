#pragma once

// Exact rational linear programming, just large enough for this project:
// dense two-phase simplex with Bland's rule (termination guaranteed, no
// epsilons anywhere). Strict inequalities are handled by an auxiliary slack
// maximized above zero.

#include "gn2/rational.hpp"

#include <optional>

namespace gn2 {

struct LinearConstraint {
    QVec coeffs;       // a
    Rat rhs;           // b
    enum Kind { LE, GE, EQ } kind = LE;
    bool strict = false;  // only meaningful for LE / GE
};

class LinearSystem {
  public:
    explicit LinearSystem(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    void add(const QVec& a, const Rat& b, LinearConstraint::Kind kind, bool strict = false) {
        constraints_.push_back({a, b, kind, strict});
    }
    void add_le(const QVec& a, const Rat& b, bool strict = false) { add(a, b, LinearConstraint::LE, strict); }
    void add_ge(const QVec& a, const Rat& b, bool strict = false) { add(a, b, LinearConstraint::GE, strict); }
    void add_eq(const QVec& a, const Rat& b) { add(a, b, LinearConstraint::EQ); }

    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  private:
    int nvars_;
    std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rat value;  // optimal objective value when status == Optimal
    QVec x;     // optimizer
};

/// Maximizes obj over the (non-strict reading of the) system. Strict flags
/// are ignored here.
LpResult lp_maximize(const LinearSystem& sys, const QVec& obj);

/// A point satisfying every constraint, strict ones strictly, or nullopt.
/// Decided exactly: a slack t in [0,1] is pushed into every strict row and
/// maximized; a strict solution exists iff max t > 0.
std::optional<QVec> find_strict_point(const LinearSystem& sys);

/// Convenience: no-objective feasibility of the non-strict reading.
bool feasible(const LinearSystem& sys);

}  // namespace gn2
