#include "gn2/lp.hpp"

#include <cstddef>

namespace gn2 {

namespace {

// Dense simplex tableau for: minimize c*y subject to A y = b, y >= 0,
// with b >= 0 on entry. Phase 1 uses one artificial per row.
class Tableau {
  public:
    Tableau(QMat a, QVec b, QVec c)
        : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    // Returns false if infeasible. On success the tableau holds a basic
    // feasible solution of the original system.
    bool phase1() {
        // Append artificials: columns cols_ .. cols_+rows_-1.
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < rows_; ++j) a_[i].push_back(i == j ? Rat(1) : Rat(0));
            basis_[i] = cols_ + i;
        }
        QVec saved_c = std::move(c_);
        c_.assign(cols_ + rows_, Rat(0));
        for (std::size_t j = cols_; j < cols_ + rows_; ++j) c_[j] = 1;
        run();
        Rat v = objective();
        if (v != 0) return false;
        // Pivot remaining artificials out of the basis; rows where no pivot
        // exists are redundant and can stay (their artificial is zero).
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < cols_) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (a_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        // Drop artificial columns.
        for (std::size_t i = 0; i < rows_; ++i) a_[i].resize(cols_);
        c_ = std::move(saved_c);
        return true;
    }

    // Minimizes c*y from the current basic feasible point. Returns false if
    // unbounded below.
    bool phase2() { return run(); }

    Rat objective() const {
        Rat v = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < c_.size()) v += c_[basis_[i]] * b_[i];
        return v;
    }

    QVec solution(std::size_t n) const {
        QVec y(n, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < n) y[basis_[i]] = b_[i];
        return y;
    }

  private:
    void pivot(std::size_t r, std::size_t col) {
        const Rat inv = 1 / a_[r][col];
        for (auto& v : a_[r]) v *= inv;
        b_[r] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][col] == 0) continue;
            const Rat f = a_[i][col];
            for (std::size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
        }
        basis_[r] = col;
    }

    // Reduced cost of column j under the current basis.
    Rat reduced_cost(std::size_t j) const {
        Rat v = c_[j];
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < c_.size()) v -= c_[basis_[i]] * a_[i][j];
        return v;
    }

    // Bland's rule loop. Returns false on unboundedness.
    bool run() {
        const std::size_t ncols = a_.empty() ? 0 : a_[0].size();
        while (true) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (reduced_cost(j) < 0) { enter = j; break; }
            }
            if (enter == ncols) return true;  // optimal
            std::size_t leave = rows_;
            Rat best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat ratio = b_[i] / a_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    std::size_t rows_, cols_;
    QMat a_;
    QVec b_;
    QVec c_;
    std::vector<std::size_t> basis_;
};

// Builds the standard form for the given system plus an optional strict
// slack variable (index nvars in the x-space) and solves max obj.
LpResult solve(const LinearSystem& sys, QVec obj, bool with_strict_slack) {
    const int n = sys.nvars();
    const int nx = n + (with_strict_slack ? 1 : 0);
    // y layout: y[2k] = x_k^+, y[2k+1] = x_k^- for k < nx, then one slack
    // per inequality row.
    std::size_t nslack = 0;
    for (const auto& c : sys.constraints())
        if (c.kind != LinearConstraint::EQ) ++nslack;
    if (with_strict_slack) ++nslack;  // t <= 1 bound row

    const std::size_t ny = 2 * nx + nslack;
    QMat a;
    QVec b;
    std::size_t slack_at = 2 * nx;

    auto make_row = [&](const QVec& coeffs, const Rat& tcoef) {
        QVec row(ny, Rat(0));
        for (int k = 0; k < n; ++k) {
            row[2 * k] = coeffs[k];
            row[2 * k + 1] = -coeffs[k];
        }
        if (with_strict_slack) {
            row[2 * n] = tcoef;
            row[2 * n + 1] = -tcoef;
        }
        return row;
    };

    for (const auto& c : sys.constraints()) {
        QVec coeffs = c.coeffs;
        Rat rhs = c.rhs;
        auto kind = c.kind;
        if (kind == LinearConstraint::GE) {
            for (auto& v : coeffs) v = -v;
            rhs = -rhs;
            kind = LinearConstraint::LE;
        }
        QVec row = make_row(coeffs, (with_strict_slack && c.strict) ? Rat(1) : Rat(0));
        if (kind == LinearConstraint::LE) row[slack_at++] = 1;
        // Normalize to b >= 0.
        if (rhs < 0) {
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    if (with_strict_slack) {
        // t <= 1 keeps the objective bounded.
        QVec row(ny, Rat(0));
        row[2 * n] = 1;
        row[2 * n + 1] = -1;
        row[slack_at++] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
    }

    QVec c(ny, Rat(0));
    for (int k = 0; k < nx; ++k) {
        c[2 * k] = -obj[k];  // minimize -obj
        c[2 * k + 1] = obj[k];
    }

    Tableau t(std::move(a), std::move(b), std::move(c));
    if (!t.phase1()) return {LpStatus::Infeasible, Rat(0), {}};
    if (!t.phase2()) return {LpStatus::Unbounded, Rat(0), {}};

    QVec y = t.solution(ny);
    QVec x(nx);
    for (int k = 0; k < nx; ++k) x[k] = y[2 * k] - y[2 * k + 1];
    return {LpStatus::Optimal, -t.objective(), std::move(x)};
}

}  // namespace

LpResult lp_maximize(const LinearSystem& sys, const QVec& obj) {
    return solve(sys, obj, /*with_strict_slack=*/false);
}

std::optional<QVec> find_strict_point(const LinearSystem& sys) {
    QVec obj(sys.nvars() + 1, Rat(0));
    obj[sys.nvars()] = 1;  // maximize the strictness slack
    LpResult r = solve(sys, obj, /*with_strict_slack=*/true);
    if (r.status != LpStatus::Optimal || r.value <= 0) return std::nullopt;
    QVec x(r.x.begin(), r.x.begin() + sys.nvars());
    return x;
}

bool feasible(const LinearSystem& sys) {
    QVec obj(sys.nvars(), Rat(0));
    return lp_maximize(sys, obj).status == LpStatus::Optimal;
}

}  // namespace gn2
