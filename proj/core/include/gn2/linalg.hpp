#pragma once

// Small dense exact linear algebra over Q and Z. Everything here is sized
// for the desk-scale matrices of this project (dimensions <= ~25).

#include "gn2/rational.hpp"

namespace gn2 {

/// Rank by exact fraction-free (Bareiss) elimination. Rows are cleared to
/// integers first; this never changes the rank.
int matrix_rank(const QMat& m);

/// Solves a square system a*x = b. Returns false if a is singular.
bool solve_square(QMat a, QVec b, QVec& x);

/// Basis of the rational kernel {x : a*x = 0}, one vector per column
/// without a pivot.
QMat kernel_basis(QMat a);

/// Basis of the saturated integer kernel {x in Z^n : a*x = 0}. The input
/// is rational; the result generates the full lattice of integer solutions.
std::vector<IVec> integer_kernel(const QMat& a);

/// Affine rank of a point set minus one, i.e. dim of its affine hull.
int affine_dim(const std::vector<QVec>& points);

}  // namespace gn2
