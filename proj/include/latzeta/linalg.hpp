#pragma once

#include <optional>

#include "latzeta/core.hpp"

namespace latzeta {

using QVec = std::vector<BigRational>;
using QMat = std::vector<QVec>;  // row major

QVec to_qvec(const IVec& v);
QMat to_qmat(const std::vector<IVec>& rows);

/// Rank over the rationals (destroys nothing; works on a copy).
int rank(QMat m);

/// Solves A x = b exactly for A with full column rank. Returns nothing when
/// the system is inconsistent; throws if the columns are dependent.
std::optional<QVec> solve_full_col_rank(const QMat& a, const QVec& b);

/// Basis of the right kernel {x : A x = 0}.
std::vector<QVec> kernel(const QMat& a, int ncols);

/// Determinant of a square matrix.
BigRational det(QMat m);

/// Inverse of a square nonsingular matrix. Throws on singular input.
QMat inverse(QMat m);

/// Scales a nonzero rational vector to a primitive integer vector keeping
/// direction.
IVec primitive_direction(const QVec& v);

}  // namespace latzeta
