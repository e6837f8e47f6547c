#pragma once

#include <optional>
#include <vector>

#include "pellspace/numeric.hpp"

namespace pellspace {

/// Exact matrix product. Throws std::invalid_argument on a dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

IntVec row_times_matrix(const IntVec& v, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int int_determinant(IntMatrix a);

/// Inverse of a unimodular integer matrix, computed by fraction-free
/// Gauss-Jordan elimination (Montante). Throws NotUnimodularError when
/// det(A) is not +1 or -1, including singular input.
IntMatrix int_inverse(const IntMatrix& a);

/// Unique coefficients lambda >= 0 with sum lambda_i g_i = target, or
/// nullopt when the target lies outside the simplicial cone (including
/// outside the linear span). Throws DependentGeneratorsError when the
/// generators are linearly dependent.
std::optional<RatVec> solve_simplicial_membership(const std::vector<IntVec>& generators,
                                                  const RatVec& target);

/// Exact rank over Q of a list of rational row vectors.
int rank_rat(std::vector<RatVec> rows);

/// Affine dimension of a finite point set (rank of the difference vectors).
int affine_dim(const std::vector<IntVec>& points);

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace pellspace
