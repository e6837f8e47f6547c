#include "pellspace/int_linalg.hpp"

#include <utility>

#include "pellspace/errors.hpp"

namespace pellspace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec row_times_matrix(const IntVec& v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows)
    throw std::invalid_argument("row_times_matrix: dimension mismatch");
  IntVec r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

namespace {

Int exact_div(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

// Montante (fraction-free Gauss-Jordan) on an n x c working matrix whose
// leading n columns hold the square system. Returns sign * det; on success
// the left block is det * I and the remaining columns carry det * solution.
Int montante(IntMatrix& m, int n) {
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (m.at(r, k) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      swap_rows(m, pivot, k);
      sign = -sign;
    }
    const Int p = m.at(k, k);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const Int mik = m.at(i, k);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = exact_div(p * m.at(i, j) - mik * m.at(k, j), prev);
    }
    prev = p;
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace

Int int_determinant(IntMatrix a) {
  if (a.rows != a.cols) throw std::invalid_argument("int_determinant: matrix not square");
  if (a.rows == 0) return 1;
  Int det = montante(a, a.rows);
  return det;
}

IntMatrix int_inverse(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("int_inverse: matrix not square");
  const int n = a.rows;
  IntMatrix work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = a.at(i, j);
    work.at(i, n + i) = 1;
  }
  const Int det = montante(work, n);
  if (det != 1 && det != -1)
    throw NotUnimodularError("int_inverse: determinant is " + det.get_str());
  // Left block is now diag(d,...,d) with d = +-det; the right block is
  // d * A^{-1}, so dividing by the actual diagonal entry normalizes signs.
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    const Int& diag = work.at(i, i);
    for (int j = 0; j < n; ++j) inv.at(i, j) = exact_div(work.at(i, n + j), diag);
  }
  return inv;
}

namespace {

// Row echelon pass over Q: returns pivot column per eliminated row.
int echelon(std::vector<RatVec>& rows) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rat p = rows[rank][col];
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat f = rows[r][col] / p;
      for (int c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_rat(std::vector<RatVec> rows) { return echelon(rows); }

int affine_dim(const std::vector<IntVec>& points) {
  if (points.empty()) return -1;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    RatVec row;
    row.reserve(points[i].size());
    for (size_t j = 0; j < points[i].size(); ++j) row.emplace_back(points[i][j] - points[0][j]);
    diffs.push_back(std::move(row));
  }
  return rank_rat(std::move(diffs));
}

std::optional<RatVec> solve_simplicial_membership(const std::vector<IntVec>& generators,
                                                  const RatVec& target) {
  const int k = static_cast<int>(generators.size());
  const int n = static_cast<int>(target.size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("solve_simplicial_membership: length mismatch");

  // Augmented system [G | target] with generators as columns.
  std::vector<RatVec> rows(n, RatVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = Rat(generators[j][i]);
    rows[i][k] = target[i];
  }

  // Gauss-Jordan; pivot per generator column required for independence.
  std::vector<int> pivot_row(k, -1);
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rat p = rows[rank][col];
    for (auto& x : rows[rank]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (int c = col; c <= k; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (int col = 0; col < k; ++col)
    if (pivot_row[col] < 0)
      throw DependentGeneratorsError("solve_simplicial_membership: dependent generators");

  // Inconsistent rows mean the target is outside the span.
  for (int r = rank; r < n; ++r)
    if (rows[r][k] != 0) return std::nullopt;

  RatVec lambda(k);
  for (int col = 0; col < k; ++col) {
    lambda[col] = rows[pivot_row[col]][k];
    if (lambda[col] < 0) return std::nullopt;
  }
  return lambda;
}

}  // namespace pellspace
