#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pellspace {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals. No floating point anywhere in the core.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix&) const = default;
};

/// Canonical rational with positive denominator in lowest terms.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" in lowest terms, denominator always printed ("0/1", "1/1", "-3/2").
inline std::string rat_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int vec_dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_scale(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline IntVec unit_vec(int len, int pos, const Int& value = 1) {
  IntVec v(len, 0);
  v[pos] = value;
  return v;
}

inline bool is_zero_vec(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Divide out the gcd of the entries; zero vectors are rejected.
inline IntVec make_primitive(IntVec v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("make_primitive: zero vector");
  if (g != 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Exponent safe to use as a repetition count.
inline unsigned long to_ulong(const Int& x) {
  if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error("exponent out of range");
  return x.get_ui();
}

}  // namespace pellspace
