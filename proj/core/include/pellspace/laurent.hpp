#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pellspace/numeric.hpp"

namespace pellspace {

/// Exponent vector over a named alphabet carried by the surrounding context.
/// Negative exponents are allowed here (Laurent), unlike in SparsePoly.
struct Monomial {
  IntVec exponents;

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic ascending order; used as the canonical term order
/// for serialization and as the division order (leading term = largest).
struct GradedLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    Int da = 0, db = 0;
    for (const auto& x : a) da += x;
    for (const auto& x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Q: no zero coefficients stored,
/// all exponents non-negative of alphabet length.
struct SparsePoly {
  std::vector<std::string> vars;
  std::map<IntVec, Rat, GradedLexLess> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SparsePoly&) const = default;
};

/// Total map from a source alphabet into Laurent monomials over a target one.
struct MonomialMap {
  std::vector<std::string> source_vars;
  std::vector<std::string> target_vars;
  std::vector<IntVec> images;  // one exponent vector per source variable
};

/// Numerator / monomial-denominator normal form of a Laurent expression.
struct MonomialQuotient {
  SparsePoly numerator;    // over the target alphabet, exponents >= 0
  Monomial denominator;    // exponents >= 0
};

SparsePoly make_poly(std::vector<std::string> vars);
SparsePoly make_constant(std::vector<std::string> vars, const Rat& c);

/// Adds c * x^exp into p, collecting terms and dropping zeros.
void add_term(SparsePoly& p, const IntVec& exp, const Rat& c);

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);

/// Fully expanded product with collected terms; the empty product is the
/// constant 1 over the empty alphabet.
SparsePoly poly_product(const std::vector<SparsePoly>& factors);

/// Pushes P through the monomial map and clears denominators, returning
/// (numerator, denominator) with the numerator a genuine polynomial.
MonomialQuotient substitute_monomials(const SparsePoly& p, const MonomialMap& phi);

/// true iff all coefficients vanish after normalization.
bool is_zero_identity(const SparsePoly& p);

/// Exact quotient if divisor | dividend (single-divisor division in graded
/// lex order); nullopt when the remainder is nonzero.
std::optional<SparsePoly> poly_divide_exact(const SparsePoly& dividend,
                                            const SparsePoly& divisor);

std::vector<std::string> y_alphabet(int d);
std::vector<std::string> ypq_alphabet(int d);
std::vector<std::string> u_alphabet(int d);

/// Eliminates the p and q symbols of the (y,p,q) alphabet for dimension d:
/// q_j -> 1 + y_j + y_j y_{j+1} first, then p_i -> 1 + y_i, fully expanded
/// over the y alphabet. Throws PNegativeExponentError on a negative p or q
/// exponent; callers clear denominators first.
SparsePoly reduce_pq(const SparsePoly& p, int d);

std::string poly_to_string(const SparsePoly& p);

}  // namespace pellspace
