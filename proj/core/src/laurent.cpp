#include "pellspace/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "pellspace/errors.hpp"

namespace pellspace {

namespace {

void require_alphabet(const SparsePoly& a, const SparsePoly& b, const char* op) {
  if (a.vars != b.vars)
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

void require_exponents(const SparsePoly& p) {
  for (const auto& [exp, c] : p.terms) {
    if (exp.size() != p.vars.size())
      throw std::invalid_argument("SparsePoly: exponent length != alphabet size");
    for (const auto& e : exp)
      if (e < 0) throw std::invalid_argument("SparsePoly: negative exponent");
  }
}

}  // namespace

SparsePoly make_poly(std::vector<std::string> vars) {
  SparsePoly p;
  p.vars = std::move(vars);
  return p;
}

SparsePoly make_constant(std::vector<std::string> vars, const Rat& c) {
  SparsePoly p = make_poly(std::move(vars));
  if (c != 0) p.terms.emplace(IntVec(p.vars.size(), 0), c);
  return p;
}

void add_term(SparsePoly& p, const IntVec& exp, const Rat& c) {
  if (c == 0) return;
  if (exp.size() != p.vars.size())
    throw std::invalid_argument("add_term: exponent length != alphabet size");
  for (const auto& e : exp)
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  auto it = p.terms.find(exp);
  if (it == p.terms.end()) {
    p.terms.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
  require_alphabet(a, b, "poly_add");
  SparsePoly r = a;
  for (const auto& [exp, c] : b.terms) add_term(r, exp, c);
  return r;
}

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b) {
  require_alphabet(a, b, "poly_sub");
  SparsePoly r = a;
  for (const auto& [exp, c] : b.terms) add_term(r, exp, Rat(-c));
  return r;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) {
  require_alphabet(a, b, "poly_mul");
  SparsePoly r = make_poly(a.vars);
  IntVec exp(a.vars.size());
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (size_t i = 0; i < exp.size(); ++i) exp[i] = ea[i] + eb[i];
      add_term(r, exp, Rat(ca * cb));
    }
  return r;
}

SparsePoly poly_product(const std::vector<SparsePoly>& factors) {
  if (factors.empty()) return make_constant({}, Rat(1));
  SparsePoly r = make_constant(factors.front().vars, Rat(1));
  for (const auto& f : factors) {
    require_exponents(f);
    r = poly_mul(r, f);
  }
  return r;
}

MonomialQuotient substitute_monomials(const SparsePoly& p, const MonomialMap& phi) {
  if (p.vars != phi.source_vars)
    throw std::invalid_argument("substitute_monomials: alphabet mismatch");
  const size_t m = phi.target_vars.size();
  for (const auto& img : phi.images)
    if (img.size() != m)
      throw std::invalid_argument("substitute_monomials: image length mismatch");

  // Laurent image of every term, then one global denominator clearing.
  std::map<IntVec, Rat, GradedLexLess> laurent;
  for (const auto& [exp, c] : p.terms) {
    IntVec image(m, 0);
    for (size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      for (size_t j = 0; j < m; ++j) image[j] += exp[i] * phi.images[i][j];
    }
    auto it = laurent.find(image);
    if (it == laurent.end()) {
      laurent.emplace(std::move(image), c);
    } else {
      it->second += c;
      if (it->second == 0) laurent.erase(it);
    }
  }

  IntVec shift(m, 0);
  for (const auto& [exp, c] : laurent)
    for (size_t j = 0; j < m; ++j)
      if (exp[j] < shift[j]) shift[j] = exp[j];

  MonomialQuotient out;
  out.numerator = make_poly(phi.target_vars);
  out.denominator.exponents.assign(m, 0);
  for (size_t j = 0; j < m; ++j) out.denominator.exponents[j] = -shift[j];
  IntVec lifted(m);
  for (const auto& [exp, c] : laurent) {
    for (size_t j = 0; j < m; ++j) lifted[j] = exp[j] - shift[j];
    add_term(out.numerator, lifted, c);
  }
  return out;
}

bool is_zero_identity(const SparsePoly& p) { return p.terms.empty(); }

std::optional<SparsePoly> poly_divide_exact(const SparsePoly& dividend,
                                            const SparsePoly& divisor) {
  require_alphabet(dividend, divisor, "poly_divide_exact");
  if (divisor.terms.empty()) throw std::invalid_argument("poly_divide_exact: zero divisor");

  const auto& lt_div = *divisor.terms.rbegin();  // leading term in graded lex
  SparsePoly quotient = make_poly(dividend.vars);
  SparsePoly rem = dividend;
  const size_t nv = dividend.vars.size();

  while (!rem.terms.empty()) {
    const auto& lt_rem = *rem.terms.rbegin();
    IntVec t(nv);
    for (size_t i = 0; i < nv; ++i) {
      t[i] = lt_rem.first[i] - lt_div.first[i];
      if (t[i] < 0) return std::nullopt;  // leading term not divisible
    }
    const Rat coeff = lt_rem.second / lt_div.second;
    add_term(quotient, t, coeff);
    IntVec exp(nv);
    for (const auto& [e, c] : divisor.terms) {
      for (size_t i = 0; i < nv; ++i) exp[i] = e[i] + t[i];
      add_term(rem, exp, Rat(-coeff * c));
    }
  }
  return quotient;
}

std::vector<std::string> y_alphabet(int d) {
  std::vector<std::string> v;
  for (int i = 1; i <= d; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

std::vector<std::string> ypq_alphabet(int d) {
  std::vector<std::string> v = y_alphabet(d);
  for (int i = 1; i <= d; ++i) v.push_back("p" + std::to_string(i));
  for (int i = 1; i <= d - 1; ++i) v.push_back("q" + std::to_string(i));
  return v;
}

std::vector<std::string> u_alphabet(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

SparsePoly reduce_pq(const SparsePoly& p, int d) {
  if (p.vars != ypq_alphabet(d))
    throw std::invalid_argument("reduce_pq: expected the (y,p,q) alphabet");
  const auto yvars = y_alphabet(d);

  // p_i and q_j expansions over the y alphabet.
  std::vector<SparsePoly> pdef(d), qdef(std::max(0, d - 1));
  for (int i = 0; i < d; ++i) {
    pdef[i] = make_constant(yvars, Rat(1));
    add_term(pdef[i], unit_vec(d, i), Rat(1));
  }
  for (int j = 0; j + 1 < d; ++j) {
    qdef[j] = make_constant(yvars, Rat(1));
    add_term(qdef[j], unit_vec(d, j), Rat(1));
    IntVec e(d, 0);
    e[j] = 1;
    e[j + 1] = 1;
    add_term(qdef[j], e, Rat(1));
  }

  SparsePoly out = make_poly(yvars);
  for (const auto& [exp, c] : p.terms) {
    for (size_t k = d; k < exp.size(); ++k)
      if (exp[k] < 0) throw PNegativeExponentError("reduce_pq: negative p/q exponent");
    IntVec yexp(exp.begin(), exp.begin() + d);
    SparsePoly term = make_poly(yvars);
    add_term(term, yexp, c);
    // q before p, then fully expand.
    for (int j = 0; j + 1 < d; ++j)
      for (unsigned long r = to_ulong(exp[2 * d + j]); r > 0; --r) term = poly_mul(term, qdef[j]);
    for (int i = 0; i < d; ++i)
      for (unsigned long r = to_ulong(exp[d + i]); r > 0; --r) term = poly_mul(term, pdef[i]);
    out = poly_add(out, term);
  }
  return out;
}

std::string poly_to_string(const SparsePoly& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.get_str() << ")";
    for (size_t i = 0; i < p.vars.size(); ++i)
      if (it->first[i] != 0) os << "*" << p.vars[i] << "^" << it->first[i].get_str();
  }
  return os.str();
}

}  // namespace pellspace
