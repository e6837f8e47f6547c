#include "pellspace/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "pellspace/errors.hpp"
#include "pellspace/int_linalg.hpp"

namespace pellspace {

namespace {

IntVec embed(const IntVec& v, int offset, int total) {
  IntVec r(total, 0);
  for (size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
  return r;
}

std::vector<int> sorted_cone(std::vector<int> c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<IntVec> cone_generators(const SimplicialFan& fan, const std::vector<int>& cone) {
  std::vector<IntVec> gens;
  gens.reserve(cone.size());
  for (int i : cone) gens.push_back(fan.rays[i]);
  return gens;
}

}  // namespace

bool cone_contains(const SimplicialFan& fan, int cone_index, const IntVec& v) {
  return solve_simplicial_membership(cone_generators(fan, fan.maximal_cones[cone_index]),
                                     to_rat_vec(v))
      .has_value();
}

IntVec cone_interior_point(const SimplicialFan& fan, int cone_index) {
  IntVec w(fan.dim, 0);
  for (int i : fan.maximal_cones[cone_index]) w = vec_add(w, fan.rays[i]);
  return w;
}

SimplicialFan fan_product(const SimplicialFan& a, const SimplicialFan& b) {
  SimplicialFan p;
  p.dim = a.dim + b.dim;
  for (const auto& r : a.rays) p.rays.push_back(embed(r, 0, p.dim));
  for (const auto& r : b.rays) p.rays.push_back(embed(r, a.dim, p.dim));
  const int offset = static_cast<int>(a.rays.size());
  for (const auto& ca : a.maximal_cones)
    for (const auto& cb : b.maximal_cones) {
      std::vector<int> c = ca;
      for (int i : cb) c.push_back(offset + i);
      p.maximal_cones.push_back(sorted_cone(std::move(c)));
    }
  return p;
}

SimplicialFan stellar_refine(const SimplicialFan& fan, const IntVec& ray) {
  for (const auto& r : fan.rays)
    if (r == ray) throw RayOnExistingRayError("stellar_refine: ray already present");

  const int new_index = static_cast<int>(fan.rays.size());
  SimplicialFan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(ray);

  bool contained_somewhere = false;
  std::set<std::vector<int>> new_cones;
  for (const auto& cone : fan.maximal_cones) {
    auto lambda = solve_simplicial_membership(cone_generators(fan, cone), to_rat_vec(ray));
    if (!lambda) {
      new_cones.insert(cone);
      continue;
    }
    contained_somewhere = true;
    // Split along the minimal face containing the ray (positive coefficients).
    for (size_t k = 0; k < cone.size(); ++k) {
      if ((*lambda)[k] == 0) continue;
      std::vector<int> c;
      for (size_t j = 0; j < cone.size(); ++j)
        if (j != k) c.push_back(cone[j]);
      c.push_back(new_index);
      new_cones.insert(sorted_cone(std::move(c)));
    }
  }
  if (!contained_somewhere)
    throw std::invalid_argument("stellar_refine: ray lies in no cone of the fan");
  out.maximal_cones.assign(new_cones.begin(), new_cones.end());
  return out;
}

bool spans_cone(const SimplicialFan& fan, const std::vector<int>& tau) {
  for (const auto& cone : fan.maximal_cones)
    if (std::includes(cone.begin(), cone.end(), tau.begin(), tau.end())) return true;
  return tau.empty();
}

SimplicialFan star(const SimplicialFan& fan, const std::vector<int>& tau_in) {
  const std::vector<int> tau = sorted_cone(tau_in);
  if (!spans_cone(fan, tau)) throw NotAConeError("star: index set spans no cone");
  const int n = fan.dim;
  const int k = static_cast<int>(tau.size());

  // Greedy basis completion: columns tau generators, then standard basis
  // vectors that keep the rank growing.
  std::vector<IntVec> basis;
  for (int i : tau) basis.push_back(fan.rays[i]);
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
    basis.push_back(unit_vec(n, i));
    std::vector<RatVec> rows;
    for (const auto& b : basis) rows.push_back(to_rat_vec(b));
    if (rank_rat(rows) < static_cast<int>(basis.size())) basis.pop_back();
  }
  if (static_cast<int>(basis.size()) != n)
    throw std::logic_error("star: could not complete basis");

  // Coordinates w.r.t. the basis; quotient = components k..n-1.
  auto project = [&](const IntVec& x) -> RatVec {
    std::vector<RatVec> rows(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) rows[i][j] = Rat(basis[j][i]);
      rows[i][n] = Rat(x[i]);
    }
    // Solve B c = x by Gauss-Jordan (B invertible by construction).
    int rank = 0;
    std::vector<int> pivot_row(n, -1);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = rank; r < n; ++r)
        if (rows[r][col] != 0) {
          pivot = r;
          break;
        }
      std::swap(rows[rank], rows[pivot]);
      const Rat p = rows[rank][col];
      for (auto& x2 : rows[rank]) x2 /= p;
      for (int r = 0; r < n; ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        const Rat f = rows[r][col];
        for (int c = col; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
      }
      pivot_row[col] = rank;
      ++rank;
    }
    RatVec coords(n - k);
    for (int j = k; j < n; ++j) coords[j - k] = rows[pivot_row[j]][n];
    return coords;
  };

  auto primitive_of = [&](const RatVec& q) -> IntVec {
    Int lcm = 1;
    for (const auto& x : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    IntVec v(q.size());
    for (size_t i = 0; i < q.size(); ++i) v[i] = Int(q[i].get_num() * (lcm / q[i].get_den()));
    return make_primitive(std::move(v));
  };

  SimplicialFan out;
  out.dim = n - k;
  std::map<IntVec, int> ray_index;
  std::set<std::vector<int>> cones;
  for (const auto& cone : fan.maximal_cones) {
    if (!std::includes(cone.begin(), cone.end(), tau.begin(), tau.end())) continue;
    std::vector<int> image;
    for (int i : cone) {
      if (std::binary_search(tau.begin(), tau.end(), i)) continue;
      IntVec pr = primitive_of(project(fan.rays[i]));
      auto [it, inserted] = ray_index.try_emplace(pr, static_cast<int>(out.rays.size()));
      if (inserted) out.rays.push_back(pr);
      image.push_back(it->second);
    }
    cones.insert(sorted_cone(std::move(image)));
  }
  out.maximal_cones.assign(cones.begin(), cones.end());
  return out;
}

FlagComplex extract_flag_complex(const SimplicialFan& fan) {
  const int k = static_cast<int>(fan.rays.size());
  if (k > 64) throw std::invalid_argument("extract_flag_complex: too many rays");
  FlagComplex fc;
  fc.ground = k;
  fc.compatibility = Graph(k);

  // Two rays are compatible iff they span a 2-cone, i.e. some maximal cone
  // contains both (faces of cones are cones).
  std::vector<std::uint64_t> cone_masks;
  for (const auto& cone : fan.maximal_cones) {
    std::uint64_t m = 0;
    for (int i : cone) m |= std::uint64_t(1) << i;
    cone_masks.push_back(m);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::uint64_t pair = (std::uint64_t(1) << i) | (std::uint64_t(1) << j);
      bool compat = false;
      for (auto m : cone_masks)
        if ((m & pair) == pair) {
          compat = true;
          break;
        }
      if (compat)
        fc.compatibility.add_edge(i, j);
      else
        fc.non_edges.emplace_back(i, j);
    }

  // Flagness: every maximal clique of the compatibility graph spans a cone.
  for (auto clique : maximal_cliques(fc.compatibility)) {
    bool covered = false;
    for (auto m : cone_masks)
      if ((m & clique) == clique) {
        covered = true;
        break;
      }
    if (!covered) {
      std::vector<int> witness;
      for (int v = 0; v < k; ++v)
        if ((clique >> v) & 1) witness.push_back(v);
      throw NotFlagError("extract_flag_complex: clique spans no cone", witness);
    }
  }
  return fc;
}

namespace {

// Index of the unique minimizer of <w, .> over the support, or -1 on a tie.
int unique_argmin(const std::vector<IntVec>& support, const IntVec& w) {
  int best = 0;
  bool tie = false;
  Int best_val = vec_dot(w, support[0]);
  for (size_t s = 1; s < support.size(); ++s) {
    Int v = vec_dot(w, support[s]);
    if (v < best_val) {
      best_val = std::move(v);
      best = static_cast<int>(s);
      tie = false;
    } else if (v == best_val) {
      tie = true;
    }
  }
  return tie ? -1 : best;
}

}  // namespace

std::vector<IntVec> vertices_from_fan(const std::vector<IntVec>& support,
                                      const SimplicialFan& fan) {
  if (support.empty()) throw std::invalid_argument("vertices_from_fan: empty support");
  std::vector<IntVec> verts;
  verts.reserve(fan.maximal_cones.size());
  const Int big = Int(1) << 40;
  for (size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    const IntVec w = cone_interior_point(fan, static_cast<int>(c));
    int idx = unique_argmin(support, w);
    if (idx < 0) {
      // Nudge toward one generator per retry; all retries must agree.
      const auto& cone = fan.maximal_cones[c];
      int agreed = -1;
      for (int r = 0; r < 3; ++r) {
        const IntVec& g = fan.rays[cone[r % cone.size()]];
        IntVec wr = vec_scale(big, w);
        wr = vec_add(wr, g);
        const int got = unique_argmin(support, wr);
        if (got < 0 || (agreed >= 0 && got != agreed)) {
          throw AmbiguousVertexError(
              "vertices_from_fan: no perturbation separates minimizers (cone " +
                  std::to_string(c) + ")",
              static_cast<int>(c));
        }
        agreed = got;
      }
      idx = agreed;
    }
    verts.push_back(support[idx]);
  }
  return verts;
}

SimpleFacetsReport check_simple_and_facets(const LatticePolytope& p, const SimplicialFan& fan) {
  SimpleFacetsReport rep;
  rep.simple = true;
  for (const auto& cone : fan.maximal_cones)
    if (static_cast<int>(cone.size()) != fan.dim) rep.simple = false;

  for (const auto& ray : fan.rays) {
    Int best = vec_dot(ray, p.support[0]);
    for (const auto& s : p.support) best = std::min(best, vec_dot(ray, s));
    std::vector<IntVec> face;
    for (const auto& s : p.support)
      if (vec_dot(ray, s) == best) face.push_back(s);
    if (affine_dim(face) == p.dim - 1) ++rep.facet_count;
  }

  auto verts = vertices_from_fan(p.support, fan);
  std::set<IntVec> distinct(verts.begin(), verts.end());
  rep.vertex_count = static_cast<int>(distinct.size());
  return rep;
}

RefinementWitness is_refinement(const SimplicialFan& fine, const SimplicialFan& coarse) {
  RefinementWitness w;
  if (fine.dim != coarse.dim) {
    w.reason = "ambient dimension mismatch";
    return w;
  }
  std::set<IntVec> fine_rays(fine.rays.begin(), fine.rays.end());
  for (const auto& r : coarse.rays)
    if (!fine_rays.count(r)) {
      w.reason = "coarse ray missing from fine fan";
      w.missing_ray = r;
      return w;
    }

  for (size_t fc = 0; fc < fine.maximal_cones.size(); ++fc) {
    const IntVec inner = cone_interior_point(fine, static_cast<int>(fc));
    int host = -1;
    for (size_t cc = 0; cc < coarse.maximal_cones.size(); ++cc)
      if (cone_contains(coarse, static_cast<int>(cc), inner)) {
        host = static_cast<int>(cc);
        break;
      }
    bool inside = host >= 0;
    if (inside)
      for (int i : fine.maximal_cones[fc])
        if (!cone_contains(coarse, host, fine.rays[i])) {
          inside = false;
          break;
        }
    if (!inside) {
      w.reason = "fine cone not contained in any coarse cone";
      w.offending_cone = static_cast<int>(fc);
      return w;
    }
    w.cone_map.emplace_back(static_cast<int>(fc), host);
  }
  w.refines = true;
  return w;
}

bool check_complete(const SimplicialFan& fan, int samples, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  for (int s = 0; s < samples; ++s) {
    IntVec v(fan.dim);
    bool zero = true;
    for (int i = 0; i < fan.dim; ++i) {
      v[i] = Int(static_cast<long>(eng() % 2001) - 1000);
      if (v[i] != 0) zero = false;
    }
    if (zero) v[0] = 1;
    int strict = 0, weak = 0;
    for (size_t c = 0; c < fan.maximal_cones.size(); ++c) {
      auto lambda = solve_simplicial_membership(
          cone_generators(fan, fan.maximal_cones[c]), to_rat_vec(v));
      if (!lambda) continue;
      ++weak;
      bool interior = true;
      for (const auto& l : *lambda)
        if (l == 0) interior = false;
      if (interior) ++strict;
    }
    if (weak < 1) return false;
    if (strict > 0 && weak != 1) return false;
  }
  return true;
}

}  // namespace pellspace
