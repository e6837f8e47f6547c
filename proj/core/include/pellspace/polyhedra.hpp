#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellspace/graph.hpp"
#include "pellspace/numeric.hpp"

namespace pellspace {

/// A lattice polytope stored as its Newton-polytope support; vertices are a
/// derived subset, filled in against a normal-fan candidate.
struct LatticePolytope {
  int dim = 0;
  std::vector<IntVec> support;
  std::vector<IntVec> vertices;
};

/// A complete simplicial fan: primitive ray generators plus maximal cones as
/// sorted ray-index sets (0-based).
struct SimplicialFan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> maximal_cones;
};

/// Flag complex of a simplicial fan: ground set = ray indices, faces = the
/// cliques of the compatibility graph.
struct FlagComplex {
  int ground = 0;
  std::vector<std::pair<int, int>> non_edges;
  Graph compatibility;
};

struct SimpleFacetsReport {
  int facet_count = 0;
  int vertex_count = 0;
  bool simple = false;
};

struct RefinementWitness {
  bool refines = false;
  std::string reason;
  std::optional<IntVec> missing_ray;      // coarse ray absent from fine
  std::optional<int> offending_cone;      // fine cone not inside any coarse cone
  std::vector<std::pair<int, int>> cone_map;  // fine cone -> containing coarse cone
};

/// Product fan: ambient dimension is the sum, rays are the embedded rays of
/// both factors, maximal cones all unions of one cone from each.
SimplicialFan fan_product(const SimplicialFan& a, const SimplicialFan& b);

/// Stellar subdivision at a primitive ray in the relative interior of a cone:
/// every maximal cone containing the ray splits by swapping the ray in for
/// one generator of its minimal containing face at a time.
/// Throws RayOnExistingRayError if the ray is already present.
SimplicialFan stellar_refine(const SimplicialFan& fan, const IntVec& ray);

/// Star of the cone spanned by the given ray indices: the projections of all
/// cones containing it to the quotient by its linear span (integer basis
/// completion chosen greedily from standard basis vectors).
/// Throws NotAConeError when the index set spans no cone.
SimplicialFan star(const SimplicialFan& fan, const std::vector<int>& tau);

/// Incompatibility data of a simplicial fan; verifies flagness and throws
/// NotFlagError with a witness clique if some clique spans no cone.
FlagComplex extract_flag_complex(const SimplicialFan& fan);

/// For each maximal cone, the unique support minimizer of the functional
/// given by the sum of the cone's ray generators; ties are retried with the
/// functional nudged toward individual generators (up to 3 retries) and
/// must resolve consistently. Throws AmbiguousVertexError otherwise.
std::vector<IntVec> vertices_from_fan(const std::vector<IntVec>& support,
                                      const SimplicialFan& fan);

SimpleFacetsReport check_simple_and_facets(const LatticePolytope& p, const SimplicialFan& fan);

/// true iff every coarse ray is a fine ray and every maximal fine cone lies
/// inside some maximal coarse cone (located by membership of its interior
/// point, certified generator-by-generator).
RefinementWitness is_refinement(const SimplicialFan& fine, const SimplicialFan& coarse);

/// true if the ray indices span a cone (a subset of some maximal cone).
bool spans_cone(const SimplicialFan& fan, const std::vector<int>& tau);

/// Membership of an integer vector in the cone at cone_index.
bool cone_contains(const SimplicialFan& fan, int cone_index, const IntVec& v);

/// Interior point of a simplicial cone: the sum of its primitive generators.
IntVec cone_interior_point(const SimplicialFan& fan, int cone_index);

/// Samples random integer directions and checks that each is covered by at
/// least one maximal cone, and by exactly one when it hits no boundary.
bool check_complete(const SimplicialFan& fan, int samples, std::uint64_t seed);

}  // namespace pellspace
