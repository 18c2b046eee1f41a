#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qhd/cyclotomic.hpp"
#include "qhd/errors.hpp"
#include "qhd/int_matrix.hpp"
#include "qhd/metacyclic.hpp"
#include "qhd/proj_geometry.hpp"

namespace qhd {

struct GraphVertex {
  int id = 0;
  std::int64_t weight = -1;  // self-intersection
  std::int64_t genus = 0;
};

class ResolutionGraph {
 public:
  /// Returns the new vertex's index; ids follow insertion order.
  int add_vertex(std::int64_t weight, std::int64_t genus = 0);
  void add_edge(int a, int b);
  /// Appends a chain with self-intersections -d for d in ds, the first one
  /// attached to `anchor` (if anchor >= 0). Returns the index of the last vertex.
  int add_chain(int anchor, const std::vector<std::int64_t>& ds);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> neighbors(int v) const;
  int valency(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_tree() const;
  void set_weight(int v, std::int64_t w) { vertices_.at(v).weight = w; }

  nlohmann::json to_json() const;
  static ResolutionGraph from_json(const nlohmann::json& j);

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// n/q = a1 - 1/(a2 - 1/(...)), all ai >= 2.
std::vector<std::int64_t> hj_expand(std::int64_t n, std::int64_t q);
CyclicQuotientType hj_contract(const std::vector<std::int64_t>& a);

IntMatrix intersection_matrix(const ResolutionGraph& g);
/// |det| of the intersection matrix.
Integer discriminant(const ResolutionGraph& g);
/// Leading principal minors of -M are all positive.
bool is_negative_definite(const ResolutionGraph& g);

/// n1...ns (d - sum qi/ni).
Rational star_discriminant(std::int64_t d, const std::vector<CyclicQuotientType>& arms);
/// Central vertex -d followed by the arm chains, each counted out from the center.
ResolutionGraph star_graph(std::int64_t d, const std::vector<CyclicQuotientType>& arms, std::int64_t central_genus = 0);

class NoIntegralSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StarShape {
  int center = 0;
  std::int64_t d = 0;
  std::vector<CyclicQuotientType> arms;  // in neighbor order
};

/// Reads a tree with at most one vertex of valency >= 3 as a star; arms are
/// contracted from the center outward. Empty for other shapes.
std::optional<StarShape> star_shape(const ResolutionGraph& g);

std::int64_t solve_central_weight(const std::vector<CyclicQuotientType>& arms, const Integer& target);

struct DiscriminantGroup {
  std::vector<Integer> factors;  // invariant factors > 1
  std::vector<std::vector<Integer>> generators;  // vertex-basis representatives
  std::vector<std::vector<Rational>> linking;  // in [0, 1)
  Integer order() const;
};

DiscriminantGroup discriminant_group(const ResolutionGraph& g);

/// -x^T M^{-1} y mod 1 for vertex-basis integer vectors.
Rational linking_pairing(const ResolutionGraph& g, const std::vector<Integer>& x, const std::vector<Integer>& y);

struct IsotropicSubgroup {
  /// Elements as coordinate vectors with respect to the group's generators.
  std::vector<std::vector<std::int64_t>> elements;
  std::vector<std::vector<std::int64_t>> generators;
};

/// All subgroups of the given order on which the linking pairing vanishes.
std::vector<IsotropicSubgroup> enumerate_self_isotropic(const DiscriminantGroup& dg, std::int64_t order,
                                                        std::int64_t max_group_order = 100000);

/// Laufer's algorithm from the given starting vertex.
std::vector<std::int64_t> fundamental_cycle(const ResolutionGraph& g, int start = 0);
/// chi(Z) = -(Z.Z + Z.K)/2.
Integer cycle_euler_characteristic(const ResolutionGraph& g, const std::vector<std::int64_t>& z);
bool is_rational(const ResolutionGraph& g);

struct CanonicalData {
  std::vector<Rational> K;  // K = sum K_i E_i
  Rational KK;
  std::int64_t sum_d_minus_3 = 0;
};

CanonicalData canonical_data(const ResolutionGraph& g);
std::int64_t sum_d_minus_3(const ResolutionGraph& g);

struct ScreenReport {
  bool negative_definite = false;
  Integer discriminant;
  bool discriminant_square = false;
  Rational KK;
  bool KK_integral = false;
  bool rational = false;
  std::int64_t sum_d_minus_3 = 0;

  bool passes() const { return negative_definite && discriminant_square && KK_integral && rational; }
};

ScreenReport qhd_screen(const ResolutionGraph& g);

/// Isomorphism-invariant encoding of a weighted tree.
std::string canonical_encoding(const ResolutionGraph& g);
bool graphs_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b);

/// Valency-4 family graph for p >= 2; for p = 1 the valency-3 star of the
/// first term of the corresponding log-canonical series.
ResolutionGraph family_graph(const FamilyId& f);
/// The three log-canonical stars (3,3,3), (2,4,4), (2,3,6).
ResolutionGraph log_canonical_graph(Family f);
/// H-shape: a node carrying leaves -a and -b, joined through left_chain
/// (which starts with that node) to a node of weight -e, which carries
/// top_chain and right_chain.
ResolutionGraph h_graph(std::int64_t a, std::int64_t b, std::int64_t e, const std::vector<std::int64_t>& left_chain,
                        const std::vector<std::int64_t>& right_chain, const std::vector<std::int64_t>& top_chain);
ResolutionGraph y_n_graph(int n);
/// A rational, non-taut H-shaped graph with sum(d_i - 3) = 0.
ResolutionGraph rational_nontaut_graph();

}  // namespace qhd
