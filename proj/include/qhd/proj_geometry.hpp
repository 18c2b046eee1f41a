#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhd/delpezzo.hpp"
#include "qhd/metacyclic.hpp"
#include "qhd/poly.hpp"

namespace qhd {

struct Eigenspace {
  UnitRoot eigenvalue;
  /// Each basis vector is supported on a single permutation cycle.
  std::vector<RootPoint> basis;

  Cyclotomic value() const { return Cyclotomic::from(eigenvalue); }
  int dim() const { return static_cast<int>(basis.size()); }
};

std::vector<Eigenspace> eigen_decompose(const MonomialTransform& t);

struct FixedLocus {
  bool whole_space = false;
  /// Projectivized eigenspaces; dimension 1 entries are points.
  std::vector<Eigenspace> components;

  std::vector<RootPoint> points() const;
};

FixedLocus projective_fixed_locus(const MonomialTransform& t);

using ChartPoint = std::pair<UnitRoot, UnitRoot>;

/// (x, y) -> (t1 x^{a00} y^{a01}, t2 x^{a10} y^{a11}).
struct TorusMonomialMap {
  std::array<std::array<std::int64_t, 2>, 2> A{{{1, 0}, {0, 1}}};
  UnitRoot t1, t2;

  ChartPoint apply(const ChartPoint& p) const;
  TorusMonomialMap operator*(const TorusMonomialMap& o) const;
  std::int64_t det() const { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }
  bool is_identity() const;
  std::string to_string() const;
};

/// Induced map on the del Pezzo chart (a, b) -> [1, a, a^2 b, a^2 b^2, a b^2, b, a b]
/// of a 7-dimensional monomial transform preserving the surface.
TorusMonomialMap chart_action(const MonomialTransform& t);

class DegenerateFixedLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All |det(A - I)| fixed points on the torus, sorted diagonal points first.
std::vector<ChartPoint> torus_fixed_points(const TorusMonomialMap& m);

struct CyclicQuotientType {
  std::int64_t n = 1, q = 0;
  bool operator==(const CyclicQuotientType&) const = default;
  std::string to_string() const { return std::to_string(n) + "/" + std::to_string(q); }
};

CyclicQuotientType make_quotient_type(std::int64_t n, std::int64_t q);

class NonGeneratingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// order/q with eigen_on_normal = eigen_on_curve^q.
CyclicQuotientType local_quotient_type(const UnitRoot& eigen_on_curve, const UnitRoot& eigen_on_normal,
                                       std::int64_t order);

/// The quotient group G / <T^d>, presented as a metacyclic group with n = d.
MetacyclicParams quotient_params(const MetacyclicParams& p);

struct IsotropyOrbit {
  RootPoint representative;
  GroupWord stabilizer_generator;  // in the quotient group
  std::int64_t stabilizer_order = 1;
  std::int64_t orbit_size = 0;
  std::vector<RootPoint> points;
  std::vector<GroupWord> stabilizer;
};

/// Where the quotient group acts: the family's ambient space.
struct ActionSpace {
  Representation rep;
  std::vector<Binomial> quadrics;
  bool delpezzo = false;
  /// When set, only points on this hypersurface are kept.
  std::optional<MultiPoly> curve;
};

ActionSpace family_space(const FamilyId& f);

/// Points of the ambient variety with non-trivial isotropy, one entry per orbit:
/// the orbit of coordinate points first, the rest by decreasing stabilizer order.
std::vector<IsotropyOrbit> isotropy_orbits(const ActionSpace& space);
std::vector<IsotropyOrbit> isotropy_orbits(const FamilyId& f);

/// Eigenvalue of a lift g on the line over a fixed projective point.
UnitRoot line_eigenvalue(const MonomialTransform& g, const RootPoint& v);

struct TangentAction {
  UnitRoot lambda;   // g v = lambda v
  UnitRoot curve;    // action on the tangent line of the curve
  UnitRoot normal;   // lambda^{n'} on the quotient line bundle
  int tangent_dim = 0;
};

/// Action of a lift g of a stabilizer element at a point of the cone
/// cut out by the given equations (homogeneous, vanishing at v).
TangentAction tangent_action(const MonomialTransform& g, const RootPoint& v, const std::vector<MultiPoly>& eqs,
                             std::int64_t n_prime);

struct OrbitLocalData {
  TangentAction action;
  CyclicQuotientType type;
};

/// Local quotient type at an orbit representative on the curve, read off from
/// the stabilizer generator acting on the curve tangent and on the normal line.
OrbitLocalData orbit_local_type(const ActionSpace& space, const IsotropyOrbit& orbit);

}  // namespace qhd
