#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhd/errors.hpp"
#include "qhd/metacyclic.hpp"
#include "qhd/poly.hpp"

namespace qhd {

/// Sum of gamma^k X_k^{e} X_{k+1} over the cyclically ordered first d
/// coordinates, gamma = eta^{l n'}, e = m - r.
struct KleinPolynomial {
  FamilyId family;
  int nvars = 0;
  int degree = 0;
  std::vector<std::pair<Exponent, UnitRoot>> terms;

  MultiPoly poly() const;
  std::string to_string() const;
};

KleinPolynomial family_polynomial(const FamilyId& f);
/// gamma for the family: eta^{l n'}, of order 3, 4 or 6.
UnitRoot family_gamma(const FamilyId& f);

struct GeneratorInvariance {
  bool invariant = false;
  /// Set when the image is a scalar multiple of f.
  std::optional<UnitRoot> scalar;
  std::string witness;
};

struct InvarianceReport {
  bool invariant = false;
  GeneratorInvariance S, T;
};

/// Image under the dual action X_i -> conj(c_i) X_{perm(i)}.
std::vector<std::pair<Exponent, UnitRoot>> dual_image(const std::vector<std::pair<Exponent, UnitRoot>>& terms,
                                                      const MonomialTransform& t);
GeneratorInvariance invariance_under(const KleinPolynomial& f, const MonomialTransform& t);
InvarianceReport check_invariance(const KleinPolynomial& f, const Representation& rep);

/// f restricted to the chart (a, b) -> [1, a, a^2 b, a^2 b^2, a b^2, b, a b].
MultiPoly chart_restriction(const KleinPolynomial& f);

struct PointCheck {
  bool on_curve = false;
  bool smooth = false;
  Cyclotomic fx, fy;
  /// Tangent line fx (x - a) + fy (y - b) = 0 when smooth.
  std::string tangent;
};

PointCheck smooth_at(const MultiPoly& f, const Cyclotomic& a, const Cyclotomic& b);
/// Tangent lines u (x - a) + v (y - b) = 0 and fx (x - a) + fy (y - b) = 0 agree.
bool same_tangent(const PointCheck& pc, const Cyclotomic& u, const Cyclotomic& v);

struct SmoothnessReport {
  bool smooth = true;
  UniPoly gcd_resultants;
  /// A singular locus: x is a root of witness_x, y of witness_y over that root.
  std::string witness;
  std::optional<std::pair<Cyclotomic, Cyclotomic>> witness_point;
};

/// Decides whether f(x, y) = 0 has a singular point in the affine plane:
/// common x-roots of Res_y(f, f_x) and Res_y(f, f_y) are examined by a gcd
/// computation over the algebra K[x]/(g), splitting it whenever a zero
/// divisor appears.
SmoothnessReport plane_curve_smoothness(const MultiPoly& f);

/// The C4 chart curve for a given p; throws CapacityError when p > max_p.
SmoothnessReport torus_smoothness_check(int p, int max_p = 4);

}  // namespace qhd
