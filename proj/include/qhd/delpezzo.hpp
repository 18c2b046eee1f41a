#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhd/metacyclic.hpp"
#include "qhd/poly.hpp"

namespace qhd {

/// Projective point whose coordinates are roots of unity or zero,
/// scaled so that the first nonzero coordinate is 1.
using RootPoint = std::vector<std::optional<UnitRoot>>;

RootPoint normalize_point(RootPoint v);
std::vector<Cyclotomic> to_cyclotomic(const RootPoint& v);
std::string point_to_string(const RootPoint& v);

/// X^plus - X^minus.
struct Binomial {
  Exponent plus, minus;
  MultiPoly to_poly() const;
  std::string to_string() const;
};

/// The nine quadrics cutting out the degree-6 del Pezzo surface in P^6.
const std::vector<Binomial>& delpezzo_quadrics();
/// X1 X3 - X2 X4 in P^3.
Binomial b4_quadric();
/// Quadrics of the ambient variety of a family (none for A4).
std::vector<Binomial> family_quadrics(Family f);

/// Exact vanishing test for a binomial at a root point.
bool vanishes(const Binomial& b, const RootPoint& v);
bool on_quadrics(const std::vector<Binomial>& q, const RootPoint& v);

/// All nine quadrics vanish; throws on the zero vector.
bool membership(const std::vector<Cyclotomic>& P);

/// [AB^2, A^2B, A^2C, AC^2, BC^2, B^2C, ABC] as polynomials in A, B, C.
std::vector<MultiPoly> parametrize();
/// [1, a, a^2 b, a^2 b^2, a b^2, b, a b] as polynomials in a, b.
std::vector<MultiPoly> chart_embed();
RootPoint chart_point(const UnitRoot& a, const UnitRoot& b);
std::vector<Cyclotomic> chart_point(const Cyclotomic& a, const Cyclotomic& b);

struct StabilityEntry {
  std::size_t image = 0;  // index of the generator it is sent to
  UnitRoot scalar;        // image = scalar * generator[image]
};

struct StabilityReport {
  bool stable = true;
  std::vector<StabilityEntry> entries;
  std::string witness;
};

/// Action of a monomial transform on coordinate functions:
/// X_i -> conj(c_i) X_{perm(i)}, the transpose inverse of a unitary monomial matrix.
StabilityReport ideal_stability(const MonomialTransform& t, const std::vector<Binomial>& gens);

std::int64_t adjunction_genus(const FamilyId& f);
/// Degree of the hyperplane bundle restricted to the curve.
std::int64_t hyperplane_degree(const FamilyId& f);

struct ConeInvariants {
  std::int64_t p_g = 0;
  std::int64_t Ksq = 0;
  std::int64_t chi_top = 0;
  std::int64_t q = 0;  // K_D = -(q+1) H restricted, as a multiple
};

ConeInvariants cone_invariants(const FamilyId& f);
std::int64_t euler_milnor(const ConeInvariants& ci);
/// p (chi(Z) - chi(D)) for the C4 curve.
std::int64_t euler_via_cyclic_cover(int p);

}  // namespace qhd
