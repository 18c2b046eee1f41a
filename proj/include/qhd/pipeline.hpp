#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhd/delpezzo.hpp"
#include "qhd/metacyclic.hpp"
#include "qhd/poly.hpp"
#include "qhd/proj_geometry.hpp"
#include "qhd/resgraph.hpp"

namespace qhd {

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Genus of D / G from (2g - 2)/|G| - sum(1 - 1/n_i) = 2h - 2.
std::int64_t riemann_hurwitz_genus(std::int64_t g_top, std::int64_t group_order,
                                   const std::vector<std::int64_t>& stab_orders);

/// perm[i] = image of marked point i (0-based).
using Perm4 = std::array<int, 4>;

/// Cycle notation on the labels 1..4, e.g. "(2 3 4)" or "(1 2)(3 4)"; "()" is the identity.
Perm4 parse_permutation(const std::string& s);
std::string permutation_to_string(const Perm4& p);

struct CrossRatioResult {
  Perm4 perm{0, 1, 2, 3};
  bool all_admissible = false;
  /// Monic, with the degenerate factors lambda and lambda - 1 removed.
  UniPoly polynomial;
  std::vector<Cyclotomic> solutions;
  /// The solutions together with their images under relabelling of the four points.
  std::vector<Cyclotomic> orbit;
  std::string to_string() const;
};

/// With the points normalized to (0, 1, inf, lambda), the values of lambda for
/// which some Moebius map permutes them as given.
CrossRatioResult cross_ratio_solutions(const Perm4& perm);

std::string format_rational_poly(const UniPoly& f, const std::string& var = "λ");

struct NormalizerReport {
  MonomialTransform U;
  /// U T U^-1 = scalar * T, and the same element as a power of T when it is one.
  UnitRoot scalar;
  std::optional<std::int64_t> t_power;
  bool conjugation_ok = false;
  std::string identity;
  /// U f = (scalar) f, and U preserves the ambient quadrics.
  std::optional<UnitRoot> f_scalar;
  bool ambient_preserved = false;
  /// Induced permutation of the isotropy orbits (in isotropy_orbits order).
  std::vector<int> orbit_permutation;
};

/// The extra symmetry U = diag(1, gamma, gamma^2) (A4) or diag(1, -1, 1, -1) (B4).
NormalizerReport normalizer_symmetry(const FamilyId& f);

struct StageResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct OrbitSummary {
  RootPoint representative;
  GroupWord generator;
  std::int64_t stabilizer_order = 0;
  std::int64_t orbit_size = 0;
  UnitRoot curve, normal;
  CyclicQuotientType type;
};

struct VerifyOptions {
  int max_smooth_p = 4;
  bool cross_ratio = true;
};

struct VerificationReport {
  FamilyId family;
  MetacyclicParams params;
  std::int64_t abelianization = 0;
  WolfReport wolf;
  bool relations = false;
  bool free = false;
  bool invariant = false;
  std::vector<OrbitSummary> orbits;
  std::int64_t quotient_order = 0;
  std::int64_t curve_genus = 0;
  std::optional<std::int64_t> quotient_genus;
  std::optional<std::int64_t> central_weight;
  std::optional<ResolutionGraph> graph;
  Integer determinant;
  Integer n_squared;
  bool graph_matches = false;
  ConeInvariants cone;
  std::int64_t euler_milnor = 0;
  std::optional<std::int64_t> euler_cover;
  std::optional<CrossRatioResult> cross_ratio;
  std::vector<std::string> flags;
  std::vector<StageResult> stages;
  bool verified = false;
  std::string failed_stage, failure_reason;

  std::string status() const;
};

VerificationReport verify_family(const FamilyId& f, const VerifyOptions& opt = {});

inline constexpr int kReportSchemaVersion = 1;
nlohmann::json report_json(const VerificationReport& r);

struct TwoSmoothingsReport {
  int p = 0;
  bool same_presentation = false;
  bool characters_differ = false;
  bool images_nonconjugate = false;
  bool both_verified = false;
  bool graphs_identical = false;
  bool certified() const {
    return same_presentation && characters_differ && images_nonconjugate && both_verified && graphs_identical;
  }
};

TwoSmoothingsReport two_smoothings_A4(int p, const VerifyOptions& opt = {});

}  // namespace qhd
