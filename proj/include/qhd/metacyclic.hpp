#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhd/cyclotomic.hpp"
#include "qhd/int_matrix.hpp"

namespace qhd {

/// Presentation <S, T | S^m = T^n = 1, T S T^-1 = S^r> together with the
/// dimension d of the monomial representation pi_{k,l} and n = n' d.
struct MetacyclicParams {
  std::int64_t m = 1, n = 1, r = 1, d = 1, n_prime = 1;
  std::int64_t k = 1, l = 1;

  std::int64_t order() const { return m * n; }
};

/// Throws std::invalid_argument unless r^n == 1 mod m, gcd(r, m) == 1 and n = n'd.
void validate(const MetacyclicParams& p);

struct WolfReport {
  bool n_factors = false;       // n = n'd
  bool coprime = false;         // gcd((r-1)n, m) = 1
  bool order_d = false;         // r has multiplicative order d mod m
  bool primes_of_d = false;     // every prime of d divides n'
  bool all() const { return n_factors && coprime && order_d && primes_of_d; }
};

WolfReport wolf_conditions(const MetacyclicParams& p);

/// Multiplicative order of r modulo m (1 when m == 1).
std::int64_t multiplicative_order(std::int64_t r, std::int64_t m);

/// The element S^i T^j.
struct GroupWord {
  std::int64_t i = 0, j = 0;
  auto operator<=>(const GroupWord&) const = default;
  bool is_identity() const { return i == 0 && j == 0; }
  std::string to_string() const;
};

GroupWord normalize(GroupWord g, const MetacyclicParams& p);
GroupWord word_multiply(const GroupWord& a, const GroupWord& b, const MetacyclicParams& p);
GroupWord word_inverse(const GroupWord& g, const MetacyclicParams& p);
GroupWord word_power(GroupWord g, std::int64_t e, const MetacyclicParams& p);
std::int64_t word_order(const GroupWord& g, const MetacyclicParams& p);

/// h g h^-1 through the product rule.
GroupWord conjugate(const GroupWord& g, const GroupWord& h, const MetacyclicParams& p);
/// (S^j T^l)(S^i T^k)(S^j T^l)^-1 = S^{i r^l - j (r^k - 1)} T^k.
GroupWord conjugate_closed_form(const GroupWord& g, const GroupWord& h, const MetacyclicParams& p);

std::vector<GroupWord> conjugacy_class(const GroupWord& g, const MetacyclicParams& p);
/// All classes, each sorted, listed by smallest member.
std::vector<std::vector<GroupWord>> conjugacy_classes(const MetacyclicParams& p);

/// Monomial matrix e_i -> zeta_N^{exps[i]} e_{perm[i]} (0-based indices).
class MonomialTransform {
 public:
  MonomialTransform() = default;
  MonomialTransform(std::int64_t N, std::vector<int> perm, std::vector<std::int64_t> exps);

  static MonomialTransform identity(std::int64_t N, int dim);
  static MonomialTransform diagonal(std::int64_t N, std::vector<std::int64_t> exps);
  static MonomialTransform scalar(std::int64_t N, int dim, std::int64_t e);

  std::int64_t root_order() const { return n_; }
  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::int64_t>& exps() const { return exps_; }
  UnitRoot coefficient(int i) const { return UnitRoot(exps_[i], n_); }

  /// (A * B)(v) = A(B(v)).
  MonomialTransform operator*(const MonomialTransform& o) const;
  MonomialTransform inverse() const;
  MonomialTransform pow(std::int64_t e) const;
  bool operator==(const MonomialTransform& o) const = default;

  bool is_identity() const;
  /// If the transform is a scalar matrix, its exponent.
  std::optional<std::int64_t> scalar_exponent() const;

  /// Image of a vector of coordinates.
  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;
  /// Image of a vector whose entries are roots of unity or zero.
  std::vector<std::optional<UnitRoot>> apply(const std::vector<std::optional<UnitRoot>>& v) const;

  /// Re-express over a multiple of the root order.
  MonomialTransform lift(std::int64_t M) const;

  Cyclotomic trace() const;
  std::string to_string() const;

 private:
  std::int64_t n_ = 1;
  std::vector<int> perm_;
  std::vector<std::int64_t> exps_;
};

/// A monomial representation given by the images of S and T.
struct Representation {
  MetacyclicParams params;
  MonomialTransform S, T;

  MonomialTransform image(const GroupWord& g) const;
  int dim() const { return S.dim(); }
  std::int64_t root_order() const { return S.root_order(); }
};

/// pi_{k,l}: S_k e_i = zeta^{k r^{i-1}} e_i, T_l e_i = eta^l e_{i-1}.
Representation pi_kl(const MetacyclicParams& p);

/// Checks S^m = T^n = 1 and T S T^-1 = S^r.
bool relations_hold(const Representation& rep);

enum class Family { A4, B4, C4 };

struct FamilyId {
  Family tag = Family::A4;
  int p = 1;
  int variant = 1;  // l = +1 or -1
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string to_string(const FamilyId& f);

MetacyclicParams family_params(const FamilyId& f);
/// The 3-, 4- or 7-dimensional representation of the family.
Representation family_representation(const FamilyId& f);

std::int64_t abelianization_order(const MetacyclicParams& p);

struct CharacterValue {
  GroupWord representative;
  std::size_t class_size = 0;
  Cyclotomic trace;
};

std::vector<CharacterValue> character_table_row(const Representation& rep);
/// Equal characters on every class; both representations must share m, n, r.
bool reps_equivalent(const Representation& a, const Representation& b);

/// Number of non-conjugate fixed-point-free images of G: phi(gcd(n', d)).
std::int64_t subgroup_count(const MetacyclicParams& p);
/// pi_{1,l} and pi_{1,l'} have conjugate images iff l = l' mod gcd(d, n').
bool images_conjugate(std::int64_t l, std::int64_t lp, const MetacyclicParams& p);

struct FreenessResult {
  bool free = true;
  std::optional<GroupWord> witness;
  std::vector<std::optional<UnitRoot>> fixed_vector;
};

/// Vectors fixed by a monomial transform: one per cycle whose exponent sum vanishes.
std::vector<std::vector<std::optional<UnitRoot>>> fixed_vectors(const MonomialTransform& t);

FreenessResult free_off_origin(const Representation& rep);

}  // namespace qhd
