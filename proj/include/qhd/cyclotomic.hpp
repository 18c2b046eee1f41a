#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qhd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den rational (gcd 1, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Non-negative residue of a mod n.
std::int64_t mod64(std::int64_t a, std::int64_t n);
std::int64_t powmod64(std::int64_t base, std::int64_t exp, std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// exp(2 pi i num/den), stored as a reduced fraction in [0, 1).
///
/// Roots of unity multiply by adding angles, so fixed-point and orbit
/// computations on monomial actions never need field arithmetic.
class UnitRoot {
 public:
  UnitRoot() = default;
  UnitRoot(std::int64_t num, std::int64_t den);

  /// zeta_N^k.
  static UnitRoot of(std::int64_t k, std::int64_t N) { return UnitRoot(k, N); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Multiplicative order.
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  UnitRoot operator*(const UnitRoot& o) const;
  UnitRoot operator/(const UnitRoot& o) const { return *this * o.inverse(); }
  UnitRoot inverse() const { return UnitRoot(-num_, den_); }
  UnitRoot pow(std::int64_t e) const;

  auto operator<=>(const UnitRoot&) const = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t N);

/// Exact element of Q(zeta_N), kept reduced modulo Phi_N so that equal
/// elements of the same order have identical coefficient vectors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)

  static Cyclotomic root_of_unity(std::int64_t N, std::int64_t k);
  static Cyclotomic from(const UnitRoot& u) { return root_of_unity(u.den(), u.num()); }

  std::int64_t order() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_part() const { return c_[0]; }

  /// Re-express in Q(zeta_M); requires order() | M.
  Cyclotomic embed(std::int64_t M) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// If this equals a root of unity, return it.
  bool as_unit_root(UnitRoot& out) const;

  /// Human-readable form, e.g. "2*ζ_12^3 - ζ_12 + 1/2".
  std::string to_string() const;

 private:
  Cyclotomic(std::int64_t N, std::vector<Rational> c);
  static std::vector<Rational> reduce(std::int64_t N, std::vector<Rational> a);

  std::int64_t n_ = 1;
  std::vector<Rational> c_;
};

}  // namespace qhd
