#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhd/cyclotomic.hpp"

namespace qhd {

/// Dense univariate polynomial over a cyclotomic field, low degree first.
/// The coefficient vector never ends in a zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Cyclotomic> coeffs);
  UniPoly(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)

  /// c * x^k
  static UniPoly monomial(const Cyclotomic& c, int k);
  static UniPoly x() { return monomial(Cyclotomic(1L), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Cyclotomic>& coeffs() const { return c_; }
  Cyclotomic coeff(int k) const;
  Cyclotomic lead() const;

  Cyclotomic operator()(const Cyclotomic& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; b must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Cyclotomic> c_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);
/// Product of the distinct irreducible factors.
UniPoly squarefree_part(const UniPoly& f);

/// Newton interpolation through (xs[k], ys[k]) with distinct xs.
UniPoly interpolate(const std::vector<Cyclotomic>& xs, const std::vector<Cyclotomic>& ys);

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over a cyclotomic field.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Cyclotomic& c);
  /// The variable X_{index} (0-based).
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(const Cyclotomic& c, Exponent e);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Cyclotomic>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /// Coefficient of the monomial (zero if absent).
  Cyclotomic coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Cyclotomic& c);

  int degree_in(int var) const;
  int total_degree() const;
  bool is_homogeneous() const;

  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;
  MultiPoly derivative(int var) const;
  /// Replace every variable X_i by subs[i] (all in the same ring).
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  /// X_i -> scale[i] * X_{target[i]}; cheap for monomial linear maps.
  MultiPoly substitute_monomial(const std::vector<int>& target,
                                const std::vector<Cyclotomic>& scale) const;
  /// Fix variable var to a value, keeping the variable count.
  MultiPoly specialize(int var, const Cyclotomic& value) const;
  /// View as a univariate polynomial in var; requires every other variable absent.
  UniPoly to_uni(int var) const;
  /// Coefficients in var, each a polynomial in the remaining variables.
  std::vector<MultiPoly> coefficients_in(int var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Cyclotomic& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Cyclotomic& c) { return a *= c; }
  friend MultiPoly operator*(const Cyclotomic& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(int e) const;

  /// Variables named by names[i]; defaults to X1, X2, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Exponent, Cyclotomic> t_;
};

/// Sylvester resultant eliminating variable `var` of a bivariate pair; the
/// result is a polynomial in the other variable.
///
/// Convention: the Sylvester matrix lists the deg_g rows of f first, then
/// the deg_f rows of g, coefficients in descending powers. With this choice
/// Res(y - a, y - b) = a - b.
UniPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Determinant over a cyclotomic field by Gaussian elimination.
Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m);

/// Kernel basis of a matrix over a cyclotomic field.
std::vector<std::vector<Cyclotomic>> nullspace(std::vector<std::vector<Cyclotomic>> m,
                                               std::size_t ncols);

}  // namespace qhd
