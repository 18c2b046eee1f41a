#include "qhd/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qhd {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

std::int64_t mod64(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t powmod64(std::int64_t base, std::int64_t exp, std::int64_t n) {
  if (n == 1) return 0;
  __int128 result = 1;
  __int128 b = mod64(base, n);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % n;
    b = (b * b) % n;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

UnitRoot::UnitRoot(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("UnitRoot: denominator must be positive");
  num = mod64(num, den);
  std::int64_t g = gcd64(num, den);
  if (g == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

UnitRoot UnitRoot::operator*(const UnitRoot& o) const {
  std::int64_t l = lcm64(den_, o.den_);
  return UnitRoot(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

UnitRoot UnitRoot::pow(std::int64_t e) const {
  __int128 k = static_cast<__int128>(num_) * mod64(e, den_);
  return UnitRoot(static_cast<std::int64_t>(k % den_), den_);
}

std::string UnitRoot::to_string() const {
  if (num_ == 0) return "1";
  if (den_ == 2) return "-1";
  std::string s = "ζ_" + std::to_string(den_);
  if (num_ != 1) s += "^" + std::to_string(num_);
  return s;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials with monic divisor.
IntPoly exact_div(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

struct PhiCache {
  std::mutex mu;
  std::map<std::int64_t, IntPoly> table;
  // Indices of nonzero coefficients below the leading one.
  std::map<std::int64_t, std::vector<std::size_t>> support;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

const IntPoly& phi_locked(PhiCache& cache, std::int64_t N) {
  auto it = cache.table.find(N);
  if (it != cache.table.end()) return it->second;
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  IntPoly num(static_cast<std::size_t>(N) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(N)] = 1;
  IntPoly den{1};
  for (std::int64_t d = 1; d < N; ++d) {
    if (N % d == 0) den = mul(den, phi_locked(cache, d));
  }
  IntPoly phi = exact_div(num, den);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j + 1 < phi.size(); ++j)
    if (phi[j] != 0) nz.push_back(j);
  cache.support[N] = std::move(nz);
  return cache.table[N] = std::move(phi);
}

struct PhiView {
  const IntPoly* poly;
  const std::vector<std::size_t>* support;
};

PhiView phi_view(std::int64_t N) {
  auto& cache = phi_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  const IntPoly& p = phi_locked(cache, N);
  return {&p, &cache.support[N]};
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient over Q[x]; b nonzero.
void divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  trim(a);
  const std::size_t db = b.size() - 1;
  q.assign(a.size() > db ? a.size() - db : 0, 0);
  Rational lead_inv = 1 / b.back();
  while (!a.empty() && a.size() > db) {
    std::size_t k = a.size() - 1;
    Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  // a - q*b
  RatPoly r = a;
  if (!q.empty() && !b.empty()) {
    if (r.size() < q.size() + b.size() - 1) r.resize(q.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    }
  }
  trim(r);
  return r;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  return *phi_view(N).poly;
}

Cyclotomic::Cyclotomic() : n_(1), c_(1, 0) {}
Cyclotomic::Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}
Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_(1, q) {}
Cyclotomic::Cyclotomic(std::int64_t N, std::vector<Rational> c) : n_(N), c_(std::move(c)) {}

std::vector<Rational> Cyclotomic::reduce(std::int64_t N, std::vector<Rational> a) {
  const std::size_t n = static_cast<std::size_t>(N);
  if (a.size() > n) {
    for (std::size_t k = n; k < a.size(); ++k)
      if (a[k] != 0) a[k % n] += a[k];
    a.resize(n);
  }
  PhiView phi = phi_view(N);
  const std::size_t deg = phi.poly->size() - 1;
  for (std::size_t k = a.size(); k-- > deg;) {
    if (a[k] == 0) continue;
    Rational c = a[k];
    a[k] = 0;
    for (std::size_t j : *phi.support) a[k - deg + j] -= c * (*phi.poly)[j];
  }
  a.resize(deg, 0);
  return a;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t N, std::int64_t k) {
  if (N < 1) throw std::invalid_argument("root_of_unity: N must be positive");
  k = mod64(k, N);
  std::int64_t g = gcd64(k, N);
  if (g == 0) g = N;
  N /= g;
  k /= g;
  if (N == 1) return Cyclotomic(1L);
  std::vector<Rational> a(static_cast<std::size_t>(k) + 1, 0);
  a[static_cast<std::size_t>(k)] = 1;
  return Cyclotomic(N, reduce(N, std::move(a)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

Cyclotomic Cyclotomic::embed(std::int64_t M) const {
  if (M == n_) return *this;
  if (M % n_ != 0) throw std::invalid_argument("Cyclotomic::embed: order does not divide target");
  const std::size_t step = static_cast<std::size_t>(M / n_);
  std::vector<Rational> a(step * (c_.size() - 1) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) a[i * step] = c_[i];
  return Cyclotomic(M, reduce(M, std::move(a)));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_ && o.is_rational()) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (o.n_ != n_) {
    std::int64_t L = lcm64(n_, o.n_);
    *this = embed(L);
    return *this += o.embed(L);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    if (o.is_rational()) {
      for (auto& x : c_) x *= o.c_[0];
      return *this;
    }
    if (is_rational()) {
      Rational s = c_[0];
      *this = o;
      for (auto& x : c_) x *= s;
      return *this;
    }
    std::int64_t L = lcm64(n_, o.n_);
    *this = embed(L);
    return *this *= o.embed(L);
  }
  if (n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce(n_, std::move(prod));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  std::int64_t L = lcm64(a.n_, b.n_);
  return a.embed(L).c_ == b.embed(L).c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in cyclotomic field");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid: s*a + t*Phi = 1, track only s.
  const IntPoly& phi_int = cyclotomic_polynomial(n_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = c_;
  trim(r1);
  RatPoly s0, s1{1};
  while (!(r1.size() == 1)) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: non-invertible element");
  }
  Rational scale = 1 / r1[0];
  for (auto& x : s1) x *= scale;
  return Cyclotomic(n_, reduce(n_, std::move(s1)));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Cyclotomic::as_unit_root(UnitRoot& out) const {
  if (is_zero()) return false;
  if (is_rational()) {
    if (c_[0] == 1) { out = UnitRoot(0, 1); return true; }
    if (c_[0] == -1) { out = UnitRoot(1, 2); return true; }
    return false;
  }
  // Roots of unity in Q(zeta_N) are +-zeta_N^j.
  Cyclotomic step = root_of_unity(n_, 1);
  Cyclotomic cur = Cyclotomic(1L).embed(n_);
  Cyclotomic neg = -*this;
  for (std::int64_t j = 0; j < n_; ++j) {
    if (cur == *this) { out = UnitRoot(j, n_); return true; }
    if (cur == neg) { out = UnitRoot(2 * j + n_, 2 * n_); return true; }
    cur *= step;
  }
  return false;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << qhd::to_string(a);
      continue;
    }
    if (a != 1) os << qhd::to_string(a) << "*";
    os << "ζ_" << n_;
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qhd
