#include "qhd/delpezzo.hpp"

#include <sstream>
#include <stdexcept>

namespace qhd {

RootPoint normalize_point(RootPoint v) {
  for (const auto& x : v)
    if (x) {
      UnitRoot s = x->inverse();
      for (auto& y : v)
        if (y) y = *y * s;
      return v;
    }
  throw std::invalid_argument("normalize_point: zero vector");
}

std::vector<Cyclotomic> to_cyclotomic(const RootPoint& v) {
  std::vector<Cyclotomic> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x ? Cyclotomic::from(*x) : Cyclotomic());
  return out;
}

std::string point_to_string(const RootPoint& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << (v[i] ? v[i]->to_string() : "0");
  os << "]";
  return os.str();
}

namespace {

Exponent ex7(std::initializer_list<int> idx) {
  Exponent e(7, 0);
  for (int i : idx) ++e[i - 1];
  return e;
}

std::string mono_string(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    s += "X" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::optional<UnitRoot> monomial_value(const Exponent& e, const RootPoint& v) {
  UnitRoot r;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!v[i]) return std::nullopt;
    r = r * v[i]->pow(e[i]);
  }
  return r;
}

}  // namespace

MultiPoly Binomial::to_poly() const {
  MultiPoly f(static_cast<int>(plus.size()));
  f.add_term(plus, Cyclotomic(1L));
  f.add_term(minus, Cyclotomic(-1L));
  return f;
}

std::string Binomial::to_string() const { return mono_string(plus) + " - " + mono_string(minus); }

const std::vector<Binomial>& delpezzo_quadrics() {
  static const std::vector<Binomial> q = {
      {ex7({1, 3}), ex7({2, 7})}, {ex7({4, 6}), ex7({5, 7})}, {ex7({1, 4}), ex7({7, 7})},
      {ex7({2, 4}), ex7({3, 7})}, {ex7({1, 5}), ex7({6, 7})}, {ex7({2, 5}), ex7({7, 7})},
      {ex7({3, 5}), ex7({4, 7})}, {ex7({2, 6}), ex7({1, 7})}, {ex7({3, 6}), ex7({7, 7})},
  };
  return q;
}

Binomial b4_quadric() { return {{1, 0, 1, 0}, {0, 1, 0, 1}}; }

std::vector<Binomial> family_quadrics(Family f) {
  switch (f) {
    case Family::A4: return {};
    case Family::B4: return {b4_quadric()};
    case Family::C4: return delpezzo_quadrics();
  }
  return {};
}

bool vanishes(const Binomial& b, const RootPoint& v) {
  if (v.size() != b.plus.size()) throw std::invalid_argument("vanishes: dimension mismatch");
  return monomial_value(b.plus, v) == monomial_value(b.minus, v);
}

bool on_quadrics(const std::vector<Binomial>& q, const RootPoint& v) {
  for (const auto& b : q)
    if (!vanishes(b, v)) return false;
  return true;
}

bool membership(const std::vector<Cyclotomic>& P) {
  if (P.size() != 7) throw std::invalid_argument("membership: expected 7 coordinates");
  bool zero = true;
  for (const auto& x : P) zero = zero && x.is_zero();
  if (zero) throw std::invalid_argument("membership: zero vector");
  for (const auto& b : delpezzo_quadrics())
    if (!b.to_poly().evaluate(P).is_zero()) return false;
  return true;
}

std::vector<MultiPoly> parametrize() {
  auto m = [](int a, int b, int c) { return MultiPoly::monomial(Cyclotomic(1L), {a, b, c}); };
  return {m(1, 2, 0), m(2, 1, 0), m(2, 0, 1), m(1, 0, 2), m(0, 1, 2), m(0, 2, 1), m(1, 1, 1)};
}

namespace {
const int kChart[7][2] = {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}, {1, 1}};
}

std::vector<MultiPoly> chart_embed() {
  std::vector<MultiPoly> out;
  for (const auto& e : kChart) out.push_back(MultiPoly::monomial(Cyclotomic(1L), {e[0], e[1]}));
  return out;
}

RootPoint chart_point(const UnitRoot& a, const UnitRoot& b) {
  RootPoint v;
  for (const auto& e : kChart) v.push_back(a.pow(e[0]) * b.pow(e[1]));
  return v;
}

std::vector<Cyclotomic> chart_point(const Cyclotomic& a, const Cyclotomic& b) {
  std::vector<Cyclotomic> v;
  for (const auto& e : kChart) v.push_back(a.pow(e[0]) * b.pow(e[1]));
  return v;
}

StabilityReport ideal_stability(const MonomialTransform& t, const std::vector<Binomial>& gens) {
  StabilityReport rep;
  auto image = [&](const Exponent& e, Exponent& out) {
    out.assign(e.size(), 0);
    UnitRoot s;
    for (int i = 0; i < t.dim(); ++i) {
      if (!e[i]) continue;
      out[t.perm()[i]] += e[i];
      s = s * t.coefficient(i).inverse().pow(e[i]);
    }
    return s;
  };
  for (const auto& g : gens) {
    if (static_cast<int>(g.plus.size()) != t.dim()) throw std::invalid_argument("ideal_stability: dimension");
    Exponent a, b;
    UnitRoot sa = image(g.plus, a), sb = image(g.minus, b);
    bool found = false;
    for (std::size_t k = 0; k < gens.size() && !found; ++k) {
      if (sa != sb) break;
      if (gens[k].plus == a && gens[k].minus == b) {
        rep.entries.push_back({k, sa});
        found = true;
      } else if (gens[k].plus == b && gens[k].minus == a) {
        rep.entries.push_back({k, sa * UnitRoot(1, 2)});
        found = true;
      }
    }
    if (!found) {
      rep.stable = false;
      if (rep.witness.empty())
        rep.witness = g.to_string() + " -> " + sa.to_string() + "*" + mono_string(a) + " - " + sb.to_string() +
                      "*" + mono_string(b);
    }
  }
  return rep;
}

std::int64_t adjunction_genus(const FamilyId& f) {
  const std::int64_t p = f.p;
  switch (f.tag) {
    case Family::A4: return (3 * p - 1) * (3 * p - 2) / 2;
    case Family::B4: return (2 * p - 1) * (2 * p - 1);
    case Family::C4: return 3 * p * (p - 1) + 1;
  }
  return 0;
}

std::int64_t hyperplane_degree(const FamilyId& f) {
  const std::int64_t p = f.p;
  switch (f.tag) {
    case Family::A4: return 3 * p;  // plane curve of degree 3p
    case Family::B4: return 4 * p;  // complete intersection of degrees 2 and 2p
    case Family::C4: return 6 * p;  // pH on a surface with H^2 = 6
  }
  return 0;
}

namespace {

// h^0(O_D(j)) below the degree at which the curve imposes conditions.
std::int64_t h0(Family f, std::int64_t j) {
  switch (f) {
    case Family::A4: return (j + 2) * (j + 1) / 2;  // plane, j < 3p
    case Family::B4: return (j + 1) * (j + 1);      // quadric surface, j < 2p
    case Family::C4: return 3 * j * j + 3 * j + 1;  // del Pezzo, j < p
  }
  return 0;
}

}  // namespace

ConeInvariants cone_invariants(const FamilyId& f) {
  const std::int64_t g = adjunction_genus(f), e = hyperplane_degree(f);
  ConeInvariants ci;
  ci.chi_top = 2 - 2 * g;
  if ((2 * g - 2 + e) % e) throw std::logic_error("cone_invariants: canonical multiple not integral");
  ci.q = -(2 * g - 2 + e) / e;
  ci.Ksq = -ci.q * ci.q * e;
  // K_D = (-q-1) H|_D; p_g = sum over k >= 0 of h^0(K_D - kH).
  for (std::int64_t j = 0; j <= -ci.q - 1; ++j) ci.p_g += h0(f.tag, j);
  return ci;
}

std::int64_t euler_milnor(const ConeInvariants& ci) { return 12 * ci.p_g + ci.Ksq + ci.chi_top; }

std::int64_t euler_via_cyclic_cover(int p) {
  const std::int64_t chi_Z = 6;  // P^2 blown up at three points
  const std::int64_t chi_D = 2 - 2 * adjunction_genus({Family::C4, p, 1});
  return p * (chi_Z - chi_D);
}

}  // namespace qhd
