#include "qhd/kleinian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qhd/delpezzo.hpp"

namespace qhd {

UnitRoot family_gamma(const FamilyId& f) {
  auto p = family_params(f);
  return UnitRoot(p.l * p.n_prime, p.n);
}

KleinPolynomial family_polynomial(const FamilyId& f) {
  auto p = family_params(f);
  KleinPolynomial k;
  k.family = f;
  const int d = static_cast<int>(p.d);
  k.nvars = f.tag == Family::C4 ? 7 : d;
  const int e = static_cast<int>(p.n_prime - 1);  // m - r when m > 1
  k.degree = e + 1;
  const UnitRoot gamma = family_gamma(f);
  for (int i = 0; i < d; ++i) {
    Exponent ex(k.nvars, 0);
    ex[i] += e;
    ex[(i + 1) % d] += 1;
    k.terms.push_back({ex, gamma.pow(i)});
  }
  return k;
}

MultiPoly KleinPolynomial::poly() const {
  MultiPoly f(nvars);
  for (const auto& [e, c] : terms) f.add_term(e, Cyclotomic::from(c));
  return f;
}

std::string KleinPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " + ";
    if (k == 1) os << "γ*";
    if (k > 1) os << "γ^" << k << "*";
    bool first = true;
    const std::size_t nv = terms[k].first.size();
    for (std::size_t t = 0; t < nv; ++t) {
      const std::size_t i = (k + t) % nv;
      int x = terms[k].first[i];
      if (!x) continue;
      os << (first ? "" : "*") << "X" << i + 1;
      if (x > 1) os << "^" << x;
      first = false;
    }
  }
  return os.str();
}

std::vector<std::pair<Exponent, UnitRoot>> dual_image(const std::vector<std::pair<Exponent, UnitRoot>>& terms,
                                                      const MonomialTransform& t) {
  std::vector<std::pair<Exponent, UnitRoot>> out;
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != t.dim()) throw std::invalid_argument("dual_image: dimension mismatch");
    Exponent ne(e.size(), 0);
    UnitRoot s = c;
    for (int i = 0; i < t.dim(); ++i) {
      if (!e[i]) continue;
      ne[t.perm()[i]] += e[i];
      s = s * t.coefficient(i).inverse().pow(e[i]);
    }
    out.push_back({ne, s});
  }
  return out;
}

GeneratorInvariance invariance_under(const KleinPolynomial& f, const MonomialTransform& t) {
  GeneratorInvariance r;
  std::map<Exponent, UnitRoot> orig(f.terms.begin(), f.terms.end());
  auto img = dual_image(f.terms, t);
  std::optional<UnitRoot> ratio;
  bool proportional = true;
  for (const auto& [e, c] : img) {
    auto it = orig.find(e);
    if (it == orig.end()) {
      proportional = false;
      if (r.witness.empty()) r.witness = "monomial " + MultiPoly::monomial(Cyclotomic(1L), e).to_string() +
                                         " appears in the image but not in f";
      continue;
    }
    UnitRoot q = c / it->second;
    if (!ratio) ratio = q;
    if (*ratio != q) {
      proportional = false;
      if (r.witness.empty())
        r.witness = "term " + MultiPoly::monomial(Cyclotomic(1L), e).to_string() + " scales by " + q.to_string() +
                    ", expected " + ratio->to_string();
    }
  }
  if (proportional && img.size() == orig.size()) r.scalar = ratio.value_or(UnitRoot());
  r.invariant = r.scalar && r.scalar->is_one();
  if (r.scalar && !r.invariant && r.witness.empty())
    r.witness = "f is multiplied by " + r.scalar->to_string();
  return r;
}

InvarianceReport check_invariance(const KleinPolynomial& f, const Representation& rep) {
  InvarianceReport r;
  r.S = invariance_under(f, rep.S);
  r.T = invariance_under(f, rep.T);
  r.invariant = r.S.invariant && r.T.invariant;
  return r;
}

MultiPoly chart_restriction(const KleinPolynomial& f) {
  if (f.family.tag != Family::C4) throw std::invalid_argument("chart_restriction: C4 only");
  return f.poly().substitute(chart_embed());
}

PointCheck smooth_at(const MultiPoly& f, const Cyclotomic& a, const Cyclotomic& b) {
  PointCheck pc;
  std::vector<Cyclotomic> pt{a, b};
  pc.on_curve = f.evaluate(pt).is_zero();
  pc.fx = f.derivative(0).evaluate(pt);
  pc.fy = f.derivative(1).evaluate(pt);
  pc.smooth = pc.on_curve && !(pc.fx.is_zero() && pc.fy.is_zero());
  if (pc.smooth)
    pc.tangent = "(" + pc.fx.to_string() + ")*(x - (" + a.to_string() + ")) + (" + pc.fy.to_string() + ")*(y - (" +
                 b.to_string() + ")) = 0";
  return pc;
}

bool same_tangent(const PointCheck& pc, const Cyclotomic& u, const Cyclotomic& v) {
  if (!pc.smooth) return false;
  return (pc.fx * v - pc.fy * u).is_zero();
}

namespace {

// Polynomial in y with coefficients in K[x]/(g), low degree first.
using YPoly = std::vector<UniPoly>;

UniPoly inverse_mod(const UniPoly& a, const UniPoly& g) {
  UniPoly r0 = g, r1 = a % g, s0, s1(Cyclotomic(1L));
  while (!r1.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    UniPoly s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0.degree() != 0) throw std::logic_error("inverse_mod: not invertible");
  return (s0 * UniPoly(r0.lead().inverse())) % g;
}

void reduce(YPoly& a, const UniPoly& g) {
  for (auto& c : a) c = c % g;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

struct Branch {
  UniPoly g;
  YPoly h;
};

// Either proves the leading coefficient of a is a unit mod g (returns true),
// or splits g into two coprime factors.
bool unit_lead(const YPoly& a, const UniPoly& g, UniPoly& g1, UniPoly& g2) {
  if (a.empty()) return true;
  UniPoly d = gcd(a.back(), g);
  if (d.degree() <= 0) return true;
  g1 = d;
  g2 = (g / d).monic();
  return false;
}

void gcd_split(const UniPoly& g, YPoly a, YPoly b, std::vector<Branch>& out) {
  reduce(a, g);
  reduce(b, g);
  for (;;) {
    UniPoly g1, g2;
    if (!unit_lead(b, g, g1, g2)) {
      gcd_split(g1, a, b, out);
      gcd_split(g2, a, b, out);
      return;
    }
    if (b.empty()) {
      if (!unit_lead(a, g, g1, g2)) {
        gcd_split(g1, a, {}, out);
        gcd_split(g2, a, {}, out);
        return;
      }
      out.push_back({g, a});
      return;
    }
    UniPoly inv = inverse_mod(b.back(), g);
    while (a.size() >= b.size()) {
      const std::size_t shift = a.size() - b.size();
      UniPoly c = (a.back() * inv) % g;
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = (a[k + shift] - c * b[k]) % g;
      a.pop_back();
      while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    std::swap(a, b);
  }
}

YPoly as_ypoly(const MultiPoly& f) {
  YPoly out;
  for (const auto& c : f.coefficients_in(1)) out.push_back(c.to_uni(0));
  return out;
}

}  // namespace

SmoothnessReport plane_curve_smoothness(const MultiPoly& f) {
  if (f.nvars() != 2) throw std::invalid_argument("plane_curve_smoothness: bivariate input required");
  if (f.degree_in(1) < 1) throw std::invalid_argument("plane_curve_smoothness: f must involve y");
  SmoothnessReport rep;
  MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  UniPoly r1 = fy.is_zero() ? UniPoly() : resultant(f, fy, 1);
  UniPoly r2 = fx.is_zero() ? UniPoly() : resultant(f, fx, 1);
  UniPoly g = gcd(r1, r2);
  rep.gcd_resultants = g;
  if (g.is_zero()) {
    rep.smooth = false;
    rep.witness = "resultants vanish identically (multiple component)";
    return rep;
  }
  if (g.degree() == 0) return rep;
  g = squarefree_part(g).monic();

  std::vector<Branch> first, final;
  gcd_split(g, as_ypoly(f), as_ypoly(fx), first);
  for (const auto& br : first) gcd_split(br.g, br.h, as_ypoly(fy), final);
  for (const auto& br : final) {
    if (br.h.size() < 2) continue;
    rep.smooth = false;
    std::ostringstream os;
    os << "x root of " << br.g.to_string("x") << ", y root of ";
    std::string s;
    for (std::size_t k = br.h.size(); k-- > 0;) {
      if (br.h[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + br.h[k].to_string("x") + ")*y^" + std::to_string(k);
    }
    os << s;
    rep.witness = os.str();
    if (br.g.degree() == 1 && br.h.size() == 2) {
      Cyclotomic x0 = -br.g.coeff(0) / br.g.lead();
      Cyclotomic a0 = br.h[0](x0), a1 = br.h[1](x0);
      rep.witness_point = std::make_pair(x0, -a0 / a1);
    }
    break;
  }
  return rep;
}

SmoothnessReport torus_smoothness_check(int p, int max_p) {
  if (p < 1) throw std::invalid_argument("torus_smoothness_check: p must be >= 1");
  if (p > max_p)
    throw CapacityError("smoothness check limited to p <= " + std::to_string(max_p) + " (set QHD_MAX_P to raise)");
  return plane_curve_smoothness(chart_restriction(family_polynomial({Family::C4, p, 1})));
}

}  // namespace qhd
