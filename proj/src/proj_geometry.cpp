#include "qhd/proj_geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qhd/int_matrix.hpp"
#include "qhd/kleinian.hpp"

namespace qhd {

namespace {

bool angle_less(const UnitRoot& a, const UnitRoot& b) {
  return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
}

std::vector<std::vector<int>> cycles(const MonomialTransform& t) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(t.dim(), 0);
  for (int s = 0; s < t.dim(); ++s) {
    if (done[s]) continue;
    std::vector<int> c;
    for (int i = s; !done[i]; i = t.perm()[i]) {
      done[i] = 1;
      c.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Eigenspace> eigen_decompose(const MonomialTransform& t) {
  std::map<UnitRoot, std::vector<RootPoint>, bool (*)(const UnitRoot&, const UnitRoot&)> spaces(angle_less);
  const std::int64_t N = t.root_order();
  for (const auto& c : cycles(t)) {
    const std::int64_t L = static_cast<std::int64_t>(c.size());
    std::int64_t E = 0;
    for (int i : c) E += t.exps()[i];
    for (std::int64_t k = 0; k < L; ++k) {
      UnitRoot lambda(mod64(E, N) + k * N, N * L);
      RootPoint v(t.dim());
      UnitRoot x;
      for (int i : c) {
        v[i] = x;
        x = x * t.coefficient(i) / lambda;
      }
      spaces[lambda].push_back(std::move(v));
    }
  }
  std::vector<Eigenspace> out;
  for (auto& [l, b] : spaces) out.push_back({l, std::move(b)});
  return out;
}

std::vector<RootPoint> FixedLocus::points() const {
  std::vector<RootPoint> out;
  for (const auto& c : components)
    if (c.dim() == 1) out.push_back(normalize_point(c.basis[0]));
  return out;
}

FixedLocus projective_fixed_locus(const MonomialTransform& t) {
  FixedLocus f;
  if (t.scalar_exponent()) {
    f.whole_space = true;
    return f;
  }
  f.components = eigen_decompose(t);
  return f;
}

ChartPoint TorusMonomialMap::apply(const ChartPoint& p) const {
  return {t1 * p.first.pow(A[0][0]) * p.second.pow(A[0][1]), t2 * p.first.pow(A[1][0]) * p.second.pow(A[1][1])};
}

// (F o G)(x, y): monomial maps compose by multiplying exponent matrices.
TorusMonomialMap TorusMonomialMap::operator*(const TorusMonomialMap& o) const {
  TorusMonomialMap r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.A[i][j] = A[i][0] * o.A[0][j] + A[i][1] * o.A[1][j];
  r.t1 = t1 * o.t1.pow(A[0][0]) * o.t2.pow(A[0][1]);
  r.t2 = t2 * o.t1.pow(A[1][0]) * o.t2.pow(A[1][1]);
  return r;
}

bool TorusMonomialMap::is_identity() const {
  return A[0][0] == 1 && A[0][1] == 0 && A[1][0] == 0 && A[1][1] == 1 && t1.is_one() && t2.is_one();
}

std::string TorusMonomialMap::to_string() const {
  auto mono = [](const UnitRoot& t, std::int64_t a, std::int64_t b) {
    std::string s = t.is_one() ? "" : t.to_string() + "*";
    auto pw = [](const char* v, std::int64_t e) -> std::string {
      if (e == 0) return "";
      return std::string(v) + (e == 1 ? "" : "^" + std::to_string(e));
    };
    std::string body = pw("x", a);
    std::string yy = pw("y", b);
    if (!body.empty() && !yy.empty()) body += "*";
    body += yy;
    return s + (body.empty() ? "1" : body);
  };
  return "(x, y) -> (" + mono(t1, A[0][0], A[0][1]) + ", " + mono(t2, A[1][0], A[1][1]) + ")";
}

namespace {
const int kChartExp[7][2] = {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}, {1, 1}};
}

TorusMonomialMap chart_action(const MonomialTransform& t) {
  if (t.dim() != 7) throw std::invalid_argument("chart_action: 7-dimensional transform required");
  std::vector<int> inv(7);
  for (int i = 0; i < 7; ++i) inv[t.perm()[i]] = i;
  const int w = inv[0], u = inv[1], v = inv[5];
  TorusMonomialMap m;
  m.A = {{{kChartExp[u][0] - kChartExp[w][0], kChartExp[u][1] - kChartExp[w][1]},
          {kChartExp[v][0] - kChartExp[w][0], kChartExp[v][1] - kChartExp[w][1]}}};
  m.t1 = t.coefficient(u) / t.coefficient(w);
  m.t2 = t.coefficient(v) / t.coefficient(w);
  return m;
}

std::vector<ChartPoint> torus_fixed_points(const TorusMonomialMap& m) {
  IntMatrix B{{static_cast<long>(m.A[0][0] - 1), static_cast<long>(m.A[0][1])},
              {static_cast<long>(m.A[1][0]), static_cast<long>(m.A[1][1] - 1)}};
  if (determinant(B) == 0) throw DegenerateFixedLocus("torus_fixed_points: det(A - I) = 0");
  // a = e(alpha), b = e(beta): B (alpha, beta) = -(tau1, tau2) mod Z^2.
  auto snf = smith_normal_form(B);
  const Rational tau[2] = {make_rational(m.t1.num(), m.t1.den()), make_rational(m.t2.num(), m.t2.den())};
  Rational c[2];
  for (int i = 0; i < 2; ++i) c[i] = -(Rational(snf.U(i, 0)) * tau[0] + Rational(snf.U(i, 1)) * tau[1]);
  const Integer d0 = abs(snf.diagonal[0]), d1 = abs(snf.diagonal[1]);
  std::vector<ChartPoint> out;
  auto to_root = [](const Rational& q) {
    Integer num = q.get_num(), den = q.get_den();
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return UnitRoot(r.get_si(), den.get_si());
  };
  for (Integer k0 = 0; k0 < d0; ++k0)
    for (Integer k1 = 0; k1 < d1; ++k1) {
      Rational y0 = (c[0] + Rational(k0)) / Rational(d0), y1 = (c[1] + Rational(k1)) / Rational(d1);
      Rational alpha = Rational(snf.V(0, 0)) * y0 + Rational(snf.V(0, 1)) * y1;
      Rational beta = Rational(snf.V(1, 0)) * y0 + Rational(snf.V(1, 1)) * y1;
      alpha.canonicalize();
      beta.canonicalize();
      out.push_back({to_root(alpha), to_root(beta)});
    }
  for (const auto& p : out)
    if (m.apply(p) != p) throw std::logic_error("torus_fixed_points: solution is not fixed");
  std::sort(out.begin(), out.end(), [](const ChartPoint& a, const ChartPoint& b) {
    bool da = a.first == a.second, db = b.first == b.second;
    if (da != db) return da;
    if (a.first != b.first) return angle_less(a.first, b.first);
    return angle_less(a.second, b.second);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CyclicQuotientType make_quotient_type(std::int64_t n, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("quotient type: n must be positive");
  q = mod64(q, n);
  if (n == 1) return {1, 0};
  if (gcd64(q, n) != 1) throw std::invalid_argument("quotient type: gcd(q, n) != 1");
  return {n, q};
}

CyclicQuotientType local_quotient_type(const UnitRoot& eigen_on_curve, const UnitRoot& eigen_on_normal,
                                       std::int64_t order) {
  if (order < 1 || order % eigen_on_curve.order() || order % eigen_on_normal.order())
    throw std::invalid_argument("local_quotient_type: eigenvalue order does not divide the group order");
  if (eigen_on_curve.order() != order)
    throw NonGeneratingError("local_quotient_type: curve eigenvalue " + eigen_on_curve.to_string() +
                             " is not a primitive root of order " + std::to_string(order));
  for (std::int64_t q = 0; q < order; ++q)
    if (eigen_on_curve.pow(q) == eigen_on_normal) return make_quotient_type(order, q);
  throw std::logic_error("local_quotient_type: no exponent found");
}

MetacyclicParams quotient_params(const MetacyclicParams& p) {
  MetacyclicParams q = p;
  q.n = p.d;
  q.n_prime = 1;
  validate(q);
  return q;
}

ActionSpace family_space(const FamilyId& f) {
  return {family_representation(f), family_quadrics(f.tag), f.tag == Family::C4, family_polynomial(f).poly()};
}

UnitRoot line_eigenvalue(const MonomialTransform& g, const RootPoint& v) {
  RootPoint w = g.apply(v);
  std::optional<UnitRoot> lambda;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].has_value() != w[i].has_value()) throw std::invalid_argument("line_eigenvalue: point is not fixed");
    if (!v[i]) continue;
    UnitRoot q = *w[i] / *v[i];
    if (!lambda) lambda = q;
    if (*lambda != q) throw std::invalid_argument("line_eigenvalue: point is not fixed");
  }
  if (!lambda) throw std::invalid_argument("line_eigenvalue: zero vector");
  return *lambda;
}

namespace {

Cyclotomic eval_at(const MultiPoly& f, const RootPoint& v) {
  Cyclotomic s;
  for (const auto& [e, c] : f.terms()) {
    UnitRoot u;
    bool zero = false;
    for (std::size_t i = 0; i < e.size() && !zero; ++i) {
      if (!e[i]) continue;
      if (!v[i]) zero = true;
      else u = u * v[i]->pow(e[i]);
    }
    if (!zero) s += u.is_one() ? c : c * Cyclotomic::from(u);
  }
  return s;
}


// Points of a fixed line s u + t w (disjoint supports) on a binomial quadric.
std::vector<RootPoint> line_on_binomial(const RootPoint& u, const RootPoint& w, const Binomial& b) {
  // Each monomial restricts to coef * s^alpha t^beta, or to zero.
  struct Restricted {
    bool zero = false;
    UnitRoot c;
    int s = 0, t = 0;
  };
  auto restrict = [&](const Exponent& e) {
    Restricted r;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (u[i]) {
        r.c = r.c * u[i]->pow(e[i]);
        r.s += e[i];
      } else if (w[i]) {
        r.c = r.c * w[i]->pow(e[i]);
        r.t += e[i];
      } else {
        r.zero = true;
      }
    }
    return r;
  };
  Restricted a = restrict(b.plus), c = restrict(b.minus);
  auto combine = [&](const std::optional<UnitRoot>& s, const std::optional<UnitRoot>& t) {
    RootPoint v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] && s) v[i] = *u[i] * *s;
      if (w[i] && t) v[i] = *w[i] * *t;
    }
    return normalize_point(v);
  };
  const RootPoint at_u = combine(UnitRoot(), std::nullopt), at_w = combine(std::nullopt, UnitRoot());
  if (a.zero && c.zero) throw DegenerateFixedLocus("fixed line lies on the quadric");
  std::vector<RootPoint> out;
  if (a.zero || c.zero) {
    const Restricted& r = a.zero ? c : a;
    if (r.s > 0) out.push_back(at_w);
    if (r.t > 0) out.push_back(at_u);
    return out;
  }
  const int s0 = std::min(a.s, c.s), t0 = std::min(a.t, c.t);
  if (s0 > 0) out.push_back(at_w);
  if (t0 > 0) out.push_back(at_u);
  if (a.s == c.s) {
    if (a.c == c.c) throw DegenerateFixedLocus("fixed line lies on the quadric");
    return out;
  }
  // c1 s^k = c2 t^k with the s-power on one side only.
  const Restricted& hs = a.s > c.s ? a : c;
  const Restricted& ht = a.s > c.s ? c : a;
  const int k = hs.s - s0;
  UnitRoot ratio = ht.c / hs.c;
  for (int j = 0; j < k; ++j) out.push_back(combine(UnitRoot(ratio.num() + j * ratio.den(), ratio.den() * k), UnitRoot()));
  return out;
}

bool adjacent(int a, int b) { return (a + 1) % 6 == b || (b + 1) % 6 == a; }

// Fixed points of one transform on the ambient variety.
std::vector<RootPoint> fixed_points_on(const ActionSpace& sp, const MonomialTransform& M) {
  std::vector<RootPoint> out;
  if (sp.delpezzo) {
    auto eig = eigen_decompose(M);
    for (const auto& es : eig) {
      std::vector<int> singles;
      for (const auto& b : es.basis) {
        std::vector<int> supp;
        for (int i = 0; i < 7; ++i)
          if (b[i]) supp.push_back(i);
        if (supp.size() == 1 && supp[0] < 6) {
          singles.push_back(supp[0]);
          RootPoint e(7);
          e[supp[0]] = UnitRoot();
          out.push_back(e);
        }
        if (supp.size() == 2 && supp[1] < 6 && adjacent(supp[0], supp[1]))
          throw DegenerateFixedLocus("fixed points in the interior of a boundary line");
      }
      for (std::size_t x = 0; x < singles.size(); ++x)
        for (std::size_t y = x + 1; y < singles.size(); ++y)
          if (adjacent(singles[x], singles[y]))
            throw DegenerateFixedLocus("a boundary line is fixed pointwise");
    }
    TorusMonomialMap t = chart_action(M);
    const bool linear_identity = t.A[0][0] == 1 && t.A[0][1] == 0 && t.A[1][0] == 0 && t.A[1][1] == 1;
    if (linear_identity) {
      if (t.is_identity()) throw DegenerateFixedLocus("element acts trivially on the surface");
    } else {
      for (const auto& p : torus_fixed_points(t)) out.push_back(chart_point(p.first, p.second));
    }
    return out;
  }
  for (const auto& es : eigen_decompose(M)) {
    if (es.dim() == 1) {
      RootPoint v = normalize_point(es.basis[0]);
      if (on_quadrics(sp.quadrics, v)) out.push_back(v);
    } else if (es.dim() == 2 && sp.quadrics.size() == 1) {
      for (auto& v : line_on_binomial(es.basis[0], es.basis[1], sp.quadrics[0])) out.push_back(v);
    } else {
      throw DegenerateFixedLocus("positive-dimensional fixed locus of dimension " + std::to_string(es.dim() - 1));
    }
  }
  return out;
}

}  // namespace

std::vector<IsotropyOrbit> isotropy_orbits(const ActionSpace& sp) {
  const MetacyclicParams gb = quotient_params(sp.rep.params);
  const std::int64_t order = gb.m * gb.n;
  std::vector<MonomialTransform> elems;
  std::vector<GroupWord> words;
  for (std::int64_t j = 0; j < gb.n; ++j)
    for (std::int64_t i = 0; i < gb.m; ++i) {
      words.push_back({i, j});
      elems.push_back(sp.rep.image({i, j}));
    }

  std::vector<IsotropyOrbit> orbits;
  std::map<RootPoint, std::size_t> seen;
  for (const auto& cls : conjugacy_classes(gb)) {
    if (cls.front().is_identity()) continue;
    const auto& g = cls.front();
    MonomialTransform M = sp.rep.image(g);
    for (const RootPoint& cand : fixed_points_on(sp, M)) {
      RootPoint v = normalize_point(cand);
      if (normalize_point(M.apply(v)) != v) throw std::logic_error("isotropy: candidate not fixed");
      if (!on_quadrics(sp.quadrics, v)) throw std::logic_error("isotropy: candidate off the variety");
      if (seen.count(v)) continue;
      if (sp.curve && !eval_at(*sp.curve, v).is_zero()) continue;
      IsotropyOrbit o;
      o.representative = v;
      o.points.push_back(v);
      seen[v] = orbits.size();
      for (std::size_t k = 0; k < o.points.size(); ++k)
        for (const auto* gen : {&sp.rep.S, &sp.rep.T}) {
          RootPoint w = normalize_point(gen->apply(o.points[k]));
          if (seen.emplace(w, orbits.size()).second) o.points.push_back(w);
        }
      for (std::size_t e = 0; e < elems.size(); ++e)
        if (normalize_point(elems[e].apply(v)) == v) o.stabilizer.push_back(words[e]);
      o.stabilizer_order = static_cast<std::int64_t>(o.stabilizer.size());
      o.orbit_size = static_cast<std::int64_t>(o.points.size());
      if (o.orbit_size * o.stabilizer_order != order) throw std::logic_error("isotropy: orbit-stabilizer fails");
      bool found = false;
      for (const auto& h : o.stabilizer)  // words are listed with j major, i minor
        if (word_order(h, gb) == o.stabilizer_order) {
          o.stabilizer_generator = h;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("isotropy: stabilizer is not cyclic");
      orbits.push_back(std::move(o));
    }
  }
  auto is_coordinate_orbit = [](const IsotropyOrbit& o) {
    int nz = 0;
    for (const auto& x : o.representative) nz += x.has_value();
    return nz == 1;
  };
  std::stable_sort(orbits.begin(), orbits.end(), [&](const IsotropyOrbit& a, const IsotropyOrbit& b) {
    bool ca = is_coordinate_orbit(a), cb = is_coordinate_orbit(b);
    if (ca != cb) return ca;
    return a.stabilizer_order > b.stabilizer_order;
  });
  return orbits;
}

std::vector<IsotropyOrbit> isotropy_orbits(const FamilyId& f) { return isotropy_orbits(family_space(f)); }


TangentAction tangent_action(const MonomialTransform& g, const RootPoint& v, const std::vector<MultiPoly>& eqs,
                             std::int64_t n_prime) {
  TangentAction ta;
  ta.lambda = line_eigenvalue(g, v);
  ta.normal = ta.lambda.pow(n_prime);
  const int n = g.dim();
  std::vector<std::vector<Cyclotomic>> J;
  for (const auto& f : eqs) {
    if (!eval_at(f, v).is_zero()) throw std::invalid_argument("tangent_action: point is not on the cone");
    std::vector<Cyclotomic> row;
    for (int j = 0; j < n; ++j) row.push_back(eval_at(f.derivative(j), v));
    J.push_back(std::move(row));
  }
  auto K = nullspace(J, static_cast<std::size_t>(n));
  ta.tangent_dim = static_cast<int>(K.size());
  if (K.size() != 2) return ta;
  const auto vc = to_cyclotomic(v);
  auto parallel = [&](const std::vector<Cyclotomic>& w) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(w[i] * vc[j] - w[j] * vc[i]).is_zero()) return false;
    return true;
  };
  const auto& w = parallel(K[0]) ? K[1] : K[0];
  // h = (g / lambda) w
  std::vector<Cyclotomic> h(n);
  for (int i = 0; i < n; ++i) {
    if (w[i].is_zero()) continue;
    UnitRoot c = g.coefficient(i) / ta.lambda;
    h[g.perm()[i]] = c.is_one() ? w[i] : w[i] * Cyclotomic::from(c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Cyclotomic det = w[i] * vc[j] - w[j] * vc[i];
      if (det.is_zero()) continue;
      Cyclotomic mu = (h[i] * vc[j] - h[j] * vc[i]) / det;
      // h - mu w must be a multiple of v
      for (int k = 0; k < n; ++k) {
        Cyclotomic rk = h[k] - mu * w[k];
        for (int l = k + 1; l < n; ++l)
          if (!(rk * vc[l] - (h[l] - mu * w[l]) * vc[k]).is_zero())
            throw std::logic_error("tangent_action: tangent space not preserved");
      }
      if (!mu.as_unit_root(ta.curve)) throw std::logic_error("tangent_action: eigenvalue is not a root of unity");
      return ta;
    }
  throw std::logic_error("tangent_action: degenerate tangent vector");
}

OrbitLocalData orbit_local_type(const ActionSpace& sp, const IsotropyOrbit& o) {
  if (!sp.curve) throw std::invalid_argument("orbit_local_type: the space carries no curve");
  std::vector<MultiPoly> eqs{*sp.curve};
  for (const auto& b : sp.quadrics) eqs.push_back(b.to_poly());
  OrbitLocalData d;
  d.action = tangent_action(sp.rep.image(o.stabilizer_generator), o.representative, eqs, sp.rep.params.n_prime);
  if (d.action.tangent_dim != 2) throw std::logic_error("orbit_local_type: curve is singular at the representative");
  d.type = local_quotient_type(d.action.curve, d.action.normal, o.stabilizer_order);
  return d;
}

}  // namespace qhd
