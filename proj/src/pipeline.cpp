#include "qhd/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qhd/kleinian.hpp"

namespace qhd {

std::int64_t riemann_hurwitz_genus(std::int64_t g_top, std::int64_t group_order,
                                   const std::vector<std::int64_t>& stab_orders) {
  if (group_order < 1) throw std::invalid_argument("riemann_hurwitz_genus: group order must be positive");
  if (g_top < 0) throw std::invalid_argument("riemann_hurwitz_genus: negative genus");
  Rational rhs = Rational(2 * g_top - 2, group_order);
  rhs.canonicalize();
  for (auto n : stab_orders) {
    if (n < 2) throw std::invalid_argument("riemann_hurwitz_genus: stabilizer orders must be >= 2");
    Rational t(n - 1, n);
    t.canonicalize();
    rhs -= t;
  }
  Rational h = (rhs + 2) / 2;
  if (h.get_den() != 1) throw InconsistencyError("riemann_hurwitz_genus: non-integral quotient genus " + to_string(h));
  if (h < 0) throw InconsistencyError("riemann_hurwitz_genus: negative quotient genus " + to_string(h));
  return h.get_num().get_si();
}

Perm4 parse_permutation(const std::string& s) {
  Perm4 p{0, 1, 2, 3};
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
  };
  skip();
  if (i == s.size()) throw std::invalid_argument("parse_permutation: empty input");
  std::array<bool, 4> used{};
  while (true) {
    skip();
    if (i == s.size()) break;
    if (s[i] != '(') throw std::invalid_argument("parse_permutation: expected '(' in \"" + s + "\"");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (i == s.size()) throw std::invalid_argument("parse_permutation: unbalanced parentheses");
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (s[i] < '1' || s[i] > '4') throw std::invalid_argument("parse_permutation: labels must be 1..4");
      int v = s[i] - '1';
      ++i;
      if (used[v]) throw std::invalid_argument("parse_permutation: repeated label");
      used[v] = true;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string permutation_to_string(const Perm4& p) {
  std::string out;
  std::array<bool, 4> done{};
  for (int i = 0; i < 4; ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    for (int j = i; !done[j]; j = p[j]) {
      if (j != i) out += " ";
      out += std::to_string(j + 1);
      done[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string format_rational_poly(const UniPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Cyclotomic& c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!c.is_rational()) throw std::invalid_argument("format_rational_poly: coefficient is not rational");
    Rational q = c.rational_part();
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    if (out.empty()) out += neg ? "−" : "";
    else out += neg ? " − " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0 || a != 1) out += to_string(a);
    out += mono;
  }
  return out;
}

namespace {

std::string ordinal(std::int64_t k) {
  std::string suf = "th";
  if (k % 100 < 11 || k % 100 > 13) {
    if (k % 10 == 1) suf = "st";
    if (k % 10 == 2) suf = "nd";
    if (k % 10 == 3) suf = "rd";
  }
  return std::to_string(k) + suf;
}

// A homogeneous point (x : y) with entries in Q[lambda].
using HPoint = std::array<UniPoly, 2>;
using HMatrix = std::array<std::array<UniPoly, 2>, 2>;

UniPoly det2(const HPoint& a, const HPoint& b) { return a[0] * b[1] - a[1] * b[0]; }

// Sends infinity, 0, 1 to a, b, c.
HMatrix frame(const HPoint& a, const HPoint& b, const HPoint& c) {
  UniPoly s = det2(c, b), t = det2(a, c);
  return {{{s * a[0], t * b[0]}, {s * a[1], t * b[1]}}};
}

HMatrix adjugate(const HMatrix& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

HMatrix mul(const HMatrix& a, const HMatrix& b) {
  HMatrix c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

HPoint hmap(const HMatrix& m, const HPoint& v) { return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]}; }

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> d;
  for (Integer k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  return d;
}

void push_unique(std::vector<Cyclotomic>& v, const Cyclotomic& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

std::vector<Cyclotomic> rational_roots(const UniPoly& f) {
  // Clear denominators, then test p/q with p | a0 and q | an.
  Integer L = 1;
  for (const auto& c : f.coeffs()) L = lcm(L, c.rational_part().get_den());
  std::vector<Integer> a;
  for (const auto& c : f.coeffs()) a.push_back(Rational(c.rational_part() * L).get_num());
  std::vector<Cyclotomic> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Cyclotomic(0L));
  for (const auto& num : divisors(a[low]))
    for (const auto& den : divisors(a.back()))
      for (int sgn : {1, -1}) {
        Rational q(num * sgn, den);
        q.canonicalize();
        if (f(Cyclotomic(q)).is_zero()) push_unique(roots, Cyclotomic(q));
      }
  return roots;
}

std::vector<Cyclotomic> anharmonic_orbit(const Cyclotomic& l) {
  std::vector<Cyclotomic> out;
  const Cyclotomic one(1L);
  push_unique(out, l);
  push_unique(out, one / l);
  push_unique(out, one - l);
  push_unique(out, one / (one - l));
  push_unique(out, l / (l - one));
  push_unique(out, (l - one) / l);
  return out;
}

std::string value_to_string(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.rational_part());
  UnitRoot u;
  if (c.as_unit_root(u)) return u.to_string();
  return c.to_string();
}

}  // namespace

CrossRatioResult cross_ratio_solutions(const Perm4& perm) {
  {
    std::array<bool, 4> hit{};
    for (int v : perm) {
      if (v < 0 || v > 3 || hit[v]) throw std::invalid_argument("cross_ratio_solutions: not a permutation");
      hit[v] = true;
    }
  }
  CrossRatioResult r;
  r.perm = perm;
  const UniPoly zero, one(Cyclotomic(1L)), lam = UniPoly::x();
  const std::array<HPoint, 4> pts{HPoint{zero, one}, HPoint{one, one}, HPoint{one, zero}, HPoint{lam, one}};
  HMatrix mz = frame(pts[0], pts[1], pts[2]);
  HMatrix mw = frame(pts[perm[0]], pts[perm[1]], pts[perm[2]]);
  HPoint img = hmap(mul(mw, adjugate(mz)), pts[3]);
  UniPoly cond = det2(img, pts[perm[3]]);
  if (cond.is_zero()) {
    r.all_admissible = true;
    return r;
  }
  // lambda = 0, 1 make two of the points coincide.
  const UniPoly lm1 = lam - one;
  while (cond(Cyclotomic(0L)).is_zero()) cond = cond / lam;
  while (cond(Cyclotomic(1L)).is_zero()) cond = cond / lm1;
  r.polynomial = cond.monic();
  if (r.polynomial.degree() == 0) return r;
  r.solutions = rational_roots(r.polynomial);
  for (std::int64_t k = 3; k <= 12; ++k)
    for (std::int64_t j = 1; j < k; ++j)
      if (gcd64(j, k) == 1) {
        Cyclotomic z = Cyclotomic::root_of_unity(k, j);
        if (r.polynomial(z).is_zero()) push_unique(r.solutions, z);
      }
  for (const auto& s : r.solutions)
    for (const auto& t : anharmonic_orbit(s)) push_unique(r.orbit, t);
  return r;
}

std::string CrossRatioResult::to_string() const {
  if (all_admissible) return "all λ admissible";
  std::string eq = format_rational_poly(polynomial) + " = 0";
  if (polynomial.degree() == 0) return eq + " (no admissible λ)";
  // A single cyclotomic polynomial.
  for (std::int64_t k = 3; k <= 12; ++k) {
    std::vector<Cyclotomic> c;
    for (const auto& x : cyclotomic_polynomial(k)) c.push_back(Cyclotomic(Rational(x)));
    if (UniPoly(c) == polynomial) return eq + " (primitive " + ordinal(k) + " roots)";
  }
  std::string sol;
  for (const auto& s : solutions) sol += (sol.empty() ? "" : ", ") + value_to_string(s);
  std::string out = eq + " (λ ∈ {" + sol + "}";
  if (orbit.size() > solutions.size()) {
    std::string o;
    for (const auto& s : orbit) o += (o.empty() ? "" : ", ") + value_to_string(s);
    out += "; up to relabelling {" + o + "}";
  }
  return out + ")";
}

NormalizerReport normalizer_symmetry(const FamilyId& f) {
  if (f.tag == Family::C4) throw std::invalid_argument("normalizer_symmetry: defined for A4 and B4 only");
  NormalizerReport rep;
  const Representation R = family_representation(f);
  const std::int64_t N = R.root_order();
  const int dim = R.dim();
  if (f.tag == Family::A4) {
    UnitRoot g = family_gamma(f);
    if (N % g.den() != 0) throw std::logic_error("normalizer_symmetry: gamma outside the representation field");
    std::int64_t e = g.num() * (N / g.den());
    rep.U = MonomialTransform::diagonal(N, {0, e, 2 * e});
  } else {
    if (N % 2 != 0) throw std::logic_error("normalizer_symmetry: -1 outside the representation field");
    rep.U = MonomialTransform::diagonal(N, {0, N / 2, 0, N / 2});
  }
  const MonomialTransform conj = rep.U * R.T * rep.U.inverse();
  const auto s = (conj * R.T.inverse()).scalar_exponent();
  if (!s) return rep;
  rep.scalar = UnitRoot(*s, N);
  const MonomialTransform target = MonomialTransform::scalar(N, dim, *s) * R.T;
  for (std::int64_t k = 0; k < R.params.n; ++k)
    if (R.T.pow(k) == target) {
      rep.t_power = k;
      break;
    }
  rep.conjugation_ok = rep.t_power.has_value() && (rep.U * R.S * rep.U.inverse()) == R.S;
  rep.identity = "U T U^-1 = " + (rep.scalar.is_one() ? std::string() : rep.scalar.to_string() + " ") + "T";
  if (rep.t_power) rep.identity += " = T^" + std::to_string(*rep.t_power);

  auto inv = invariance_under(family_polynomial(f), rep.U);
  rep.f_scalar = inv.scalar;
  rep.ambient_preserved = ideal_stability(rep.U, family_quadrics(f.tag)).stable;

  const auto orbits = isotropy_orbits(f);
  for (const auto& o : orbits) {
    RootPoint w = normalize_point(rep.U.apply(o.representative));
    int found = -1;
    for (std::size_t k = 0; k < orbits.size() && found < 0; ++k)
      if (std::find(orbits[k].points.begin(), orbits[k].points.end(), w) != orbits[k].points.end())
        found = static_cast<int>(k);
    if (found < 0) throw std::logic_error("normalizer_symmetry: image of a branch orbit is not a branch orbit");
    rep.orbit_permutation.push_back(found);
  }
  return rep;
}

std::string VerificationReport::status() const {
  if (verified) return "VERIFIED";
  return "FAILED(" + failed_stage + ": " + failure_reason + ")";
}

namespace {

std::vector<std::int64_t> expected_orders(const FamilyId& f, std::int64_t m) {
  std::vector<std::int64_t> tail;
  switch (f.tag) {
    case Family::A4:
      tail = {3, 3, 3};
      break;
    case Family::B4:
      tail = {4, 4, 2};
      break;
    case Family::C4:
      tail = {6, 3, 2};
      break;
  }
  if (m > 1) tail.insert(tail.begin(), m);
  return tail;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Every element of G fixing a point of the cone is a lift of an element of
// the point's stabilizer in G / <T^d>; none may act trivially on the line.
bool free_on_cone(Family fam, const Representation& R, std::string& witness) {
  ActionSpace amb{R, family_quadrics(fam), fam == Family::C4, std::nullopt};
  const auto& P = R.params;
  for (const auto& o : isotropy_orbits(amb))
    for (const auto& w : o.stabilizer)
      for (std::int64_t k = 0; k < P.n_prime; ++k) {
        GroupWord g = normalize({w.i, w.j + P.d * k}, P);
        if (g.is_identity()) continue;
        if (line_eigenvalue(R.image(g), o.representative).is_one()) {
          witness = g.to_string() + " fixes " + point_to_string(o.representative);
          return false;
        }
      }
  return true;
}

}  // namespace

VerificationReport verify_family(const FamilyId& f, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.family = f;
  bool failed = false;

  // A stage returns "" on success, or a failure reason.
  auto stage = [&](const std::string& name, const std::function<std::string()>& body) {
    if (failed) return;
    StageResult s;
    s.name = name;
    try {
      s.detail = body();
      s.skipped = s.detail.rfind("skipped", 0) == 0;
      s.passed = s.detail.empty() || s.skipped;
    } catch (const std::exception& e) {
      s.detail = e.what();
      s.passed = false;
    }
    if (!s.passed) {
      failed = true;
      rep.failed_stage = name;
      rep.failure_reason = s.detail;
    }
    rep.stages.push_back(std::move(s));
  };

  Representation R;
  ActionSpace space;
  std::vector<IsotropyOrbit> orbits;
  std::vector<OrbitLocalData> local;
  std::vector<CyclicQuotientType> arms;

  stage("params", [&]() -> std::string {
    if (f.p < 1) return "p must be >= 1";
    rep.params = family_params(f);
    rep.abelianization = abelianization_order(rep.params);
    rep.wolf = wolf_conditions(rep.params);
    rep.quotient_order = rep.params.m * rep.params.d;
    if (rep.abelianization != rep.params.n) return "abelianization order differs from n";
    if (f.tag != Family::C4 && f.p >= 2 && !rep.wolf.all()) return "Wolf conditions fail";
    if (f.tag == Family::C4 && !rep.wolf.all())
      rep.flags.push_back("C4: Wolf conditions fail (the representation is reducible); freeness is decided on the cone");
    return "";
  });

  stage("relations", [&]() -> std::string {
    R = family_representation(f);
    space = family_space(f);
    rep.relations = relations_hold(R);
    return rep.relations ? "" : "S^m = T^n = 1, T S T^-1 = S^r fail in the representation";
  });

  stage("freeness", [&]() -> std::string {
    std::string w;
    if (f.tag == Family::A4) {
      auto fr = free_off_origin(R);
      rep.free = fr.free;
      if (!fr.free) w = fr.witness->to_string() + " has a fixed vector";
    } else {
      if (f.tag == Family::C4 && !free_off_origin(R).free)
        rep.flags.push_back("C4: the action on C^7 is not free; it is free on the del Pezzo cone");
      rep.free = free_on_cone(f.tag, R, w);
    }
    return rep.free ? "" : "not free: " + w;
  });

  stage("invariance", [&]() -> std::string {
    auto inv = check_invariance(family_polynomial(f), R);
    rep.invariant = inv.invariant;
    if (!inv.invariant) return "f is not invariant: " + (inv.S.invariant ? inv.T.witness : inv.S.witness);
    for (const auto* g : {&R.S, &R.T}) {
      auto st = ideal_stability(*g, space.quadrics);
      if (!st.stable) return "ambient ideal not preserved: " + st.witness;
    }
    return "";
  });

  if (f.tag == Family::C4) stage("conjugacy", [&]() -> std::string {
      const MetacyclicParams gb = quotient_params(rep.params);
      bool three = f.p % 3 == 2;
      for (std::int64_t k : {2, 4}) {
        auto cls = conjugacy_class({0, k}, gb);
        for (std::int64_t i = 0; i < gb.m; ++i) {
          bool conj = std::binary_search(cls.begin(), cls.end(), normalize({i, k}, gb));
          bool expect = !three || i % 3 == 0;
          if (conj != expect) return "S^" + std::to_string(i) + " T^" + std::to_string(k) + " conjugacy differs";
        }
      }
      if (three)
        rep.flags.push_back(
            "C4: for k = 2, 4 mod 6, S^i T^k is conjugate to T^k iff 3 | i, otherwise to S T^k (the printed condition "
            "reads 3 | k)");
      return "";
    });

  stage("isotropy", [&]() -> std::string {
    orbits = isotropy_orbits(space);
    std::vector<std::int64_t> got;
    for (const auto& o : orbits) {
      if (o.orbit_size * o.stabilizer_order != rep.quotient_order) return "orbit-stabilizer fails";
      got.push_back(o.stabilizer_order);
    }
    auto want = expected_orders(f, rep.params.m);
    if (got != want) return "stabilizer orders (" + join(got) + "), expected (" + join(want) + ")";
    return "";
  });

  stage("smoothness", [&]() -> std::string {
    for (const auto& o : orbits) local.push_back(orbit_local_type(space, o));
    if (f.tag != Family::C4) return "";
    if (f.p > opt.max_smooth_p) {
      rep.flags.push_back("global smoothness check not run (capacity, p > " + std::to_string(opt.max_smooth_p) + ")");
      return "";
    }
    auto sm = torus_smoothness_check(f.p, opt.max_smooth_p);
    return sm.smooth ? "" : "singular chart point: " + sm.witness;
  });

  stage("local_types", [&]() -> std::string {
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      OrbitSummary s;
      s.representative = orbits[k].representative;
      s.generator = orbits[k].stabilizer_generator;
      s.stabilizer_order = orbits[k].stabilizer_order;
      s.orbit_size = orbits[k].orbit_size;
      s.curve = local[k].action.curve;
      s.normal = local[k].action.normal;
      s.type = local[k].type;
      if (s.type.n != s.stabilizer_order) return "type order differs from the stabilizer order";
      arms.push_back(s.type);
      rep.orbits.push_back(std::move(s));
    }
    return "";
  });

  stage("genus", [&]() -> std::string {
    rep.curve_genus = adjunction_genus(f);
    std::vector<std::int64_t> ords;
    for (const auto& o : orbits) ords.push_back(o.stabilizer_order);
    rep.quotient_genus = riemann_hurwitz_genus(rep.curve_genus, rep.quotient_order, ords);
    return *rep.quotient_genus == 0 ? "" : "quotient genus " + std::to_string(*rep.quotient_genus);
  });

  stage("central_weight", [&]() -> std::string {
    rep.n_squared = Integer(rep.params.n) * rep.params.n;
    rep.central_weight = solve_central_weight(arms, rep.n_squared);
    return "";
  });

  stage("graph", [&]() -> std::string {
    rep.graph = star_graph(*rep.central_weight, arms);
    rep.determinant = discriminant(*rep.graph);
    rep.graph_matches = graphs_isomorphic(*rep.graph, family_graph(f));
    if (rep.determinant != rep.n_squared) return "determinant " + rep.determinant.get_str() + " != n^2";
    if (!is_negative_definite(*rep.graph)) return "graph is not negative definite";
    return rep.graph_matches ? "" : "assembled graph differs from the family graph";
  });

  stage("euler", [&]() -> std::string {
    rep.cone = cone_invariants(f);
    rep.euler_milnor = euler_milnor(rep.cone);
    if (rep.euler_milnor != rep.params.order())
      return "Milnor fibre Euler characteristic " + std::to_string(rep.euler_milnor) + " != |G|";
    if (f.tag == Family::C4) {
      rep.euler_cover = euler_via_cyclic_cover(f.p);
      if (*rep.euler_cover != rep.euler_milnor) return "cyclic cover count " + std::to_string(*rep.euler_cover);
    }
    return "";
  });

  if (f.tag != Family::C4 && opt.cross_ratio) stage("cross_ratio", [&]() -> std::string {
      if (orbits.size() != 4) return "skipped (" + std::to_string(orbits.size()) + " branch points)";
      auto nz = normalizer_symmetry(f);
      if (!nz.conjugation_ok) return "conjugation identity fails";
      if (!nz.f_scalar || !nz.ambient_preserved) return "U does not preserve the curve";
      Perm4 perm;
      for (int k = 0; k < 4; ++k) perm[k] = nz.orbit_permutation[k];
      rep.cross_ratio = cross_ratio_solutions(perm);
      if (rep.cross_ratio->all_admissible || rep.cross_ratio->solutions.empty())
        return "the induced permutation does not constrain the cross ratio";
      return "";
    });

  if (f.tag == Family::A4 && f.p >= 2)
    rep.flags.push_back("A4: the Milnor fibres of the two variants are not compared (unverified remark)");
  rep.verified = !failed;
  return rep;
}

nlohmann::json report_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["family"] = family_name(r.family.tag);
  j["p"] = r.family.p;
  j["variant"] = r.family.variant;
  j["status"] = r.status();
  j["group"] = {{"m", r.params.m}, {"n", r.params.n}, {"r", r.params.r}, {"d", r.params.d},
                {"n_prime", r.params.n_prime}, {"order", r.params.order()}, {"abelianization", r.abelianization}};
  j["wolf"] = {{"n_factors", r.wolf.n_factors}, {"coprime", r.wolf.coprime}, {"order_d", r.wolf.order_d},
               {"primes_of_d", r.wolf.primes_of_d}, {"all", r.wolf.all()}};
  j["relations"] = r.relations;
  j["free"] = r.free;
  j["invariant"] = r.invariant;
  json orbits = json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"representative", point_to_string(o.representative)},
                      {"stabilizer_generator", o.generator.to_string()},
                      {"stabilizer_order", o.stabilizer_order},
                      {"orbit_size", o.orbit_size},
                      {"curve_eigenvalue", o.curve.to_string()},
                      {"normal_eigenvalue", o.normal.to_string()},
                      {"type", o.type.to_string()}});
  j["orbits"] = orbits;
  j["quotient_group_order"] = r.quotient_order;
  j["curve_genus"] = r.curve_genus;
  j["quotient_genus"] = r.quotient_genus ? json(*r.quotient_genus) : json(nullptr);
  j["central_weight"] = r.central_weight ? json(*r.central_weight) : json(nullptr);
  j["graph"] = r.graph ? r.graph->to_json() : json(nullptr);
  j["determinant"] = r.determinant.get_str();
  j["n_squared"] = r.n_squared.get_str();
  j["graph_matches_family"] = r.graph_matches;
  j["euler"] = {{"milnor", r.euler_milnor},
                {"group_order", r.params.order()},
                {"cover", r.euler_cover ? json(*r.euler_cover) : json(nullptr)},
                {"p_g", r.cone.p_g},
                {"K2", r.cone.Ksq},
                {"chi_top", r.cone.chi_top}};
  if (r.cross_ratio) {
    json sol = json::array();
    for (const auto& s : r.cross_ratio->solutions) sol.push_back(value_to_string(s));
    json orb = json::array();
    for (const auto& s : r.cross_ratio->orbit) orb.push_back(value_to_string(s));
    j["cross_ratio"] = {{"permutation", permutation_to_string(r.cross_ratio->perm)},
                        {"polynomial", format_rational_poly(r.cross_ratio->polynomial)},
                        {"description", r.cross_ratio->to_string()},
                        {"solutions", sol},
                        {"orbit", orb}};
  } else {
    j["cross_ratio"] = nullptr;
  }
  j["flags"] = r.flags;
  json stages = json::array();
  for (const auto& s : r.stages)
    stages.push_back({{"name", s.name}, {"passed", s.passed}, {"skipped", s.skipped}, {"detail", s.detail}});
  j["stages"] = stages;
  return j;
}

TwoSmoothingsReport two_smoothings_A4(int p, const VerifyOptions& opt) {
  if (p < 2) throw std::invalid_argument("two_smoothings_A4: p must be >= 2");
  TwoSmoothingsReport r;
  r.p = p;
  const FamilyId a{Family::A4, p, 1}, b{Family::A4, p, -1};
  const Representation ra = family_representation(a), rb = family_representation(b);
  r.same_presentation = ra.params.m == rb.params.m && ra.params.n == rb.params.n && ra.params.r == rb.params.r;
  r.characters_differ = !reps_equivalent(ra, rb);
  r.images_nonconjugate = !images_conjugate(ra.params.l, rb.params.l, ra.params);
  auto va = verify_family(a, opt), vb = verify_family(b, opt);
  r.both_verified = va.verified && vb.verified;
  r.graphs_identical = va.graph && vb.graph && graphs_isomorphic(*va.graph, *vb.graph);
  return r;
}

}  // namespace qhd
