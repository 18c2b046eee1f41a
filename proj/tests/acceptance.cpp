// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "qhd/int_matrix.hpp"
#include "qhd/kleinian.hpp"
#include "qhd/pipeline.hpp"
#include "qhd/qhd_dim.hpp"

using namespace qhd;
namespace fs = std::filesystem;

namespace {

class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  int count() const { return count_; }

 private:
  std::string failure_;
  int count_ = 0;
};

std::string str(const std::string& s) { return s; }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const Integer& v) { return v.get_str(); }

std::vector<std::int64_t> stab_orders(const VerificationReport& r) {
  std::vector<std::int64_t> v;
  for (const auto& o : r.orbits) v.push_back(o.stabilizer_order);
  return v;
}

bool has(const std::vector<Cyclotomic>& v, const Cyclotomic& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Cyclotomic rat(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ResolutionGraph load(const std::string& name) {
  std::ifstream in(fs::path(QHD_DATA_DIR) / "graphs" / (name + ".json"));
  if (!in) throw std::runtime_error("missing data file " + name);
  return ResolutionGraph::from_json(nlohmann::json::parse(in));
}

void family_common(Check& c, const VerificationReport& r, const std::string& tag) {
  c(r.verified, tag + ": " + r.status());
  c(r.determinant == r.n_squared, tag + ": determinant " + str(r.determinant) + " != n^2");
  c(r.graph_matches, tag + ": assembled graph differs from the family graph");
  c(r.free, tag + ": action not free");
  c(r.invariant, tag + ": f not invariant");
}

// 1
void a4_family(Check& c) {
  for (int p = 2; p <= 6; ++p) {
    const std::string tag = "A4 p=" + std::to_string(p);
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_family({Family::A4, p, 1});
    c(seconds_since(t0) <= 10.0, tag + ": slower than 10 s");
    family_common(c, r, tag);
    const std::int64_t m = r.params.m;
    c(stab_orders(r) == std::vector<std::int64_t>{m, 3, 3, 3}, tag + ": stabilizer orders");
    c(r.determinant == Integer(9 * p) * (9 * p), tag + ": determinant");
    const std::int64_t a = 3 * p - 1;
    c(r.euler_milnor == 1 + a * a * a && 1 + a * a * a == 9 * p * (3 * p * p - 3 * p + 1) &&
          r.euler_milnor == r.params.order(),
      tag + ": Euler identity");
    c(r.cross_ratio && format_rational_poly(r.cross_ratio->polynomial) == "λ^2 − λ + 1", tag + ": cross ratio");
  }
  c(verify_family({Family::A4, 2, 1}).determinant == 324, "A4 p=2 determinant 324");
}

// 2
void b4_family(Check& c) {
  for (int p = 2; p <= 6; ++p) {
    const std::string tag = "B4 p=" + std::to_string(p);
    auto r = verify_family({Family::B4, p, 1});
    family_common(c, r, tag);
    c(stab_orders(r) == std::vector<std::int64_t>{r.params.m, 4, 4, 2}, tag + ": stabilizer orders");
    c(r.determinant == Integer(8 * p) * (8 * p), tag + ": determinant");
    c(r.euler_milnor == r.params.m * r.params.n, tag + ": Euler characteristic != mn");
    c(r.cross_ratio && r.cross_ratio->orbit.size() == 3 && has(r.cross_ratio->orbit, rat(2)) &&
          has(r.cross_ratio->orbit, rat(1, 2)) && has(r.cross_ratio->orbit, rat(-1)),
      tag + ": cross-ratio set");
  }
  auto r = verify_family({Family::B4, 2, 1});
  c(r.determinant == 256, "B4 p=2 determinant 256");
  c(r.euler_milnor == 12 * 14 - 72 - 16 && r.euler_milnor == 80, "B4 p=2 Euler characteristic 80");
}

// 3
void c4_family(Check& c) {
  for (int p = 2; p <= 6; ++p) {
    const std::string tag = "C4 p=" + std::to_string(p);
    auto r = verify_family({Family::C4, p, 1});
    family_common(c, r, tag);
    const std::int64_t m = r.params.m;
    c(stab_orders(r) == std::vector<std::int64_t>{m, 6, 3, 2}, tag + ": stabilizer orders");
    std::vector<CyclicQuotientType> types;
    for (const auto& o : r.orbits) types.push_back(o.type);
    c(types == std::vector<CyclicQuotientType>{make_quotient_type(m, m - p + 1), {6, 1}, {3, 1}, {2, 1}},
      tag + ": local types");
    c(r.quotient_genus && *r.quotient_genus == 0, tag + ": quotient genus");
    c(r.central_weight && *r.central_weight == 3, tag + ": central weight");
    c(r.determinant == Integer(6 * p) * (6 * p), tag + ": determinant");
    c(r.euler_milnor == 6 * p * (p * p - p + 1) && r.euler_cover && *r.euler_cover == r.euler_milnor,
      tag + ": Euler identities");
  }
  c(verify_family({Family::C4, 2, 1}).determinant == 144, "C4 p=2 determinant 144");
}

// 4
void torus_points(Check& c) {
  for (int p = 2; p <= 6; ++p) {
    const std::string tag = "p=" + std::to_string(p);
    const Representation R = family_representation({Family::C4, p, 1});
    const std::int64_t m = R.params.m;
    const TorusMonomialMap T = chart_action(R.T), S = chart_action(R.S);
    const TorusMonomialMap T2 = T * T, ST2 = S * T2, T3 = T2 * T;
    auto q1 = torus_fixed_points(T), q2 = torus_fixed_points(T2), q3 = torus_fixed_points(ST2),
         q4 = torus_fixed_points(T3);
    c(q1.size() == 1 && q2.size() == 3 && q3.size() == 3 && q4.size() == 4, tag + ": counts (1,3,3,4)");
    c(q1 == std::vector<ChartPoint>{{UnitRoot(), UnitRoot()}}, tag + ": T fixes (1,1)");
    std::set<ChartPoint> cube, signs;
    for (int k = 0; k < 3; ++k) cube.insert({UnitRoot(k, 3), UnitRoot(k, 3)});
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) signs.insert({UnitRoot(a, 2), UnitRoot(b, 2)});
    c(std::set<ChartPoint>(q2.begin(), q2.end()) == cube, tag + ": T^2 fixes (w,w), w^3 = 1");
    c(std::set<ChartPoint>(q4.begin(), q4.end()) == signs, tag + ": T^3 fixes (+-1,+-1)");
    for (const auto& pt : q3) c(ST2.apply(pt) == pt, tag + ": S T^2 fixed point");
    if (p % 3 == 2) {
      // Up to orbit identification: the printed point lies in the orbit of the isotropy points of S T^2.
      const std::int64_t s = (p - 2) / 3;
      auto orbits = isotropy_orbits(FamilyId{Family::C4, p, 1});
      const auto& pts = orbits[2].points;
      c(orbits[2].stabilizer_generator == GroupWord{1, 2}, tag + ": S T^2 stabilizer");
      for (int w = 1; w <= 2; ++w) {
        RootPoint printed = chart_point(UnitRoot(w, 3) * UnitRoot(-(s + 1), m), UnitRoot(w, 3) * UnitRoot(2 * s + 1, m));
        c(std::find(pts.begin(), pts.end(), printed) != pts.end(), tag + ": printed S T^2 point");
      }
      for (const auto& pt : q3)
        c(std::find(pts.begin(), pts.end(), chart_point(pt.first, pt.second)) != pts.end(),
          tag + ": S T^2 fixed points form one orbit");
    }
  }
  std::mt19937 rng(5);
  int tested = 0;
  while (tested < 300) {
    TorusMonomialMap m;
    for (auto& row : m.A)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 11) - 5;
    const std::int64_t det = (m.A[0][0] - 1) * (m.A[1][1] - 1) - m.A[0][1] * m.A[1][0];
    if (det == 0) continue;
    m.t1 = UnitRoot(static_cast<std::int64_t>(rng() % 42), 42);
    m.t2 = UnitRoot(static_cast<std::int64_t>(rng() % 18), 18);
    auto pts = torus_fixed_points(m);
    c(static_cast<std::int64_t>(pts.size()) == std::abs(det), "random map: count != |det(A - I)|");
    for (const auto& pt : pts) c(m.apply(pt) == pt, "random map: point not fixed");
    ++tested;
  }
}

// 5
void star_formula(Check& c) {
  std::vector<std::pair<std::string, ResolutionGraph>> graphs;
  const std::pair<Family, std::string> fams[] = {{Family::A4, "a4"}, {Family::B4, "b4"}, {Family::C4, "c4"}};
  for (const auto& [f, s] : fams) {
    graphs.emplace_back("log_canonical_" + s, load("log_canonical_" + s));
    for (int p = 1; p <= 6; ++p) graphs.emplace_back("family_" + s + "_p" + std::to_string(p), load("family_" + s + "_p" + std::to_string(p)));
    for (int p = 7; p <= 10; ++p) graphs.emplace_back(s + " p=" + std::to_string(p), family_graph({f, p, 1}));
  }
  for (const auto& [name, g] : graphs) {
    auto s = star_shape(g);
    c(s.has_value(), name + ": not a star");
    if (!s) continue;
    c(star_discriminant(s->d, s->arms) == Rational(discriminant(g)), name + ": star formula != determinant");
  }
  c(graphs.size() == 3 * 11, "expected 33 star graphs");
}

// 6
void isotropic_count(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto dg = discriminant_group(load("family_a4_p2"));
  c(dg.order() == 324, "discriminant group order");
  auto subs = enumerate_self_isotropic(dg, 18);
  c(subs.size() == 2, "isotropic subgroups of order 18: " + std::to_string(subs.size()));
  c(seconds_since(t0) <= 5.0, "enumeration slower than 5 s");
}

// 7
void two_components(Check& c) {
  for (int p : {2, 3}) {
    auto r = two_smoothings_A4(p);
    const std::string tag = "p=" + std::to_string(p);
    c(r.same_presentation, tag + ": presentations differ");
    c(r.characters_differ, tag + ": characters agree");
    c(r.images_nonconjugate, tag + ": images conjugate");
    c(r.both_verified && r.graphs_identical, tag + ": graphs");
    auto P = family_params({Family::A4, p, 1});
    c(gcd64(P.d, P.n_prime) == 3 && mod64(1 - (-1), 3) != 0, tag + ": congruence criterion");
  }
}

// 8
void smoothness(Check& c) {
  const Cyclotomic gamma = Cyclotomic::root_of_unity(6, 1), omega = Cyclotomic::root_of_unity(3, 1);
  for (int p : {2, 3}) {
    const std::string tag = "p=" + std::to_string(p);
    const FamilyId id{Family::C4, p, 1};
    auto sm = torus_smoothness_check(p);
    c(sm.smooth, tag + ": singular point " + sm.witness);
    MultiPoly f = chart_restriction(family_polynomial(id));
    MultiPoly x(2), g5(2);
    x.add_term({1, 0}, Cyclotomic(1L));
    g5.add_term({0, p - 1}, Cyclotomic::root_of_unity(6, 5));
    c(f.specialize(1, Cyclotomic()) == x, tag + ": f(x, 0) != x");
    c(f.specialize(0, Cyclotomic()) == g5, tag + ": f(0, y) != gamma^5 y^(p-1)");
    auto origin = smooth_at(f, 0L, 0L);
    const Cyclotomic fy0 = p == 2 ? Cyclotomic::root_of_unity(6, 5) : Cyclotomic();
    c(origin.smooth && origin.fx == Cyclotomic(1L) && origin.fy == fy0, tag + ": gradient at the origin");
    auto q1 = smooth_at(f, 1L, 1L);
    c(q1.smooth && same_tangent(q1, 1L, gamma), tag + ": tangent at (1,1)");
    if (p % 3 != 2) {
      auto q2 = smooth_at(f, omega, omega);
      c(q2.smooth && same_tangent(q2, 1L, gamma), tag + ": tangent at (w,w)");
    }
    auto q4 = smooth_at(f, -1L, -1L);
    c(q4.smooth, tag + ": (-1,-1) singular");
    auto sp = family_space(id);
    for (const auto& o : isotropy_orbits(sp)) {
      auto local = orbit_local_type(sp, o);
      c(local.action.tangent_dim == 2, tag + ": singular at " + point_to_string(o.representative));
    }
  }
}

// 9
void dimension_calculus(Check& c) {
  for (auto f : {Family::A4, Family::B4, Family::C4}) {
    for (int p = 2; p <= 10; ++p) c(sum_d_minus_3(family_graph({f, p, 1})) == 0, "family graph sum != 0");
    c(sum_d_minus_3(log_canonical_graph(f)) == 1, "log-canonical sum != 1");
  }
  for (int n = 1; n <= 12; ++n) {
    c(sum_d_minus_3(y_n_graph(n)) == 0, "Y_n sum != 0");
    c(exclusion_verdict(y_n_graph(n), true).verdict == Verdict::Excluded, "Y_n not excluded");
  }
  auto g = rational_nontaut_graph();
  c(sum_d_minus_3(g) == 0, "non-taut graph sum != 0");
  c(is_rational(g), "non-taut graph not rational");
  c(exclusion_verdict(g, false).verdict == Verdict::Inconclusive, "non-taut graph verdict");
}

// 10
void negative_controls(Check& c) {
  const FamilyId id{Family::A4, 2, 1};
  auto f = family_polynomial(id);
  f.terms[1].second = f.terms[1].second.pow(2);
  auto inv = check_invariance(f, family_representation(id));
  c(!inv.invariant && !(inv.S.witness + inv.T.witness).empty(), "mutated f still invariant or no witness");

  auto g = family_graph(id);
  c(qhd_screen(g).discriminant_square, "A4 p=2 discriminant not a square");
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto h = g;
    h.set_weight(static_cast<int>(v), g.vertices()[v].weight - 1);
    c(!qhd_screen(h).discriminant_square, "perturbed weight keeps a square discriminant");
  }

  MultiPoly cusp(2);
  cusp.add_term({0, 2}, Cyclotomic(1L));
  cusp.add_term({3, 0}, Cyclotomic(-1L));
  auto sm = plane_curve_smoothness(cusp);
  c(!sm.smooth && sm.witness_point && sm.witness_point->first.is_zero() && sm.witness_point->second.is_zero(),
    "cusp not detected at (0,0)");
}

// 11
void property_suites(Check& c) {
  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t q = 1; q < n; ++q)
      if (gcd64(n, q) == 1) c(hj_contract(hj_expand(n, q)) == CyclicQuotientType{n, q}, "HJ round trip");

  int groups = 0;
  for (auto f : {Family::A4, Family::B4, Family::C4})
    for (int p = 1;; ++p) {
      const MetacyclicParams P = family_params({f, p, 1});
      if (P.order() > 500) break;
      for (int l : {1, -1}) {
        auto rep = family_representation({f, p, l});
        std::vector<MonomialTransform> img;
        for (std::int64_t i = 0; i < P.m; ++i)
          for (std::int64_t j = 0; j < P.n; ++j) img.push_back(rep.image({i, j}));
        bool ok = true;
        for (std::int64_t a = 0; a < P.order() && ok; ++a)
          for (std::int64_t b = 0; b < P.order() && ok; ++b) {
            GroupWord w = word_multiply({a / P.n, a % P.n}, {b / P.n, b % P.n}, P);
            ok = img[w.i * P.n + w.j] == img[a] * img[b];
          }
        c(ok, "homomorphism fails for " + to_string(FamilyId{f, p, l}));
        ++groups;
      }
    }
  c(groups >= 6, "too few groups in the homomorphism suite");

  for (auto f : {Family::A4, Family::B4, Family::C4})
    for (int p = 1; p <= 6; ++p) {
      const FamilyId id{f, p, 1};
      const MetacyclicParams gb = quotient_params(family_params(id));
      for (const auto& o : isotropy_orbits(id)) {
        c(o.orbit_size * o.stabilizer_order == gb.m * gb.n, "orbit-stabilizer for " + to_string(id));
        c(std::set<RootPoint>(o.points.begin(), o.points.end()).size() == o.points.size(), "orbit repeats a point");
      }
    }

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (std::size_t n = 1; n <= 12; ++n)
    for (int t = 0; t < 4; ++t) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
      SmithForm s = smith_normal_form(m);
      Integer prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      Integer det = determinant(m);
      c(prod == abs(det), "SNF product != |det| for " + std::to_string(n) + "x" + std::to_string(n));
      c(s.U * m * s.V == s.D, "U M V != D");
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"A4 family verified for p = 2..6", a4_family},
      {"B4 family verified for p = 2..6", b4_family},
      {"C4 family verified for p = 2..6", c4_family},
      {"torus fixed points (1,3,3,4) and |det(A - I)|", torus_points},
      {"star formula equals the determinant on bundled stars", star_formula},
      {"two self-isotropic subgroups of order 18 for A4 p=2", isotropic_count},
      {"two non-conjugate A4 smoothings with identical graphs", two_components},
      {"C4 curve smoothness, boundary identities and tangents", smoothness},
      {"sum(d_i - 3) and exclusion verdicts", dimension_calculus},
      {"negative controls", negative_controls},
      {"property suites", property_suites},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t0));
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << (k + 1 < 10 ? " " : "") << k + 1 << "  " << criteria[k].first
              << "  (" << c.count() << " checks, " << buf << ")";
    if (!c.ok()) std::cout << "  -- " << c.failure();
    std::cout << "\n";
    failed += !c.ok();
  }
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              seconds_since(start));
  return failed == 0 ? 0 : 1;
}
