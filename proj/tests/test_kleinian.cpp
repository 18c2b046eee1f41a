#include "doctest.h"

#include "qhd/delpezzo.hpp"
#include "qhd/kleinian.hpp"

using namespace qhd;

namespace {

Cyclotomic root(std::int64_t N, std::int64_t k) { return Cyclotomic::root_of_unity(N, k); }

// x + g x^{p+1} y + g^2 x^{2p} y^{p+1} + g^3 x^{2p-1} y^{2p} + g^4 x^{p-1} y^{2p-1} + g^5 y^{p-1}
MultiPoly printed_chart(int p) {
  MultiPoly f(2);
  const int ex[6][2] = {{1, 0}, {p + 1, 1}, {2 * p, p + 1}, {2 * p - 1, 2 * p}, {p - 1, 2 * p - 1}, {0, p - 1}};
  for (int k = 0; k < 6; ++k) f.add_term({ex[k][0], ex[k][1]}, root(6, k));
  return f;
}

}  // namespace

TEST_CASE("family polynomials") {
  auto a = family_polynomial({Family::A4, 2, 1});
  CHECK(a.degree == 6);
  CHECK(a.to_string() == "X1^5*X2 + γ*X2^5*X3 + γ^2*X3^5*X1");
  CHECK(family_gamma({Family::A4, 2, 1}).order() == 3);
  CHECK(family_gamma({Family::B4, 2, 1}).order() == 4);
  CHECK(family_gamma({Family::C4, 2, 1}) == UnitRoot(1, 6));
  CHECK(a.poly().is_homogeneous());
  auto c = family_polynomial({Family::C4, 2, 1});
  CHECK(c.nvars == 7);
  CHECK(c.to_string() == "X1*X2 + γ*X2*X3 + γ^2*X3*X4 + γ^3*X4*X5 + γ^4*X5*X6 + γ^5*X6*X1");
  auto b1 = family_polynomial({Family::B4, 1, 1});
  CHECK(b1.degree == 2);
  CHECK(b1.poly().total_degree() == 2);
}

TEST_CASE("invariance under the group") {
  for (int p = 1; p <= 6; ++p)
    for (Family f : {Family::A4, Family::B4, Family::C4})
      for (int l : {1, -1}) {
        FamilyId id{f, p, l};
        auto rep = check_invariance(family_polynomial(id), family_representation(id));
        CHECK(rep.invariant);
      }
  // Invariance under generators propagates to random words.
  FamilyId id{Family::C4, 4, 1};
  auto f = family_polynomial(id);
  auto rep = family_representation(id);
  for (int t = 0; t < 20; ++t) {
    GroupWord g{(7 * t + 3) % rep.params.m, (5 * t + 1) % rep.params.n};
    CHECK(invariance_under(f, rep.image(g)).invariant);
  }
}

TEST_CASE("mutated coefficient breaks invariance") {
  FamilyId id{Family::A4, 2, 1};
  auto f = family_polynomial(id);
  f.terms[1].second = f.terms[1].second.pow(2);
  auto rep = check_invariance(f, family_representation(id));
  CHECK_FALSE(rep.invariant);
  CHECK_FALSE(rep.T.invariant);
  CHECK_FALSE(rep.T.witness.empty());
  CHECK(rep.S.invariant);

  KleinPolynomial constant{id, 3, 0, {{{0, 0, 0}, UnitRoot()}}};
  CHECK(check_invariance(constant, family_representation(id)).invariant);
}

TEST_CASE("chart restriction") {
  for (int p = 1; p <= 6; ++p) {
    MultiPoly f = chart_restriction(family_polynomial({Family::C4, p, 1}));
    CHECK(f == printed_chart(p));
    if (p < 2) continue;
    MultiPoly fx0 = f.specialize(1, Cyclotomic());
    MultiPoly x(2);
    x.add_term({1, 0}, Cyclotomic(1L));
    CHECK(fx0 == x);
    MultiPoly f0y = f.specialize(0, Cyclotomic());
    MultiPoly g(2);
    g.add_term({0, p - 1}, root(6, 5));
    CHECK(f0y == g);
  }
}

TEST_CASE("points of the C4 curve") {
  for (int p = 2; p <= 8; ++p) {
    MultiPoly f = chart_restriction(family_polynomial({Family::C4, p, 1}));
    const Cyclotomic gamma = root(6, 1), omega = root(3, 1);
    auto q1 = smooth_at(f, 1L, 1L);
    CHECK(q1.smooth);
    CHECK(same_tangent(q1, 1L, gamma));
    auto o = smooth_at(f, 0L, 0L);
    CHECK(o.smooth);
    CHECK(o.fx == Cyclotomic(1L));
    auto q4 = smooth_at(f, -1L, -1L);
    CHECK(q4.on_curve);
    const long sg = p % 2 ? -1 : 1;
    CHECK(q4.fx == Cyclotomic(2L - 2 * p - 2L * p * sg) + gamma * Cyclotomic(sg * (2L * p - 2)));
    CHECK_FALSE(q4.fx.is_zero());
    if (p % 3 != 2) {
      auto q2 = smooth_at(f, omega, omega);
      CHECK(q2.smooth);
      CHECK(same_tangent(q2, 1L, gamma));
    }
  }
}

TEST_CASE("smoothness by resultants") {
  for (int p : {2, 3}) {
    auto r = torus_smoothness_check(p);
    CHECK(r.smooth);
  }
  CHECK_THROWS_AS(torus_smoothness_check(5, 4), CapacityError);

  MultiPoly cusp(2);
  cusp.add_term({0, 2}, Cyclotomic(1L));
  cusp.add_term({3, 0}, Cyclotomic(-1L));
  auto c = plane_curve_smoothness(cusp);
  CHECK_FALSE(c.smooth);
  REQUIRE(c.witness_point.has_value());
  CHECK(c.witness_point->first.is_zero());
  CHECK(c.witness_point->second.is_zero());

  // A node away from the origin: (x-1)^2 - (y-2)^2 (x + 3) ... use (y-2)^2 - (x-1)^2 (x+1).
  MultiPoly node(2);
  node.add_term({0, 2}, Cyclotomic(1L));
  node.add_term({0, 1}, Cyclotomic(-4L));
  node.add_term({0, 0}, Cyclotomic(4L));
  // -(x-1)^2 (x+1) = -(x^3 - x^2 - x + 1)
  node.add_term({3, 0}, Cyclotomic(-1L));
  node.add_term({2, 0}, Cyclotomic(1L));
  node.add_term({1, 0}, Cyclotomic(1L));
  node.add_term({0, 0}, Cyclotomic(-1L));
  auto n = plane_curve_smoothness(node);
  CHECK_FALSE(n.smooth);
  REQUIRE(n.witness_point.has_value());
  CHECK(n.witness_point->first == Cyclotomic(1L));
  CHECK(n.witness_point->second == Cyclotomic(2L));

  MultiPoly circle(2);
  circle.add_term({2, 0}, Cyclotomic(1L));
  circle.add_term({0, 2}, Cyclotomic(1L));
  circle.add_term({0, 0}, Cyclotomic(-1L));
  CHECK(plane_curve_smoothness(circle).smooth);
}

TEST_CASE("B4 points on the quadric and curve") {
  for (int p = 2; p <= 6; ++p) {
    FamilyId id{Family::B4, p, 1};
    MultiPoly f = family_polynomial(id).poly();
    for (int k = 0; k < 4; ++k) {
      RootPoint v;
      for (int i = 0; i < 4; ++i) v.push_back(UnitRoot(k * i, 4));
      bool on_q = vanishes(b4_quadric(), v);
      CHECK(on_q == (k % 2 == 0));
      if (on_q) CHECK(f.evaluate(to_cyclotomic(v)).is_zero());
    }
  }
}
