#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "qhd/cyclotomic.hpp"
#include "qhd/int_matrix.hpp"
#include "qhd/poly.hpp"

using namespace qhd;

namespace {

Cyclotomic z(std::int64_t N, std::int64_t k) { return Cyclotomic::root_of_unity(N, k); }

Cyclotomic random_element(std::mt19937& rng, std::int64_t N) {
  std::uniform_int_distribution<int> coef(-5, 5);
  Cyclotomic a;
  for (std::int64_t k = 0; k < N; ++k) a += Cyclotomic(static_cast<long>(coef(rng))) * z(N, k);
  return a;
}

// Gcd of all k x k minors, by brute-force expansion.
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Integer g = 0;
  std::function<void(std::size_t, std::size_t)> pick_rows, pick_cols;
  pick_cols = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Integer d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols[depth] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  pick_rows = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows[depth] = r;
      pick_rows(r + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

MultiPoly xy(const Cyclotomic& c, int ex, int ey) { return MultiPoly::monomial(c, {ex, ey}); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(std::count(p105.begin(), p105.end(), Integer(-2)) == 2);
}

TEST_CASE("roots of unity") {
  CHECK(z(1, 0).is_one());
  CHECK((z(3, 1) + z(3, 2)) == Cyclotomic(-1L));
  Cyclotomic g = z(6, 1);
  CHECK((g * g - g + Cyclotomic(1L)).is_zero());
  CHECK((z(3, 1) + z(3, 2) + Cyclotomic(1L)).is_zero());
  CHECK(z(12, 2) == z(6, 1));
  CHECK(z(12, 2).order() == 6);
  CHECK(z(12, 6) == Cyclotomic(-1L));
  for (std::int64_t N : {5, 7, 9, 12, 18, 21}) {
    Cyclotomic w = z(N, 1);
    CHECK(w.pow(N).is_one());
    for (std::int64_t k = 1; k < N; ++k) CHECK_FALSE(w.pow(k).is_one());
    for (std::int64_t k = 0; k < N; ++k) CHECK(z(N, k).inverse() == z(N, N - k));
    Cyclotomic s;
    for (std::int64_t k = 0; k < N; ++k) s += z(N, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("mixed orders embed into the lcm") {
  Cyclotomic a = z(4, 1) + z(6, 1);
  CHECK(a.order() == 12);
  CHECK(a == z(12, 3) + z(12, 2));
  CHECK((z(4, 1) * z(6, 1)) == z(12, 5));
  CHECK(z(7, 3).embed(21) == z(7, 3));
}

TEST_CASE("unit root detection") {
  UnitRoot u;
  REQUIRE(z(12, 5).as_unit_root(u));
  CHECK(u == UnitRoot(5, 12));
  REQUIRE((-z(7, 2)).as_unit_root(u));
  CHECK(u == UnitRoot(2 * 2 + 7, 14));
  CHECK_FALSE((z(7, 1) + Cyclotomic(1L)).as_unit_root(u));
  CHECK_FALSE(Cyclotomic(2L).as_unit_root(u));
  CHECK(UnitRoot(3, 12) * UnitRoot(1, 4) == UnitRoot(1, 2));
  CHECK(UnitRoot(5, 6).pow(-1) == UnitRoot(1, 6));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(17);
  for (std::int64_t N : {5, 8, 9, 12, 15}) {
    for (int t = 0; t < 8; ++t) {
      Cyclotomic a = random_element(rng, N), b = random_element(rng, N), c = random_element(rng, N);
      CHECK((a + b) * (a + b) == a * a + Cyclotomic(2L) * a * b + b * b);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
}

TEST_CASE("univariate polynomials") {
  UniPoly x = UniPoly::x();
  UniPoly f = (x - UniPoly(Cyclotomic(1L))) * (x - UniPoly(Cyclotomic(2L))) * (x - UniPoly(Cyclotomic(2L)));
  UniPoly g = (x - UniPoly(Cyclotomic(2L))) * (x + UniPoly(Cyclotomic(5L)));
  CHECK(gcd(f, g) == x - UniPoly(Cyclotomic(2L)));
  CHECK(squarefree_part(f) == (x - UniPoly(Cyclotomic(1L))) * (x - UniPoly(Cyclotomic(2L))));
  UniPoly q, r;
  UniPoly::divmod(f, g, q, r);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());

  std::vector<Cyclotomic> xs, ys;
  for (long k = 0; k < 5; ++k) {
    xs.emplace_back(k);
    ys.push_back(f(Cyclotomic(k)));
  }
  CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("resultant conventions") {
  const int Y = 1;
  MultiPoly X = MultiPoly::variable(2, 0);
  MultiPoly Yv = MultiPoly::variable(2, 1);
  MultiPoly one = MultiPoly::constant(2, Cyclotomic(1L));

  // Res_y(y^2 - x, y - 1) = 1 - x: expand the 3x3 Sylvester matrix
  // [[1,0,-x],[1,-1,0],[0,1,-1]] along the first row.
  UniPoly r = resultant(Yv * Yv - X, Yv - one, Y);
  CHECK(r == UniPoly(std::vector<Cyclotomic>{Cyclotomic(1L), Cyclotomic(-1L)}));

  // Res(y - a, y - b) = a - b with f-rows first.
  Cyclotomic a = z(5, 1), b = Cyclotomic(3L);
  CHECK(resultant(Yv - MultiPoly::constant(2, a), Yv - MultiPoly::constant(2, b), Y) == UniPoly(a - b));

  // Res_y(f, c) = c^deg f
  MultiPoly f = Yv.pow(3) + X * Yv + one;
  CHECK(resultant(f, MultiPoly::constant(2, Cyclotomic(2L)), Y) == UniPoly(Cyclotomic(8L)));

  // Split polynomials: Res = prod (a_i - b_j) over the roots.
  MultiPoly f2 = (Yv - X) * (Yv - one);
  MultiPoly g2 = Yv - Cyclotomic(2L) * X;
  UniPoly expect = UniPoly(std::vector<Cyclotomic>{Cyclotomic(), Cyclotomic(-1L)}) *
                   UniPoly(std::vector<Cyclotomic>{Cyclotomic(1L), Cyclotomic(-2L)});
  CHECK(resultant(f2, g2, Y) == expect);

  CHECK_THROWS_AS(resultant(MultiPoly(2), g2, Y), std::invalid_argument);
}

TEST_CASE("resultant multiplicativity on random inputs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, 2);
  auto random_poly = [&]() {
    MultiPoly p(2);
    int dy = deg(rng);
    for (int ey = 0; ey <= dy; ++ey)
      for (int ex = 0; ex <= 2; ++ex) p += xy(Cyclotomic(static_cast<long>(coef(rng))) * z(3, ex + ey), ex, ey);
    p += xy(Cyclotomic(1L), 0, dy + 1);
    return p;
  };
  for (int t = 0; t < 6; ++t) {
    MultiPoly f = random_poly(), g = random_poly(), h = random_poly();
    CHECK(resultant(f * g, h, 1) == resultant(f, h, 1) * resultant(g, h, 1));
  }
}

TEST_CASE("multivariate polynomial basics") {
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), w = MultiPoly::variable(3, 2);
  MultiPoly f = x * y - w * w;
  CHECK(f.is_homogeneous());
  CHECK(f.derivative(2) == Cyclotomic(-2L) * w);
  CHECK(f.evaluate({Cyclotomic(2L), Cyclotomic(8L), Cyclotomic(4L)}).is_zero());
  // swap x and y, scale w by -1
  MultiPoly g = f.substitute_monomial({1, 0, 2}, {Cyclotomic(1L), Cyclotomic(1L), Cyclotomic(-1L)});
  CHECK(g == f);
  CHECK(f.substitute({y, x, w}) == f);
  CHECK((f - f).is_zero());
}

TEST_CASE("smith normal form") {
  auto check = [](const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal(s.D));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      else CHECK(s.diagonal[i + 1] == 0);
    }
    return s.diagonal;
  };
  CHECK(check(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(check(IntMatrix{{-2, 1}, {1, -2}}) == std::vector<Integer>{1, 3});
  SmithForm id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));
  CHECK(id.V == IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(check(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Integer>{2, 6, 12});
  CHECK(check(IntMatrix{{3, 0}, {1, 0}, {0, 18}}) == std::vector<Integer>{1, 18});
}

TEST_CASE("invariant factors match determinantal divisors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    Integer prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= s.diagonal[k - 1];
      CHECK(prod == minor_gcd(m, k));
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{-2, 1}, {1, -2}}) == 3);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(IntMatrix{{-4}}) == -4);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 12);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = static_cast<std::size_t>(dim(rng));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    Integer prod = 1;
    for (const auto& d : smith_normal_form(m).diagonal) prod *= d;
    CHECK(abs(determinant(m)) == prod);
  }
}

TEST_CASE("rational inverse") {
  IntMatrix m{{-2, 1}, {1, -2}};
  auto inv = rational_inverse(m);
  CHECK(inv[0][0] == Rational(-2, 3));
  CHECK(inv[0][1] == Rational(-1, 3));
  CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}
