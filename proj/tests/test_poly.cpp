#include <doctest.h>

#include "poly.hpp"
#include "test_util.hpp"

using namespace curvepi;
using namespace curvepi::exactpoly;
using curvepi_test::random_poly;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

SparsePolynomial pxy(const std::string& s) { return parse_polynomial(s, XY); }
SparsePolynomial pxyz(const std::string& s) { return parse_polynomial(s, XYZ); }

} // namespace

TEST_CASE("curve parameters are validated") {
  CHECK_NOTHROW(CurveParams(3, 1, 1));
  CHECK_NOTHROW(CurveParams(5, 1, 2));
  CHECK_NOTHROW(CurveParams(7, 2, 1));
  CHECK_THROWS_AS(CurveParams(4, 1, 1), Error); // even N
  CHECK_THROWS_AS(CurveParams(3, 1, 2), Error); // gcd(N, d) = 3
  CHECK_THROWS_AS(CurveParams(5, 2, 2), Error); // gcd(a, b) = 2
  CHECK_THROWS_AS(CurveParams(3, 0, 1), Error);
  CurveParams p(5, 1, 2);
  CHECK(p.m == 2);
  CHECK(p.d == 3);
}

TEST_CASE("build_curve matches the hand expansion for (3,1,1)") {
  SparsePolynomial f = build_curve(CurveParams(3, 1, 1));
  CHECK(f.total_degree() == 6);
  CHECK(f.is_homogeneous());
  // x^3 y^3 + (x^3 + y^3 + x y z)^2, expanded by hand
  SparsePolynomial expected(XYZ);
  expected.add_term({6, 0, 0}, 1);
  expected.add_term({0, 6, 0}, 1);
  expected.add_term({2, 2, 2}, 1);
  expected.add_term({3, 3, 0}, 3);
  expected.add_term({4, 1, 1}, 2);
  expected.add_term({1, 4, 1}, 2);
  CHECK(f == expected);
}

TEST_CASE("build_curve is homogeneous of degree dN") {
  for (auto [N, a, b] : {std::tuple{3, 1, 1}, {5, 1, 2}, {5, 2, 1}, {7, 1, 2}, {9, 1, 1}}) {
    CurveParams p(N, a, b);
    SparsePolynomial f = build_curve(p);
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == p.d * p.N);
  }
}

TEST_CASE("build_curve (5,1,2): coefficient of x^5 y^10 via multinomial oracle") {
  // independent expansion of (x^5 + y^5 + x^2 y^2 z)^3: pick i+j+k = 3 with
  // 5i + 2k = 5, 5j + 2k = 10, k = 0 -> (1,2,0), multinomial 3!/(1!2!0!) = 3;
  // the monomial x^{aN} y^{bN} adds 1.
  long long oracle = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      int k = 3 - i - j;
      if (5 * i + 2 * k == 5 && 5 * j + 2 * k == 10 && k == 0) {
        long long mult = 6; // 3! = 6
        for (int v : {i, j, k})
          for (int t = 2; t <= v; ++t) mult /= t;
        oracle += mult;
      }
    }
  oracle += 1;
  SparsePolynomial f = build_curve(CurveParams(5, 1, 2));
  CHECK(f.total_degree() == 15);
  CHECK(f.coefficient({5, 10, 0}) == Rational(oracle));
  CHECK(oracle == 4);
}

TEST_CASE("dehomogenize substitutes 1 in the chosen chart") {
  SparsePolynomial f = build_curve(CurveParams(3, 1, 1));
  SparsePolynomial affine = dehomogenize(f, 2);
  SparsePolynomial inner = pxy("x^3 + y^3 + x*y");
  CHECK(affine == pxy("x^3*y^3") + inner * inner);
  CHECK(dehomogenize(pxyz("x*z^2"), 2) == pxy("x"));
  CHECK_THROWS_AS(dehomogenize(f, 3), Error);
}

TEST_CASE("dehomogenize then homogenize is the identity when the chart variable misses p") {
  SparsePolynomial f = build_curve(CurveParams(3, 1, 1)); // z does not divide F
  SparsePolynomial back = homogenize(dehomogenize(f, 2), "z", 6, 2);
  CHECK(back == f);
}

TEST_CASE("blowup charts divide out exactly the multiplicity") {
  SparsePolynomial cusp = pxy("y^2 - x^3");
  BlowupResult a = blowup_chart(cusp, BlowupChart::A);
  CHECK(a.exceptional_multiplicity == 2);
  CHECK(a.strict == pxy("y^2 - x"));

  std::mt19937 rng(curvepi_test::test_seed());
  for (int t = 0; t < 20; ++t) {
    SparsePolynomial p = random_poly(rng, 2, 6, 6, /*through_origin=*/true);
    int mult = p.multiplicity();
    for (BlowupChart chart : {BlowupChart::A, BlowupChart::B}) {
      BlowupResult r = blowup_chart(p, chart);
      CHECK(r.exceptional_multiplicity == mult);
      // strict * exc^mult reproduces the substituted polynomial exactly
      SparsePolynomial substituted(p.variables());
      for (const auto& [e, c] : p.terms()) {
        int tdeg = e[0] + e[1];
        if (chart == BlowupChart::A)
          substituted.add_term({tdeg, e[1]}, c);
        else
          substituted.add_term({e[0], tdeg}, c);
      }
      int exc_index = chart == BlowupChart::A ? 0 : 1;
      std::vector<int> exc(2, 0);
      exc[exc_index] = mult;
      CHECK(r.strict * SparsePolynomial::monomial(p.variables(), exc) == substituted);
    }
  }
}

TEST_CASE("blow-up of the family at P produces the paper-shaped strict transform") {
  // chart with exceptional {y=0}: strict is x^{aN} y^d + (x^N y + y + x^m)^d
  for (auto [N, a, b] : {std::tuple{3, 1, 1}, {5, 1, 2}}) {
    CurveParams prm(N, a, b);
    SparsePolynomial affine = dehomogenize(build_curve(prm), 2);
    BlowupResult r = blowup_chart(affine, BlowupChart::B);
    CHECK(r.exceptional_multiplicity == (N - 1) * prm.d);
    SparsePolynomial first =
        SparsePolynomial::monomial(XY, {a * N, prm.d});
    SparsePolynomial inner(XY);
    inner.add_term({N, 1}, 1);
    inner.add_term({0, 1}, 1);
    inner.add_term({prm.m, 0}, 1);
    CHECK(r.strict == first + inner.pow(prm.d));
  }
}

TEST_CASE("shift turns the first blow-up equation into the shifted one") {
  for (auto [N, a, b] : {std::tuple{3, 1, 1}, {5, 1, 2}}) {
    CurveParams prm(N, a, b);
    int m = prm.m, d = prm.d;
    SparsePolynomial eq2 = SparsePolynomial::monomial(XY, {a * N, d});
    {
      SparsePolynomial inner(XY);
      inner.add_term({N, 1}, 1);
      inner.add_term({0, 1}, 1);
      inner.add_term({m, 0}, 1);
      eq2 = eq2 + inner.pow(d);
    }
    SparsePolynomial shifted = shift(eq2, 1, m);
    // x^{aN} (y - x^m)^d + (y + x^N y - x^{N+m})^d
    SparsePolynomial lhs(XY);
    {
      SparsePolynomial u(XY);
      u.add_term({0, 1}, 1);
      u.add_term({m, 0}, -1);
      lhs = SparsePolynomial::monomial(XY, {a * N, 0}) * u.pow(d);
      SparsePolynomial v(XY);
      v.add_term({0, 1}, 1);
      v.add_term({N, 1}, 1);
      v.add_term({N + m, 0}, -1);
      lhs = lhs + v.pow(d);
    }
    CHECK(shifted == lhs);
  }
}

TEST_CASE("shift by zero is the identity and shifts invert") {
  std::mt19937 rng(curvepi_test::test_seed() + 1);
  for (int t = 0; t < 25; ++t) {
    SparsePolynomial p = random_poly(rng, 2);
    CHECK(shift(p, 0, 3) == p);
    Rational c(rng() % 7 + 1, rng() % 3 + 1);
    int k = 1 + static_cast<int>(rng() % 4);
    CHECK(shift(shift(p, c, k), -c, k) == p);
  }
}

TEST_CASE("ring axioms hold exactly on random inputs") {
  std::mt19937 rng(curvepi_test::test_seed() + 2);
  for (int t = 0; t < 25; ++t) {
    SparsePolynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == SparsePolynomial(XY));
  }
}

TEST_CASE("degrees are additive and homogeneity is preserved by products") {
  std::mt19937 rng(curvepi_test::test_seed() + 3);
  for (int t = 0; t < 25; ++t) {
    SparsePolynomial p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    CHECK((p * q).multiplicity() == p.multiplicity() + q.multiplicity());
  }
  SparsePolynomial h1 = pxy("x^2 + 3*x*y"), h2 = pxy("x - y");
  CHECK((h1 * h2).is_homogeneous());
}

TEST_CASE("printer and parser are mutually inverse") {
  CHECK(to_string(pxy("y^2 - x^3")) == "y^2 - x^3"); // lex order: (0,2) before (3,0)
  CHECK(to_string(SparsePolynomial(XY)) == "0");
  CHECK(pxy(" 3/2 * x ^ 2 * y - 1 ") == pxy("3/2x^2y - 1"));
  std::mt19937 rng(curvepi_test::test_seed() + 4);
  for (int t = 0; t < 40; ++t) {
    SparsePolynomial p = random_poly(rng, (t % 2) ? 2 : 3);
    CHECK(parse_polynomial(to_string(p), p.variables()) == p);
  }
  CHECK_THROWS_AS(pxy("w + 1"), Error);
  CHECK_THROWS_AS(pxy(""), Error);
}

TEST_CASE("immutability: operations never mutate their inputs") {
  SparsePolynomial p = pxy("x + y");
  SparsePolynomial q = pxy("x - y");
  SparsePolynomial copy = p;
  (void)(p * q);
  (void)(p + q);
  (void)shift(p, 1, 2);
  (void)blowup_chart(p, BlowupChart::A);
  CHECK(p == copy);
}
