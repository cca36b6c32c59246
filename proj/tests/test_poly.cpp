#include "doctest.h"

#include <random>

#include "waring/error.hpp"
#include "waring/poly.hpp"
#include "waring/random.hpp"

using namespace waring;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial(std::move(e)); }

// Apply a monomial operator by repeated partial differentiation.
HomogPoly differentiate(const HomogPoly &f, const Monomial &op) {
  HomogPoly g = f;
  for (unsigned i = 0; i < op.num_vars(); ++i)
    for (unsigned k = 0; k < op[i]; ++k)
      g = g.partial(i);
  return g;
}

} // namespace

TEST_CASE("parse a binary cubic") {
  const HomogPoly f = parse_poly("x0^2*x1 + 3*x1^3", 2);
  CHECK(f.degree() == 3);
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(mono({2, 1})) == 1);
  CHECK(f.coefficient(mono({0, 3})) == 3);
  CHECK(parse_poly("-1/6*x0^3", 2).coefficient(mono({3, 0})) == Rational(-1, 6));
  CHECK(parse_poly(" x0 *x1 - x1*x0 ", 2).is_zero());
  CHECK(parse_poly("2*x0*3", 1).coefficient(mono({1})) == 6);
  CHECK(parse_poly("5", 3).degree() == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_poly("x0 + x1^2", 2), doctest::Contains("homogeneous"), Error);
  CHECK_THROWS_AS(parse_poly("x0 x1", 2), Error);
  CHECK_THROWS_AS(parse_poly("x0^", 2), Error);
  CHECK_THROWS_AS(parse_poly("x2", 2), Error);
  CHECK_THROWS_AS(parse_poly("", 2), Error);
  CHECK_THROWS_AS(parse_poly("x0 +", 2), Error);
  CHECK_THROWS_AS(parse_poly("x0^1000", 1), Error);
  CHECK_THROWS_AS(parse_poly("1/0*x0", 1), Error);
  CHECK_THROWS_AS(parse_poly("y0", 1), Error);
  CHECK_THROWS_AS(parse_poly("x0", 0), Error);
  try {
    parse_poly("x0 + x1^2", 2);
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }
}

TEST_CASE("render round-trips through parse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 4, d = rng() % 5;
    HomogPoly f = random_form(rng, n, d, 5);
    f *= Rational(1, 1 + static_cast<long>(rng() % 6));
    const HomogPoly g = parse_poly(render(f), n);
    CHECK(g == f);
  }
  CHECK(render(parse_poly("-1/6*x0^3 + x1^3", 2)) == "-1/6*x0^3 + x1^3");
  CHECK(render(HomogPoly(2, 3)) == "0");
  CHECK(render(parse_poly("x1 + x0", 2), 'y') == "y0 + y1");
}

TEST_CASE("infer_num_vars") {
  CHECK(infer_num_vars("x0*x1^2") == 2);
  CHECK(infer_num_vars("x4^3") == 5);
  CHECK(infer_num_vars("7") == 1);
}

TEST_CASE("monomial basis is graded lex descending") {
  const auto basis = monomial_basis(3, 2);
  REQUIRE(basis.size() == 6);
  const std::vector<std::vector<unsigned>> want{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                                {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(basis[i].exponents() == want[i]);
  CHECK(space_dim(5, 4) == 70);
  CHECK(space_dim(3, 0) == 1);
  const MonomialIndex idx(3, 2);
  CHECK(idx.at(mono({0, 1, 1})) == 4);
  CHECK_THROWS_AS(idx.at(mono({1, 1, 1})), Error);
}

TEST_CASE("coefficient vectors round-trip") {
  std::mt19937_64 rng(8);
  const HomogPoly f = random_form(rng, 3, 3, 9);
  const QVector v = coefficient_vector(f);
  CHECK(v.size() == 10);
  CHECK(from_coefficients(3, 3, v) == f);
  CHECK_THROWS_AS(from_coefficients(3, 3, QVector(4)), Error);
}

TEST_CASE("polynomial ring operations") {
  const HomogPoly a = parse_poly("x0 + x1", 2), b = parse_poly("x0 - x1", 2);
  CHECK(a * b == parse_poly("x0^2 - x1^2", 2));
  CHECK(a + b == parse_poly("2*x0", 2));
  CHECK((a - a).is_zero());
  CHECK(parse_poly("x0^2*x1", 2).partial(0) == parse_poly("2*x0*x1", 2));
  CHECK(parse_poly("x0^2", 2).partial(1).is_zero());
  const QVector pt{2, 3};
  CHECK((a * b).evaluate(pt) == -5);
  CHECK_THROWS_AS(a + parse_poly("x0^2", 2), Error);
  CHECK_THROWS_AS(a + parse_poly("x0", 3), Error);
  HomogPoly z(2, 0);
  z += a;
  CHECK(z == a);
}

TEST_CASE("power_linear") {
  CHECK(power_linear(LinearForm({1, 1}), 3) == parse_poly("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 2));
  CHECK(power_linear(LinearForm({0, 1}), 5) == parse_poly("x1^5", 2));
  CHECK_THROWS_AS(LinearForm({0, 0}), Error);

  // (ax+by+cz)^2 has coefficients a^2, 2ab, 2ac, b^2, 2bc, c^2
  const HomogPoly sq = power_linear(LinearForm({2, 3, 5}), 2);
  CHECK(coefficient_vector(sq) == QVector{4, 12, 20, 9, 30, 25});

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + rng() % 4, d = 1 + rng() % 6;
    QVector l(n), p(n);
    for (unsigned i = 0; i < n; ++i) {
      l[i] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
      l[i].canonicalize();
      p[i] = static_cast<long>(rng() % 7) - 3;
    }
    l[0] = 1;
    Rational lp = 0;
    for (unsigned i = 0; i < n; ++i)
      lp += l[i] * p[i];
    Rational want = 1;
    for (unsigned k = 0; k < d; ++k)
      want *= lp;
    CHECK(power_linear(LinearForm(l), d).evaluate(p) == want);
  }
}

TEST_CASE("apolar pairing on monomials gives factorials") {
  for (unsigned d = 0; d <= 5; ++d)
    for (const Monomial &a : monomial_basis(3, d))
      for (const Monomial &b : monomial_basis(3, d)) {
        const HomogPoly got = apolar_apply(HomogPoly::from_monomial(b), HomogPoly::from_monomial(a));
        Rational want = 0;
        if (a == b) {
          want = 1;
          for (unsigned e : a.exponents())
            want *= factorial(e);
        }
        CHECK(got.coefficient(Monomial::one(3)) == want);
      }
}

TEST_CASE("apolar action examples") {
  CHECK(apolar_apply(parse_poly("x0^2", 2), parse_poly("x0*x1^2", 2)).is_zero());
  CHECK(apolar_apply(parse_poly("x0*x1^2", 2), parse_poly("x0*x1^2", 2)) == HomogPoly::constant(2, 2));
  const HomogPoly low = apolar_apply(parse_poly("x0^3", 2), parse_poly("x0^2", 2));
  CHECK(low.is_zero());
  CHECK_THROWS_AS(apolar_apply(parse_poly("x0", 1), parse_poly("x0", 2)), Error);
}

TEST_CASE("apolar_apply matches iterated differentiation and is bilinear") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + rng() % 3, d = 1 + rng() % 5, k = rng() % (d + 1);
    const HomogPoly f = random_form(rng, n, d, 9), g = random_form(rng, n, d, 9);
    const HomogPoly op = random_form(rng, n, k, 9), op2 = random_form(rng, n, k, 9);
    HomogPoly want(n, d - k);
    for (const auto &[m, c] : op.terms())
      want += c * differentiate(f, m);
    CHECK(apolar_apply(op, f) == want);
    CHECK(apolar_apply(op, f + g) == apolar_apply(op, f) + apolar_apply(op, g));
    CHECK(apolar_apply(op + op2, f) == apolar_apply(op, f) + apolar_apply(op2, f));
  }
}

TEST_CASE("veronese tangent basis") {
  const auto basis = veronese_tangent_basis(LinearForm({1, 0, 0}), 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == parse_poly("x0^2", 3));
  CHECK(basis[1] == parse_poly("x0*x1", 3));
  CHECK(basis[2] == parse_poly("x0*x2", 3));
  CHECK_THROWS_AS(veronese_tangent_basis(LinearForm({1, 0}), 0), Error);
}

TEST_CASE("projective points") {
  const ProjPoint p({-2, 4}), q({1, -2});
  CHECK(p.same_point(q));
  CHECK(p.canonical() == QVector{1, -2});
  CHECK(ProjPoint({0, 3}).canonical() == QVector{0, 1});
  CHECK_THROWS_AS(ProjPoint({0, 0}), Error);
}
