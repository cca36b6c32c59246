#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "waring/apolarity.hpp"
#include "waring/error.hpp"
#include "waring/random.hpp"

using namespace waring;

namespace {

HomogPoly poly(const char *text, unsigned n) { return parse_poly(text, n); }

std::size_t binom(unsigned n, unsigned k) { return binomial(n, k).get_ui(); }

QVector random_point(Rng &rng, unsigned n) {
  QVector p(n);
  for (auto &x : p)
    x = random_integer(rng, -20, 20);
  p[0] = random_integer(rng, 1, 20);
  return p;
}

// Sum of s powers of distinct random linear forms.
HomogPoly sum_of_powers(Rng &rng, unsigned n, unsigned d, unsigned s) {
  HomogPoly f(n, d);
  std::vector<ProjPoint> used;
  while (used.size() < s) {
    ProjPoint p(random_point(rng, n));
    bool dup = false;
    for (const auto &q : used)
      dup = dup || q.same_point(p);
    if (dup)
      continue;
    used.push_back(p);
    f += power_linear(LinearForm(p.coordinates()), d);
  }
  return f;
}

} // namespace

TEST_CASE("catalecticant of x0*x1^2") {
  const auto c = catalecticant(poly("x0*x1^2", 2), 1);
  // rows x0^2, x0x1, x1^2; columns y0, y1
  CHECK(c.matrix == QMatrix::from_rows({{0, 0}, {0, 2}, {1, 0}}));
  CHECK(catalecticant(poly("x0*x1^2", 2), 0).matrix.cols() == 1);
  CHECK_THROWS_AS(catalecticant(poly("x0*x1^2", 2), 4), Error);
}

TEST_CASE("catalecticant columns are the derivatives of F") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + rng() % 3, d = 1 + rng() % 5, t = rng() % (d + 1);
    const HomogPoly f = random_form(rng, n, d, 30);
    const QMatrix m = catalecticant(f, t).matrix;
    const auto ops = monomial_basis(n, t);
    REQUIRE(m.cols() == ops.size());
    REQUIRE(m.rows() == space_dim(n, d - t));
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const QVector col = coefficient_vector(apolar_apply(HomogPoly::from_monomial(ops[j]), f));
      for (std::size_t i = 0; i < m.rows(); ++i)
        CHECK(m(i, j) == col[i]);
    }
    // symmetric rank: the t and d-t catalecticants are transposes up to scaling
    CHECK(mat_rank(m) == mat_rank(catalecticant(f, d - t).matrix));
  }
}

TEST_CASE("perp pieces") {
  const auto p = perp_piece(poly("x0*x1^2", 2), 2);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == poly("x0^2", 2));
  const auto fermat = perp_piece(poly("x0^3 + x1^3 + x2^3", 5), 1);
  REQUIRE(fermat.size() == 2);
  CHECK(fermat[0] == poly("x3", 5));
  CHECK(fermat[1] == poly("x4", 5));
  CHECK(perp_piece(poly("x0^2", 2), 3).size() == 4);
  CHECK(perp_piece(poly("x0^2 + x1^2", 2), 2).size() == 2);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + rng() % 3, d = 1 + rng() % 4, t = rng() % (d + 2);
    const HomogPoly f = random_form(rng, n, d, 3);
    for (const auto &op : perp_piece(f, t))
      CHECK(apolar_apply(op, f).is_zero());
  }
}

TEST_CASE("Hilbert function tables") {
  std::mt19937_64 rng(10);
  CHECK(hilbert_function(random_form(rng, 3, 4, 1000)).hf == std::vector<std::size_t>{1, 3, 6, 3, 1, 0});
  CHECK(hilbert_function(poly("x0^3", 2)).hf == std::vector<std::size_t>{1, 1, 1, 1, 0});
  CHECK(hilbert_function(random_form(rng, 2, 3, 1000)).hf == std::vector<std::size_t>{1, 2, 2, 1, 0});
  CHECK(hilbert_function(random_form(rng, 5, 3, 1000)).hf == std::vector<std::size_t>{1, 5, 5, 1, 0});
  const auto prof = hilbert_function(poly("x0*x1^2", 2));
  CHECK(prof.hf == std::vector<std::size_t>{1, 2, 2, 1, 0});
  CHECK(prof.perp_dims == std::vector<std::size_t>{0, 0, 1, 3, 5});
  CHECK_THROWS_AS(hilbert_function(HomogPoly(2, 3)), Error);
}

TEST_CASE("Hilbert function of generic forms is the catalecticant bound") {
  std::mt19937_64 rng(12);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 5; ++d) {
      const auto hf = hilbert_function(random_form(rng, n, d, 1000)).hf;
      for (unsigned t = 0; t <= d; ++t)
        CHECK(hf[t] == std::min(binom(t + n - 1, t), binom(d - t + n - 1, d - t)));
      CHECK(hf[d + 1] == 0);
    }
}

TEST_CASE("Hilbert function is symmetric") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 2 + rng() % 3, d = 1 + rng() % 6;
    HomogPoly f = sum_of_powers(rng, n, d, 1 + rng() % 4);
    if (f.is_zero())
      continue;
    const auto prof = hilbert_function(f);
    for (unsigned t = 0; t <= d; ++t) {
      CHECK(prof.hf[t] == prof.hf[d - t]);
      CHECK(prof.hf[t] + prof.perp_dims[t] == space_dim(n, t));
    }
  }
}

TEST_CASE("modular Hilbert function agrees") {
  std::mt19937_64 rng(14);
  const RankOptions modular{Arithmetic::ModularProbabilistic, kDefaultModulus};
  for (int trial = 0; trial < 20; ++trial) {
    const HomogPoly f = random_form(rng, 3, 4, 1000);
    CHECK(hilbert_function(f, modular).hf == hilbert_function(f).hf);
  }
}

TEST_CASE("square-free test") {
  CHECK(is_square_free_binary(poly("x0*x1", 2)));
  CHECK(is_square_free_binary(poly("x0^2 - x1^2", 2)));
  CHECK(is_square_free_binary(poly("x0^2 + x1^2", 2))); // over C: (x0 - i x1)(x0 + i x1)
  CHECK_FALSE(is_square_free_binary(poly("x0^2", 2)));
  CHECK_FALSE(is_square_free_binary(poly("x1^2", 2)));
  CHECK_FALSE(is_square_free_binary(poly("x0^2*x1 - 2*x0*x1^2 + x1^3", 2)));
  CHECK(is_square_free_binary(poly("x0^3 - x1^3", 2)));
}

TEST_CASE("Sylvester rank examples") {
  const auto cert = sylvester_rank(poly("x0*x1^2", 2));
  CHECK(cert.rank == 3);
  CHECK(cert.branch == RankBranch::FellThroughToD2);
  CHECK(cert.witness == poly("x0^2", 2));
  for (unsigned d = 1; d <= 8; ++d)
    CHECK(sylvester_rank(HomogPoly::from_monomial(Monomial(std::vector<unsigned>{1, d}))).rank == d + 1);
  CHECK(sylvester_rank(poly("x0^3 + x1^3", 2)).rank == 2);
  CHECK(sylvester_rank(poly("x0^3 + x1^3", 2)).branch == RankBranch::SquareFreeAtD1);
  CHECK(sylvester_rank(poly("x0^5", 2)).rank == 1);
  CHECK(sylvester_rank(poly("7", 2)).rank == 1);
  CHECK_THROWS_AS(sylvester_rank(poly("x0*x1*x2", 3)), Error);
  CHECK_THROWS_AS(sylvester_rank(HomogPoly(2, 3)), Error);
}

TEST_CASE("Sylvester rank of a short sum of powers is its length") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned d = 2 + rng() % 7;
    const unsigned s = 1 + rng() % ((d + 1) / 2);
    const HomogPoly f = sum_of_powers(rng, 2, d, s);
    CHECK(sylvester_rank(f, trial).rank == s);
  }
}

TEST_CASE("monomial rank formula") {
  CHECK(monomial_rank({1, 1, 1}) == 4);
  CHECK(monomial_rank({1, 2}) == 3);
  CHECK(monomial_rank({0, 3, 0}) == 1);
  CHECK(monomial_rank({2, 2}) == 3);
  CHECK_THROWS_AS(monomial_rank({0, 0}), Error);
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; a + b <= 10; ++b) {
      if (a + b == 0)
        continue;
      const HomogPoly f = HomogPoly::from_monomial(Monomial(std::vector<unsigned>{a, b}));
      CHECK(monomial_rank({a, b}) == sylvester_rank(f).rank);
    }
}

TEST_CASE("quadratic rank") {
  CHECK(quadratic_rank(poly("x0^2 + x1^2", 2)) == 2);
  CHECK(quadratic_rank(poly("x0*x1", 2)) == 2);
  CHECK(quadratic_rank(poly("x0^2 + 2*x0*x1 + x1^2", 2)) == 1);
  CHECK(quadratic_rank(poly("x0*x1 + x2^2", 4)) == 3);
  CHECK_THROWS_AS(quadratic_rank(poly("x0^3", 2)), Error);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + rng() % 5, s = 1 + rng() % n;
    CHECK(quadratic_rank(sum_of_powers(rng, n, 2, s)) <= s);
    CHECK(quadratic_rank(random_form(rng, n, 2, 1000)) == n);
  }
}

TEST_CASE("decompose_check") {
  const auto c = decompose_check(poly("x0^2*x1", 2),
                                 {ProjPoint({1, 1}), ProjPoint({-1, 1}), ProjPoint({0, 1})});
  REQUIRE(c);
  CHECK(*c == QVector{Rational(1, 6), Rational(1, 6), Rational(-1, 3)});
  CHECK_FALSE(decompose_check(poly("x0*x1^2", 2), {ProjPoint({1, 1}), ProjPoint({1, -1})}));
  CHECK_THROWS_AS(decompose_check(poly("x0^3", 2), {ProjPoint({1, 1}), ProjPoint({2, 2})}), Error);
  CHECK_THROWS_AS(decompose_check(poly("x0^3", 2), {ProjPoint({1, 1, 1})}), Error);

  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 2 + rng() % 2, d = 2 + rng() % 3, s = 1 + rng() % 3;
    std::vector<ProjPoint> pts;
    QVector coeffs;
    HomogPoly f(n, d);
    while (pts.size() < s) {
      ProjPoint p(random_point(rng, n));
      bool dup = false;
      for (const auto &q : pts)
        dup = dup || q.same_point(p);
      if (dup)
        continue;
      pts.push_back(p);
      coeffs.push_back(random_integer(rng, 1, 9));
      f += coeffs.back() * power_linear(LinearForm(p.coordinates()), d);
    }
    const auto got = decompose_check(f, pts);
    REQUIRE(got);
    HomogPoly back(n, d);
    for (std::size_t i = 0; i < s; ++i)
      back += (*got)[i] * power_linear(LinearForm(pts[i].coordinates()), d);
    CHECK(back == f);
  }
}
