#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "waring/error.hpp"
#include "waring/random.hpp"
#include "waring/tensor.hpp"

using namespace waring;

namespace {

QVector random_vector(Rng &rng, std::size_t n, long bound = 9) {
  QVector v(n);
  for (auto &x : v)
    x = random_integer(rng, -bound, bound);
  return v;
}

DenseTensor random_rank_sum(Rng &rng, const std::vector<std::size_t> &shape, unsigned r) {
  DenseTensor t(shape);
  for (unsigned k = 0; k < r; ++k) {
    std::vector<QVector> factors;
    for (std::size_t n : shape)
      factors.push_back(random_vector(rng, n));
    t += DenseTensor::rank_one(factors);
  }
  return t;
}

} // namespace

TEST_CASE("dense tensor basics") {
  DenseTensor t({2, 3});
  t.at({1, 2}) = 5;
  CHECK(t.entries()[5] == 5);
  CHECK(t.order() == 2);
  CHECK_THROWS_AS(t.at({2, 0}), Error);
  CHECK_THROWS_AS(t.at({0}), Error);
  CHECK_THROWS_AS(DenseTensor({2, 2}, {1, 2, 3}), Error);
  CHECK_THROWS_AS(t + DenseTensor({3, 2}), Error);
  const DenseTensor r = DenseTensor::rank_one({{1, 2}, {3, 4, 5}}, 2);
  CHECK(r.at({1, 2}) == 20);
  CHECK(Rational(1, 2) * r == DenseTensor::rank_one({{1, 2}, {3, 4, 5}}));
}

TEST_CASE("flattening entries follow the merged multi-index") {
  std::mt19937_64 rng(1);
  DenseTensor t({2, 3, 2, 2});
  for (std::size_t i = 0; i < t.entries().size(); ++i)
    t.at({i / 12, (i / 4) % 3, (i / 2) % 2, i % 2}) = static_cast<long>(i);
  const QMatrix m = flatten(t, {2, 0});
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 6);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          CHECK(m(a * 2 + c, b * 2 + d) == t.at({a, b, c, d}));
  CHECK_THROWS_AS(flatten(t, {}), Error);
  CHECK_THROWS_AS(flatten(t, {0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(flatten(t, {4}), Error);
  CHECK_THROWS_AS(flatten(t, {1, 1}), Error);
  CHECK(mat_rank(flatten(DenseTensor({2, 2, 2}), {0})) == 0);
}

TEST_CASE("multilinear rank") {
  std::mt19937_64 rng(2);
  CHECK(multilinear_rank(DenseTensor::rank_one({{1, 2}, {0, 3}, {4, 5, 6}})) ==
        std::vector<std::size_t>{1, 1, 1});
  CHECK(multilinear_rank(matmul_tensor(2)) == std::vector<std::size_t>{4, 4, 4});
  CHECK(multilinear_rank(matmul_tensor(3)) == std::vector<std::size_t>{9, 9, 9});
  for (unsigned r = 1; r <= 3; ++r)
    CHECK(multilinear_rank(random_rank_sum(rng, {3, 3, 3}, r)) == std::vector<std::size_t>(3, r));
  CHECK_THROWS_AS(multilinear_rank(DenseTensor({4})), Error);
  const RankOptions modular{Arithmetic::ModularProbabilistic, kDefaultModulus};
  CHECK(multilinear_rank(matmul_tensor(2), modular) == std::vector<std::size_t>{4, 4, 4});
}

TEST_CASE("flattening ranks match a naive oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseTensor t = random_rank_sum(rng, {2, 3, 2}, 1 + rng() % 4);
    for (unsigned mode = 0; mode < 3; ++mode) {
      const QMatrix m = flatten(t, {mode});
      oracle::Rows rows(m.rows(), std::vector<Rational>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          rows[i][j] = m(i, j);
      CHECK(mat_rank(m) == oracle::rank(rows));
    }
  }
}

TEST_CASE("minor test") {
  std::mt19937_64 rng(4);
  CHECK(gss_minor_test(DenseTensor::rank_one({{1, 2}, {3, 4}, {5, 6}}), 1));
  CHECK_FALSE(gss_minor_test(random_rank_sum(rng, {2, 2, 2}, 2), 1));
  CHECK(gss_minor_test(random_rank_sum(rng, {3, 3, 3}, 9), 3));
  CHECK_THROWS_AS(gss_minor_test(DenseTensor({2, 2}), 0), Error);
}

TEST_CASE("matmul tensor has n^3 ones") {
  for (unsigned n = 1; n <= 3; ++n) {
    const DenseTensor t = matmul_tensor(n);
    Rational total = 0;
    for (const Rational &x : t.entries())
      total += x;
    CHECK(total == n * n * n);
  }
  // contracting with A and B gives AB
  const DenseTensor t = matmul_tensor(2);
  const QVector a{1, 2, 3, 4}, b{5, 6, 7, 8};
  const QVector ab{19, 22, 43, 50};
  for (std::size_t p = 0; p < 4; ++p) {
    Rational v = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        v += t.at({i, j, p}) * a[i] * b[j];
    CHECK(v == ab[p]);
  }
  CHECK_THROWS_AS(matmul_tensor(0), Error);
}

TEST_CASE("Strassen's matrix") {
  std::mt19937_64 rng(5);
  const DenseTensor t = random_rank_sum(rng, {3, 3, 3}, 1);
  const QMatrix m = strassen_matrix(t).matrix;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(m(3 * a + j, 3 * b + k) == -m(3 * b + j, 3 * a + k));
  CHECK(mat_rank(m) == 2);
  CHECK(m(0, 3) == t.at({0, 0, 0}));
  CHECK(m(3, 0) == -t.at({0, 0, 0}));
  CHECK(m(0, 6) == -t.at({1, 0, 0}));
  CHECK(m(3, 6) == t.at({2, 0, 0}));
  CHECK_THROWS_AS(strassen_matrix(DenseTensor({2, 2, 2})), Error);
}

TEST_CASE("Strassen's matrix is linear and bounds the rank") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseTensor a = random_rank_sum(rng, {3, 3, 3}, 2), b = random_rank_sum(rng, {3, 3, 3}, 3);
    CHECK(strassen_matrix(a + b).matrix == strassen_matrix(a).matrix + strassen_matrix(b).matrix);
    for (unsigned r = 1; r <= 4; ++r)
      CHECK(mat_rank(strassen_matrix(random_rank_sum(rng, {3, 3, 3}, r)).matrix) <= 2 * r);
  }
}

TEST_CASE("symbolic determinant of small matrices") {
  const HomogPoly a = HomogPoly::variable(4, 0), b = HomogPoly::variable(4, 1),
                  c = HomogPoly::variable(4, 2), d = HomogPoly::variable(4, 3);
  CHECK(symbolic_determinant({{a, b}, {c, d}}) == a * d - b * c);
  CHECK_THROWS_AS(symbolic_determinant({{a, b}}), Error);
  CHECK_THROWS_AS(symbolic_determinant({}), Error);
}

TEST_CASE("symbolic Strassen determinant evaluates to the numeric determinant") {
  const HomogPoly det = strassen_det_symbolic();
  CHECK(det.terms().size() == 9216);
  CHECK(det.degree() == 9);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    DenseTensor t({3, 3, 3});
    QVector point(27);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          point[9 * i + 3 * j + k] = t.at({i, j, k}) = random_integer(rng, -5, 5);
    CHECK(det.evaluate(point) == mat_det(strassen_matrix(t).matrix));
  }
}

TEST_CASE("tensor JSON") {
  const DenseTensor t = tensor_from_json(R"({"shape":[2,2],"entries":[1,"-1/2",0,3]})");
  CHECK(t.at({0, 1}) == Rational(-1, 2));
  CHECK(tensor_to_json(t) == R"({"entries":[1,"-1/2",0,3],"shape":[2,2]})");
  CHECK(tensor_from_json(tensor_to_json(matmul_tensor(2))) == matmul_tensor(2));
  const DenseTensor r = tensor_from_json(
      R"({"rank_one_sum":[{"factors":[[1,0],[0,1]],"coeff":"2"},{"factors":[[1,1],[1,1]]}]})");
  CHECK(r.at({0, 1}) == 3);
  CHECK(r.at({1, 0}) == 1);
  CHECK_THROWS_AS(tensor_from_json("{"), Error);
  CHECK_THROWS_AS(tensor_from_json("[]"), Error);
  CHECK_THROWS_AS(tensor_from_json(R"({"shape":[2],"entries":[1]})"), Error);
  CHECK_THROWS_AS(tensor_from_json(R"({"shape":[1],"entries":[true]})"), Error);
  CHECK_THROWS_AS(tensor_from_json(R"({"rank_one_sum":[]})"), Error);
  CHECK_THROWS_AS(tensor_from_json(
                      R"({"rank_one_sum":[{"factors":[[1],[1]]},{"factors":[[1,2],[1]]}]})"),
                  Error);
}
