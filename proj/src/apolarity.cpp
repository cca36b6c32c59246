#include "waring/apolarity.hpp"

#include <algorithm>
#include <random>

#include "waring/error.hpp"

namespace waring {

const char *to_string(RankBranch b) {
  switch (b) {
  case RankBranch::SquareFreeAtD1:
    return "square_free_at_d1";
  case RankBranch::FellThroughToD2:
    return "fell_through_to_d2";
  case RankBranch::Formula:
    return "formula";
  case RankBranch::MatrixRank:
    return "matrix_rank";
  }
  return "unknown";
}

CatalecticantMatrix catalecticant(const HomogPoly &f, unsigned t) {
  if (t > f.degree())
    fail(ErrorCode::DegreeOutOfRange,
         "catalecticant degree " + std::to_string(t) + " exceeds form degree " +
             std::to_string(f.degree()));
  const unsigned n = f.num_vars();
  const MonomialIndex rows(n, f.degree() - t);
  const auto cols = monomial_basis(n, t);
  QMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const HomogPoly image = apolar_apply(HomogPoly::from_monomial(cols[j]), f);
    for (const auto &[mono, c] : image.terms())
      m(rows.at(mono), j) = c;
  }
  return {f, t, std::move(m)};
}

std::vector<HomogPoly> perp_piece(const HomogPoly &f, unsigned t) {
  const unsigned n = f.num_vars();
  std::vector<HomogPoly> out;
  if (t > f.degree()) {
    for (const Monomial &m : monomial_basis(n, t))
      out.push_back(HomogPoly::from_monomial(m));
    return out;
  }
  for (const QVector &v : mat_kernel(catalecticant(f, t).matrix))
    out.push_back(from_coefficients(n, t, v));
  return out;
}

ApolarProfile hilbert_function(const HomogPoly &f, const RankOptions &options) {
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "Hilbert function of the zero form");
  const unsigned d = f.degree();
  ApolarProfile p{f, {}, {}};
  for (unsigned t = 0; t <= d + 1; ++t) {
    const std::size_t full = space_dim(f.num_vars(), t);
    const std::size_t h = t <= d ? mat_rank(catalecticant(f, t).matrix, options) : 0;
    p.hf.push_back(h);
    p.perp_dims.push_back(full - h);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Binary square-freeness via a univariate gcd over Q.

namespace {

using Univariate = std::vector<Rational>; // low degree first

void trim(Univariate &p) {
  while (!p.empty() && is_zero(p.back()))
    p.pop_back();
}

Univariate remainder(Univariate a, const Univariate &b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

} // namespace

bool is_square_free_binary(const HomogPoly &g) {
  if (g.num_vars() != 2)
    fail(ErrorCode::InvalidArgument, "square-free test needs a binary form");
  if (g.is_zero())
    return false;
  const unsigned k = g.degree();
  // g(t, 1): the coefficient of t^i is that of y0^i y1^(k-i).
  Univariate u(k + 1);
  for (const auto &[m, c] : g.terms())
    u[m[0]] = c;
  trim(u);
  const std::size_t affine_degree = u.size() - 1;
  if (affine_degree + 1 < k)
    return false; // y1^2 divides g
  Univariate du;
  for (std::size_t i = 1; i < u.size(); ++i)
    du.push_back(u[i] * static_cast<unsigned long>(i));
  if (du.empty())
    return true;
  return gcd(u, du).size() <= 1;
}

RankCertificate sylvester_rank(const HomogPoly &f, std::uint64_t seed) {
  if (f.num_vars() != 2)
    fail(ErrorCode::InvalidArgument, "Sylvester's algorithm needs a binary form");
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "rank of the zero form");
  const unsigned d = f.degree();
  for (unsigned t = 1; t <= d + 1; ++t) {
    const auto kernel = perp_piece(f, t);
    if (kernel.empty())
      continue;
    HomogPoly witness = kernel.front();
    if (kernel.size() > 1) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<long> coeff(1, 1000);
      witness = HomogPoly(2, t);
      for (const auto &k : kernel)
        witness += Rational(coeff(rng)) * k;
    }
    if (is_square_free_binary(witness))
      return {t, std::move(witness), RankBranch::SquareFreeAtD1};
    return {d + 2 - t, std::move(witness), RankBranch::FellThroughToD2};
  }
  fail(ErrorCode::InvalidArgument, "perp ideal has no generator up to degree d+1");
}

std::uint64_t monomial_rank(const std::vector<unsigned> &exponents) {
  std::vector<unsigned> positive;
  std::copy_if(exponents.begin(), exponents.end(), std::back_inserter(positive),
               [](unsigned a) { return a > 0; });
  if (positive.empty())
    fail(ErrorCode::AllZero, "monomial rank needs a positive exponent");
  std::sort(positive.begin(), positive.end());
  Integer r = 1;
  for (std::size_t i = 1; i < positive.size(); ++i)
    r *= positive[i] + 1;
  if (!r.fits_ulong_p())
    fail(ErrorCode::InvalidArgument, "monomial rank overflows 64 bits");
  return r.get_ui();
}

std::size_t quadratic_rank(const HomogPoly &f, const RankOptions &options) {
  if (f.degree() != 2)
    fail(ErrorCode::DegreeOutOfRange, "quadratic rank needs a degree-2 form");
  const unsigned n = f.num_vars();
  QMatrix m(n, n);
  for (const auto &[mono, c] : f.terms()) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < mono[i]; ++k)
        idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c / 2;
      m(idx[1], idx[0]) = c / 2;
    }
  }
  return mat_rank(m, options);
}

std::optional<QVector> decompose_check(const HomogPoly &f,
                                       const std::vector<ProjPoint> &points) {
  const unsigned n = f.num_vars();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coordinates().size() != n)
      fail(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].same_point(points[j]))
        fail(ErrorCode::DuplicatePoints,
             "points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  const std::size_t rows = space_dim(n, f.degree());
  QMatrix m(rows, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const QVector col =
        coefficient_vector(power_linear(LinearForm(points[j].coordinates()), f.degree()));
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = col[i];
  }
  return solve_linear(m, coefficient_vector(f));
}

} // namespace waring
