#include "waring/matrix.hpp"

#include <algorithm>
#include <utility>

#include "waring/error.hpp"

namespace waring {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(ErrorCode::WrongShape, "matrix entry count does not match rows*cols");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorCode::WrongShape, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_)
    fail(ErrorCode::WrongShape, "vector length does not match matrix columns");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_zero((*this)(r, c)))
        out[r] += (*this)(r, c) * v[c];
  return out;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::WrongShape, "matrix sum shape mismatch");
  QMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i)
    s.entries_[i] += b.entries_[i];
  return s;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b) {
  return a + Rational(-1) * b;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::WrongShape, "matrix product shape mismatch");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &aik = a(i, k);
      if (is_zero(aik))
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j) += aik * b(k, j);
    }
  return p;
}

QMatrix operator*(const Rational &s, const QMatrix &a) {
  QMatrix p = a;
  for (auto &e : p.entries_)
    e *= s;
  return p;
}

// ---------------------------------------------------------------------------
// Prime field

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer &z, std::uint64_t modulus) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus);
  return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

PrimeField::PrimeField(std::uint64_t modulus, std::uint64_t value)
    : modulus_(modulus), value_(value % modulus) {
  if (modulus < 2)
    fail(ErrorCode::InvalidArgument, "modulus must be at least 2");
}

PrimeField PrimeField::from_rational(std::uint64_t modulus, const Rational &q) {
  std::uint64_t den = reduce(q.get_den(), modulus);
  if (den == 0)
    fail(ErrorCode::InvalidArgument,
         "modulus divides a denominator; choose another modulus");
  return PrimeField(modulus, reduce(q.get_num(), modulus)) *
         PrimeField(modulus, den).inverse();
}

PrimeField PrimeField::inverse() const {
  if (value_ == 0)
    fail(ErrorCode::InvalidArgument, "inverse of zero in prime field");
  return PrimeField(modulus_, powmod(value_, modulus_ - 2, modulus_));
}

PrimeField operator+(PrimeField a, PrimeField b) {
  if (a.modulus_ != b.modulus_)
    fail(ErrorCode::InvalidArgument, "prime field modulus mismatch");
  std::uint64_t s = a.value_ + b.value_;
  if (s >= a.modulus_ || s < a.value_)
    s -= a.modulus_;
  return PrimeField(a.modulus_, s);
}

PrimeField operator-(PrimeField a, PrimeField b) {
  if (a.modulus_ != b.modulus_)
    fail(ErrorCode::InvalidArgument, "prime field modulus mismatch");
  return PrimeField(a.modulus_, a.value_ >= b.value_
                                    ? a.value_ - b.value_
                                    : a.modulus_ - (b.value_ - a.value_));
}

PrimeField operator*(PrimeField a, PrimeField b) {
  if (a.modulus_ != b.modulus_)
    fail(ErrorCode::InvalidArgument, "prime field modulus mismatch");
  return PrimeField(a.modulus_, mulmod(a.value_, b.value_, a.modulus_));
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct IntegerRows {
  std::size_t rows, cols;
  std::vector<Integer> a;
  Integer scale = 1; // product of the row multipliers used to clear denominators

  Integer &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntegerRows clear_denominators(const QMatrix &m) {
  IntegerRows out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const Rational &q : m.row(r))
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational &q = m(r, c);
      out.at(r, c) = q.get_num() * (l / q.get_den());
    }
    out.scale *= l;
  }
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  bool odd_swaps = false;
};

// Fraction-free row echelon form in place. Pivot = first nonzero entry of the
// current column among the remaining rows; columns without a pivot are
// skipped. Every division below is exact.
BareissResult bareiss(IntegerRows &m) {
  BareissResult res;
  Integer prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0)
      ++p;
    if (p == m.rows)
      continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols; ++j)
        std::swap(m.at(p, j), m.at(r, j));
      res.odd_swaps = !res.odd_swaps;
    }
    const Integer &piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const Integer &lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(QMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c)))
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c)))
        continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j)))
          m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t mat_rank(const QMatrix &m) {
  IntegerRows a = clear_denominators(m);
  return bareiss(a).rank;
}

std::size_t mat_rank(const QMatrix &m, const RankOptions &options) {
  if (options.arithmetic == Arithmetic::ModularProbabilistic)
    return mat_rank_mod(m, options.modulus);
  return mat_rank(m);
}

std::size_t mat_rank_mod(const QMatrix &m, std::uint64_t modulus) {
  if (!is_prime(modulus))
    fail(ErrorCode::InvalidArgument, "modulus must be prime");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (const Rational &q : m.row(i))
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational scaled = m(i, j) * den;
      a[i * cols + j] = reduce(scaled.get_num(), modulus);
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t & {
    return a[r * cols + c];
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(at(p, j), at(r, j));
    const std::uint64_t inv = PrimeField(modulus, at(r, c)).inverse().value();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0)
        continue;
      const std::uint64_t f = mulmod(at(i, c), inv, modulus);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t t = mulmod(f, at(r, j), modulus);
        at(i, j) = at(i, j) >= t ? at(i, j) - t : modulus - (t - at(i, j));
      }
    }
    ++r;
  }
  return r;
}

std::vector<QVector> mat_kernel(const QMatrix &m) {
  QMatrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -work(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational mat_det(const QMatrix &m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
  if (m.rows() == 0)
    return 1;
  IntegerRows a = clear_denominators(m);
  const BareissResult res = bareiss(a);
  if (res.rank < m.rows())
    return 0;
  Rational det(res.odd_swaps ? -res.last_pivot : res.last_pivot, a.scale);
  det.canonicalize();
  return det;
}

std::optional<QVector> solve_linear(const QMatrix &m, std::span<const Rational> b) {
  if (b.size() != m.rows())
    fail(ErrorCode::WrongShape, "right-hand side length does not match rows");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;
  QVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug(k, m.cols());
  return x;
}

} // namespace waring
