#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector> &rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const { return entries_; }

  QMatrix transpose() const;
  QVector apply(std::span<const Rational> v) const;

  friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator*(const Rational &s, const QMatrix &a);
  friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

enum class Arithmetic { ExactRational, ModularProbabilistic };

inline constexpr std::uint64_t kDefaultModulus = 2147483647ULL; // 2^31 - 1

struct RankOptions {
  Arithmetic arithmetic = Arithmetic::ExactRational;
  std::uint64_t modulus = kDefaultModulus;
};

/// Element of Z/pZ. The modulus travels with the value so mixed-modulus
/// arithmetic is caught at runtime.
class PrimeField {
public:
  PrimeField(std::uint64_t modulus, std::uint64_t value);
  /// Reduces a rational; throws InvalidArgument when p divides the denominator.
  static PrimeField from_rational(std::uint64_t modulus, const Rational &q);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t value() const noexcept { return value_; }

  PrimeField inverse() const;
  friend PrimeField operator+(PrimeField a, PrimeField b);
  friend PrimeField operator-(PrimeField a, PrimeField b);
  friend PrimeField operator*(PrimeField a, PrimeField b);
  friend bool operator==(PrimeField a, PrimeField b) = default;

private:
  std::uint64_t modulus_;
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

/// Rank over Q via fraction-free elimination (denominators cleared row-wise).
std::size_t mat_rank(const QMatrix &m);
/// Rank in the requested arithmetic. The modular result is a lower bound on
/// the rational rank.
std::size_t mat_rank(const QMatrix &m, const RankOptions &options);
std::size_t mat_rank_mod(const QMatrix &m, std::uint64_t modulus);

/// Basis of the right null space; vectors have a 1 at their free column.
std::vector<QVector> mat_kernel(const QMatrix &m);

/// Exact determinant (Bareiss). Throws NonSquare.
Rational mat_det(const QMatrix &m);

/// One exact solution of m x = b, or nullopt when b is outside the column
/// space. Free variables are set to zero.
std::optional<QVector> solve_linear(const QMatrix &m, std::span<const Rational> b);

} // namespace waring
