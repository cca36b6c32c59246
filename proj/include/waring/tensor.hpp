#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// Dense tensor in V_1 (x) ... (x) V_t, entries row-major (last index fastest).
class DenseTensor {
public:
  DenseTensor() = default;
  explicit DenseTensor(std::vector<std::size_t> shape);
  DenseTensor(std::vector<std::size_t> shape, std::vector<Rational> entries);

  /// coeff * f_1 (x) ... (x) f_t.
  static DenseTensor rank_one(const std::vector<QVector> &factors, const Rational &coeff = 1);

  const std::vector<std::size_t> &shape() const noexcept { return shape_; }
  std::size_t order() const noexcept { return shape_.size(); }
  std::span<const Rational> entries() const noexcept { return entries_; }
  std::size_t flat_index(std::span<const std::size_t> index) const;

  Rational &at(std::span<const std::size_t> index) { return entries_[flat_index(index)]; }
  const Rational &at(std::span<const std::size_t> index) const {
    return entries_[flat_index(index)];
  }
  Rational &at(std::initializer_list<std::size_t> index) {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  const Rational &at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  DenseTensor &operator+=(const DenseTensor &other);
  friend DenseTensor operator+(DenseTensor a, const DenseTensor &b) { return a += b; }
  friend DenseTensor operator*(const Rational &s, DenseTensor a);
  friend bool operator==(const DenseTensor &, const DenseTensor &) = default;

private:
  std::vector<std::size_t> shape_;
  std::vector<Rational> entries_;
};

/// Rows indexed by the multi-indices of `left_modes` (0-based, merged
/// lexicographically in ascending mode order), columns by the complement.
/// Throws InvalidModeSet unless left_modes is a nonempty proper subset.
QMatrix flatten(const DenseTensor &t, const std::vector<unsigned> &left_modes);

/// Ranks of the t one-mode flattenings.
std::vector<std::size_t> multilinear_rank(const DenseTensor &t, const RankOptions &options = {});

/// True iff every (r+1)-minor of every one-mode flattening vanishes; a
/// necessary condition for border rank <= r.
bool gss_minor_test(const DenseTensor &t, std::size_t r);

/// The n^2 x n^2 x n^2 tensor of (A, B) |-> AB:
/// entry[(i,j),(k,l),(p,q)] = 1 iff j = k, i = p, l = q.
DenseTensor matmul_tensor(unsigned n);

struct StrassenMatrix {
  DenseTensor tensor;
  QMatrix matrix;
};

/// 9x9 block matrix [[0, T1, -T2], [-T1, 0, T3], [T2, -T3, 0]] built from
/// the slices T_i = T[i, :, :]. Throws WrongShape unless shape is (3,3,3).
StrassenMatrix strassen_matrix(const DenseTensor &t);

/// Determinant of a square matrix of polynomials by Laplace expansion with
/// memoized minors (one per column subset, zero minors dropped). At most 31
/// columns.
HomogPoly symbolic_determinant(const std::vector<std::vector<HomogPoly>> &m);

/// det(phi_T) for the generic 3x3x3 tensor; variable 9i + 3j + k stands for
/// T[i][j][k].
HomogPoly strassen_det_symbolic();

/// { "shape": [...], "entries": [...] } or { "rank_one_sum": [{ "factors":
/// [[...], ...], "coeff": "p/q" }, ...] }. Throws Json / WrongShape.
DenseTensor tensor_from_json(std::string_view text);
std::string tensor_to_json(const DenseTensor &t);

} // namespace waring
