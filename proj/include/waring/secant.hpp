#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "waring/matrix.hpp"

namespace waring {

struct Veronese {
  unsigned n; // P^n
  unsigned d;
};

struct Segre {
  std::vector<unsigned> dims; // P^{n_1} x ... x P^{n_t}
};

class VarietySpec {
public:
  static VarietySpec veronese(unsigned n, unsigned d);
  static VarietySpec segre(std::vector<unsigned> dims);

  const std::variant<Veronese, Segre> &kind() const noexcept { return kind_; }
  bool is_veronese() const noexcept { return std::holds_alternative<Veronese>(kind_); }

  /// N with the variety embedded in P^N.
  std::size_t ambient_dim() const;
  /// Dimension of the variety itself.
  std::size_t dim() const;
  std::string describe() const;

private:
  explicit VarietySpec(std::variant<Veronese, Segre> kind) : kind_(std::move(kind)) {}
  std::variant<Veronese, Segre> kind_;
};

struct TerraciniOptions {
  std::uint64_t seed = 0;
  unsigned trials = 3;
  RankOptions rank;
};

struct DimReport {
  VarietySpec spec;
  unsigned s;
  std::size_t computed_dim;
  std::size_t expected_dim;
  long defect;
  unsigned trials;
  std::uint64_t seed;
  Arithmetic arithmetic;
  /// Tabulated dimension for classically defective cases, if any.
  std::optional<std::size_t> known_dim;
  /// computed == expected, or computed matches the tabulated value.
  bool certified;
};

/// min{s * (dim X + 1) - 1, N}.
std::size_t expected_dim(const VarietySpec &spec, unsigned s);

/// Rows: all first partials of the degree-d monomial basis evaluated at each
/// point (n+1 rows per point). Its kernel is (p_1^2 cap ... cap p_s^2)_d.
QMatrix veronese_terracini_matrix(unsigned n, unsigned d, const std::vector<QVector> &points);

/// Rows: for each rank-one tensor (one factor vector per mode) and each mode
/// i, the tensors obtained by replacing factor i with each basis vector.
QMatrix segre_terracini_matrix(const std::vector<unsigned> &dims,
                               const std::vector<std::vector<QVector>> &rank_one_factors);

DimReport terracini_dim_veronese(unsigned n, unsigned d, unsigned s,
                                 const TerraciniOptions &options = {});
DimReport terracini_dim_segre(const std::vector<unsigned> &dims, unsigned s,
                              const TerraciniOptions &options = {});

/// Generic Waring rank g(n, d) from the Alexander-Hirschowitz classification.
std::uint64_t big_waring_g(unsigned n, unsigned d);

DimReport defect_report(const VarietySpec &spec, unsigned s,
                        const TerraciniOptions &options = {});

/// Dimensions of the classically defective cases: d = 2 Veronese, the four
/// AH exceptions at their critical s, and the Segre cases (P^1)^4, s = 3 and
/// (P^2)^3, s = 4.
std::optional<std::size_t> known_secant_dim(const VarietySpec &spec, unsigned s);

} // namespace waring
