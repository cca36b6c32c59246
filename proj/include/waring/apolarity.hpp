#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// Matrix of T_t -> S_{d-t}, op |-> op applied to F. Rows follow the
/// monomial basis of S_{d-t}, columns the monomial basis of T_t.
struct CatalecticantMatrix {
  HomogPoly form;
  unsigned t;
  QMatrix matrix;
};

/// Hilbert function of T/F^perp for t = 0..d+1 together with dim (F^perp)_t.
struct ApolarProfile {
  HomogPoly form;
  std::vector<std::size_t> hf;
  std::vector<std::size_t> perp_dims;
};

enum class RankBranch { SquareFreeAtD1, FellThroughToD2, Formula, MatrixRank };

const char *to_string(RankBranch b);

struct RankCertificate {
  std::uint64_t rank;
  /// Apolar operator that decided the branch (zero poly for Formula/MatrixRank).
  HomogPoly witness;
  RankBranch branch;
};

/// Throws DegreeOutOfRange unless t <= deg F.
CatalecticantMatrix catalecticant(const HomogPoly &f, unsigned t);

/// Basis of (F^perp)_t as operators in the dual variables. For t > deg F
/// this is all of T_t.
std::vector<HomogPoly> perp_piece(const HomogPoly &f, unsigned t);

/// Throws ZeroPolynomial for F = 0.
ApolarProfile hilbert_function(const HomogPoly &f, const RankOptions &options = {});

/// Square-freeness of a binary form over the algebraic closure.
bool is_square_free_binary(const HomogPoly &g);

/// Waring rank of a nonzero binary form. `seed` picks the kernel element
/// when (F^perp)_{d1} is more than one-dimensional (then d1 = d2 and the
/// choice does not affect the rank).
RankCertificate sylvester_rank(const HomogPoly &f, std::uint64_t seed = 0);

/// prod(a_i + 1) / (a_0 + 1) over the positive exponents, a_0 the smallest.
/// Throws AllZero.
std::uint64_t monomial_rank(const std::vector<unsigned> &exponents);

/// Rank of the symmetric matrix of a quadratic form.
std::size_t quadratic_rank(const HomogPoly &f, const RankOptions &options = {});

/// Solves sum c_i L_i^d = F where L_i has the coordinates of point i as
/// coefficients. nullopt when F is not in the span. Throws DuplicatePoints.
std::optional<QVector> decompose_check(const HomogPoly &f,
                                       const std::vector<ProjPoint> &points);

} // namespace waring
