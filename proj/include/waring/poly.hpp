#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/rational.hpp"

namespace waring {

inline constexpr unsigned kMaxParseVars = 16;
inline constexpr unsigned kMaxParseDegree = 64;

/// Exponent vector of a monomial in num_vars variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial one(unsigned num_vars) {
    return Monomial(std::vector<unsigned>(num_vars, 0));
  }
  static Monomial variable(unsigned num_vars, unsigned index, unsigned power = 1);

  unsigned num_vars() const noexcept { return static_cast<unsigned>(exponents_.size()); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned> &exponents() const noexcept { return exponents_; }

  /// True when every exponent of `other` is <= the matching one here.
  bool divisible_by(const Monomial &other) const;

  friend Monomial operator*(const Monomial &a, const Monomial &b);
  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x0 > x1 > ...: within one degree,
/// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
struct GrlexDescending {
  bool operator()(const Monomial &a, const Monomial &b) const {
    if (a.degree() != b.degree())
      return a.degree() > b.degree();
    return a > b;
  }
};

/// Homogeneous polynomial over Q with sparse term storage. Also used for
/// differential operators, which live in the dual ring with the same
/// exponent conventions.
class HomogPoly {
public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  HomogPoly(unsigned num_vars, unsigned degree)
      : num_vars_(num_vars), degree_(degree) {}

  static HomogPoly from_monomial(const Monomial &m, const Rational &coeff = 1);
  static HomogPoly variable(unsigned num_vars, unsigned index);
  static HomogPoly constant(unsigned num_vars, const Rational &c);

  unsigned num_vars() const noexcept { return num_vars_; }
  unsigned degree() const noexcept { return degree_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial &m) const;

  /// Adds c * m; drops the term if the coefficient cancels.
  void add_term(const Monomial &m, const Rational &c);

  Rational evaluate(std::span<const Rational> point) const;
  HomogPoly partial(unsigned var) const;

  HomogPoly &operator+=(const HomogPoly &other);
  HomogPoly &operator-=(const HomogPoly &other);
  HomogPoly &operator*=(const Rational &s);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly &b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly &b) { return a -= b; }
  friend HomogPoly operator*(const Rational &s, HomogPoly a) { return a *= s; }
  friend HomogPoly operator*(const HomogPoly &a, const HomogPoly &b);
  friend bool operator==(const HomogPoly &a, const HomogPoly &b);

private:
  unsigned num_vars_;
  unsigned degree_;
  Terms terms_;
};

/// Linear form sum c_i x_i with at least one nonzero coefficient.
class LinearForm {
public:
  explicit LinearForm(QVector coefficients);
  const QVector &coefficients() const noexcept { return coeffs_; }
  unsigned num_vars() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
  HomogPoly to_poly() const;

private:
  QVector coeffs_;
};

/// Point of projective space; equality is up to scale.
class ProjPoint {
public:
  explicit ProjPoint(QVector coordinates);
  const QVector &coordinates() const noexcept { return coords_; }
  /// Representative whose first nonzero coordinate is 1.
  QVector canonical() const;
  bool same_point(const ProjPoint &other) const { return canonical() == other.canonical(); }

private:
  QVector coords_;
};

/// dim S_d = C(num_vars + d - 1, d).
std::size_t space_dim(unsigned num_vars, unsigned degree);

/// All monomials of the given degree, in GrlexDescending order.
std::vector<Monomial> monomial_basis(unsigned num_vars, unsigned degree);

/// Position lookup for monomial_basis(num_vars, degree).
class MonomialIndex {
public:
  MonomialIndex(unsigned num_vars, unsigned degree);
  const std::vector<Monomial> &basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t at(const Monomial &m) const;

private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> position_;
};

QVector coefficient_vector(const HomogPoly &f);
HomogPoly from_coefficients(unsigned num_vars, unsigned degree,
                            std::span<const Rational> coefficients);

/// Grammar: sums of products of coefficients (integers or p/q) and powers of
/// variables named <prefix>0, <prefix>1, ... Whitespace is ignored and '*'
/// is mandatory between factors. Throws Parse or NotHomogeneous.
HomogPoly parse_poly(std::string_view text, unsigned num_vars, char prefix = 'x');

/// Highest variable index mentioned in text plus one (at least 1).
unsigned infer_num_vars(std::string_view text, char prefix = 'x');

/// Inverse of parse_poly; "0" for the zero polynomial.
std::string render(const HomogPoly &f, char prefix = 'x');

/// Multinomial expansion of L^d.
HomogPoly power_linear(const LinearForm &l, unsigned d);

/// Action of a differential operator (polynomial in the dual variables) by
/// honest partial differentiation: y^a applied to x^a is a_0! ... a_n!.
/// Returns the zero polynomial of degree 0 when deg op > deg F.
HomogPoly apolar_apply(const HomogPoly &op, const HomogPoly &f);

/// L^{d-1} x_i for i = 0..n; spans the affine cone over the tangent space
/// of the Veronese variety at [L^d].
std::vector<HomogPoly> veronese_tangent_basis(const LinearForm &l, unsigned d);

} // namespace waring
