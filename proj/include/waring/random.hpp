#pragma once

#include <cstdint>
#include <random>

#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// splitmix64 finalizer; also used to expand one user seed into a stream of
/// independent per-trial seeds: derive_seed(seed, k) = splitmix64(seed + (k+1)*golden).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + index * 0x9e3779b97f4a7c15ULL);
}

using Rng = std::mt19937_64;

inline Rational random_integer(Rng &rng, long lo, long hi) {
  return Rational(std::uniform_int_distribution<long>(lo, hi)(rng));
}

/// Affine-chart sample: coordinates uniform in [1, 2^16], last one set to 1.
inline QVector random_affine_point(Rng &rng, unsigned length) {
  QVector p(length);
  for (unsigned i = 0; i + 1 < length; ++i)
    p[i] = random_integer(rng, 1, 1L << 16);
  if (length)
    p[length - 1] = 1;
  return p;
}

/// Form whose coefficients (in the monomial basis) are uniform in [-bound, bound].
inline HomogPoly random_form(Rng &rng, unsigned num_vars, unsigned degree, long bound) {
  HomogPoly f(num_vars, degree);
  for (const Monomial &m : monomial_basis(num_vars, degree))
    f.add_term(m, random_integer(rng, -bound, bound));
  return f;
}

} // namespace waring
