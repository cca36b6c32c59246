#include "waring/secant.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "waring/error.hpp"
#include "waring/poly.hpp"
#include "waring/random.hpp"

namespace waring {

VarietySpec VarietySpec::veronese(unsigned n, unsigned d) {
  if (n < 1 || d < 1)
    fail(ErrorCode::InvalidArgument, "Veronese variety needs n >= 1 and d >= 1");
  return VarietySpec(Veronese{n, d});
}

VarietySpec VarietySpec::segre(std::vector<unsigned> dims) {
  if (dims.empty() || std::any_of(dims.begin(), dims.end(), [](unsigned n) { return n < 1; }))
    fail(ErrorCode::InvalidArgument, "Segre product needs at least one factor, all n_i >= 1");
  return VarietySpec(Segre{std::move(dims)});
}

std::size_t VarietySpec::ambient_dim() const {
  if (const auto *v = std::get_if<Veronese>(&kind_))
    return space_dim(v->n + 1, v->d) - 1;
  std::size_t prod = 1;
  for (unsigned n : std::get<Segre>(kind_).dims)
    prod *= n + 1;
  return prod - 1;
}

std::size_t VarietySpec::dim() const {
  if (const auto *v = std::get_if<Veronese>(&kind_))
    return v->n;
  const auto &dims = std::get<Segre>(kind_).dims;
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::string VarietySpec::describe() const {
  if (const auto *v = std::get_if<Veronese>(&kind_))
    return "veronese(n=" + std::to_string(v->n) + ",d=" + std::to_string(v->d) + ")";
  std::string out = "segre(";
  const auto &dims = std::get<Segre>(kind_).dims;
  for (std::size_t i = 0; i < dims.size(); ++i)
    out += (i ? "," : "") + std::to_string(dims[i]);
  return out + ")";
}

std::size_t expected_dim(const VarietySpec &spec, unsigned s) {
  if (s < 1)
    fail(ErrorCode::InvalidArgument, "s must be at least 1");
  return std::min<std::size_t>(s * (spec.dim() + 1) - 1, spec.ambient_dim());
}

QMatrix veronese_terracini_matrix(unsigned n, unsigned d, const std::vector<QVector> &points) {
  const auto basis = monomial_basis(n + 1, d);
  QMatrix m(points.size() * (n + 1), basis.size());
  std::vector<std::vector<Rational>> powers(n + 1);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const QVector &pt = points[p];
    if (pt.size() != n + 1)
      fail(ErrorCode::WrongShape, "point has the wrong number of coordinates");
    for (unsigned i = 0; i <= n; ++i) {
      powers[i].assign(d + 1, Rational(1));
      for (unsigned k = 1; k <= d; ++k)
        powers[i][k] = powers[i][k - 1] * pt[i];
    }
    for (unsigned i = 0; i <= n; ++i) {
      const std::size_t row = p * (n + 1) + i;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Monomial &a = basis[j];
        if (a[i] == 0)
          continue;
        Rational v = a[i];
        for (unsigned k = 0; k <= n; ++k)
          v *= powers[k][a[k] - (k == i ? 1 : 0)];
        m(row, j) = v;
      }
    }
  }
  return m;
}

namespace {

QVector kron(const std::vector<QVector> &factors) {
  QVector out{Rational(1)};
  for (const QVector &f : factors) {
    QVector next;
    next.reserve(out.size() * f.size());
    for (const Rational &a : out)
      for (const Rational &b : f)
        next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

template <class Sample>
std::size_t max_over_trials(const TerraciniOptions &options, Sample sample) {
  const unsigned trials = std::max(1u, options.trials);
  std::vector<std::future<std::size_t>> runs;
  for (unsigned k = 0; k < trials; ++k)
    runs.push_back(std::async(std::launch::async, [&, k] {
      Rng rng(derive_seed(options.seed, k));
      return mat_rank(sample(rng), options.rank);
    }));
  std::size_t best = 0;
  for (auto &r : runs)
    best = std::max(best, r.get());
  return best == 0 ? 0 : best - 1;
}

DimReport make_report(const VarietySpec &spec, unsigned s, std::size_t computed,
                      const TerraciniOptions &options) {
  const std::size_t expected = expected_dim(spec, s);
  const auto known = known_secant_dim(spec, s);
  const bool certified = computed == expected || (known && *known == computed);
  return DimReport{spec,
                   s,
                   computed,
                   expected,
                   static_cast<long>(expected) - static_cast<long>(computed),
                   std::max(1u, options.trials),
                   options.seed,
                   options.rank.arithmetic,
                   known,
                   certified};
}

} // namespace

QMatrix segre_terracini_matrix(const std::vector<unsigned> &dims,
                               const std::vector<std::vector<QVector>> &rank_one_factors) {
  std::size_t width = 1, per_point = 0;
  for (unsigned n : dims) {
    width *= n + 1;
    per_point += n + 1;
  }
  std::vector<QVector> rows;
  rows.reserve(rank_one_factors.size() * per_point);
  for (const auto &factors : rank_one_factors) {
    if (factors.size() != dims.size())
      fail(ErrorCode::WrongShape, "rank-one tensor has the wrong number of factors");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (factors[i].size() != dims[i] + 1)
        fail(ErrorCode::WrongShape, "factor length does not match the Segre dimension");
      for (unsigned k = 0; k <= dims[i]; ++k) {
        std::vector<QVector> replaced = factors;
        replaced[i].assign(dims[i] + 1, Rational(0));
        replaced[i][k] = 1;
        rows.push_back(kron(replaced));
      }
    }
  }
  if (rows.empty())
    return QMatrix(0, width);
  return QMatrix::from_rows(rows);
}

DimReport terracini_dim_veronese(unsigned n, unsigned d, unsigned s,
                                 const TerraciniOptions &options) {
  const VarietySpec spec = VarietySpec::veronese(n, d);
  if (s < 1)
    fail(ErrorCode::InvalidArgument, "s must be at least 1");
  const std::size_t computed = max_over_trials(options, [&](Rng &rng) {
    std::vector<QVector> points;
    for (unsigned i = 0; i < s; ++i)
      points.push_back(random_affine_point(rng, n + 1));
    return veronese_terracini_matrix(n, d, points);
  });
  return make_report(spec, s, computed, options);
}

DimReport terracini_dim_segre(const std::vector<unsigned> &dims, unsigned s,
                              const TerraciniOptions &options) {
  const VarietySpec spec = VarietySpec::segre(dims);
  if (s < 1)
    fail(ErrorCode::InvalidArgument, "s must be at least 1");
  const std::size_t computed = max_over_trials(options, [&](Rng &rng) {
    std::vector<std::vector<QVector>> tensors;
    for (unsigned i = 0; i < s; ++i) {
      std::vector<QVector> factors;
      for (unsigned n : dims)
        factors.push_back(random_affine_point(rng, n + 1));
      tensors.push_back(std::move(factors));
    }
    return segre_terracini_matrix(dims, tensors);
  });
  return make_report(spec, s, computed, options);
}

std::uint64_t big_waring_g(unsigned n, unsigned d) {
  if (n < 1 || d < 1)
    fail(ErrorCode::InvalidArgument, "g(n, d) needs n >= 1 and d >= 1");
  if (d == 2)
    return n + 1;
  if (d == 4 && n == 2)
    return 6;
  if (d == 4 && n == 3)
    return 10;
  if (d == 3 && n == 4)
    return 8;
  if (d == 4 && n == 4)
    return 15;
  const Integer c = binomial(d + n, n);
  Integer q;
  mpz_cdiv_q_ui(q.get_mpz_t(), c.get_mpz_t(), n + 1);
  return q.get_ui();
}

DimReport defect_report(const VarietySpec &spec, unsigned s, const TerraciniOptions &options) {
  if (const auto *v = std::get_if<Veronese>(&spec.kind()))
    return terracini_dim_veronese(v->n, v->d, s, options);
  return terracini_dim_segre(std::get<Segre>(spec.kind()).dims, s, options);
}

std::optional<std::size_t> known_secant_dim(const VarietySpec &spec, unsigned s) {
  if (const auto *v = std::get_if<Veronese>(&spec.kind())) {
    const unsigned n = v->n, d = v->d;
    if (d == 2 && s <= n + 1) {
      // symmetric (n+1)x(n+1) matrices of rank <= s
      const std::size_t all = space_dim(n + 1, 2);
      const std::size_t rest = space_dim(n + 1 - s, 2);
      return all - rest - 1;
    }
    struct Entry {
      unsigned n, d, s;
      std::size_t dim;
    };
    static constexpr Entry kExceptions[] = {
        {2, 4, 5, 13}, {3, 4, 9, 33}, {4, 4, 14, 68}, {4, 3, 7, 33}};
    for (const auto &e : kExceptions)
      if (e.n == n && e.d == d && e.s == s)
        return e.dim;
    return std::nullopt;
  }
  const auto &dims = std::get<Segre>(spec.kind()).dims;
  if (dims == std::vector<unsigned>{1, 1, 1, 1} && s == 3)
    return 13;
  if (dims == std::vector<unsigned>{2, 2, 2} && s == 4)
    return 25;
  return std::nullopt;
}

} // namespace waring
