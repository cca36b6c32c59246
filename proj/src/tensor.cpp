#include "waring/tensor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

std::size_t product(const std::vector<std::size_t> &shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

} // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), entries_(product(shape_)) {}

DenseTensor::DenseTensor(std::vector<std::size_t> shape, std::vector<Rational> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != product(shape_))
    fail(ErrorCode::WrongShape, "tensor entry count " + std::to_string(entries_.size()) +
                                    " does not match shape product " +
                                    std::to_string(product(shape_)));
}

DenseTensor DenseTensor::rank_one(const std::vector<QVector> &factors, const Rational &coeff) {
  std::vector<std::size_t> shape;
  std::vector<Rational> entries{coeff};
  for (const QVector &f : factors) {
    shape.push_back(f.size());
    std::vector<Rational> next;
    next.reserve(entries.size() * f.size());
    for (const Rational &a : entries)
      for (const Rational &b : f)
        next.push_back(a * b);
    entries = std::move(next);
  }
  return DenseTensor(std::move(shape), std::move(entries));
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size())
    fail(ErrorCode::WrongShape, "index has the wrong order");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i])
      fail(ErrorCode::WrongShape, "index out of range");
    flat = flat * shape_[i] + index[i];
  }
  return flat;
}

DenseTensor &DenseTensor::operator+=(const DenseTensor &other) {
  if (shape_ != other.shape_)
    fail(ErrorCode::WrongShape, "tensor sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  return *this;
}

DenseTensor operator*(const Rational &s, DenseTensor a) {
  for (auto &e : a.entries_)
    e *= s;
  return a;
}

// ---------------------------------------------------------------------------

QMatrix flatten(const DenseTensor &t, const std::vector<unsigned> &left_modes) {
  const std::size_t order = t.order();
  std::vector<bool> left(order, false);
  for (unsigned m : left_modes) {
    if (m >= order || left[m])
      fail(ErrorCode::InvalidModeSet, "invalid or repeated mode " + std::to_string(m));
    left[m] = true;
  }
  if (left_modes.empty() || left_modes.size() == order)
    fail(ErrorCode::InvalidModeSet, "flattening needs a nonempty proper subset of modes");

  std::vector<std::size_t> row_modes, col_modes;
  for (std::size_t m = 0; m < order; ++m)
    (left[m] ? row_modes : col_modes).push_back(m);
  std::size_t rows = 1, cols = 1;
  for (auto m : row_modes)
    rows *= t.shape()[m];
  for (auto m : col_modes)
    cols *= t.shape()[m];

  QMatrix out(rows, cols);
  std::vector<std::size_t> index(order, 0);
  const auto entries = t.entries();
  for (std::size_t flat = 0; flat < entries.size(); ++flat) {
    std::size_t r = 0, c = 0;
    for (auto m : row_modes)
      r = r * t.shape()[m] + index[m];
    for (auto m : col_modes)
      c = c * t.shape()[m] + index[m];
    out(r, c) = entries[flat];
    for (std::size_t k = order; k-- > 0;) {
      if (++index[k] < t.shape()[k])
        break;
      index[k] = 0;
    }
  }
  return out;
}

std::vector<std::size_t> multilinear_rank(const DenseTensor &t, const RankOptions &options) {
  if (t.order() < 2)
    fail(ErrorCode::InvalidModeSet, "multilinear rank needs order >= 2");
  std::vector<std::size_t> ranks;
  for (unsigned m = 0; m < t.order(); ++m)
    ranks.push_back(mat_rank(flatten(t, {m}), options));
  return ranks;
}

bool gss_minor_test(const DenseTensor &t, std::size_t r) {
  if (r < 1)
    fail(ErrorCode::InvalidArgument, "r must be at least 1");
  const auto ranks = multilinear_rank(t);
  return std::all_of(ranks.begin(), ranks.end(), [r](std::size_t k) { return k <= r; });
}

DenseTensor matmul_tensor(unsigned n) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "matrix size must be at least 1");
  const std::size_t n2 = std::size_t{n} * n;
  DenseTensor t({n2, n2, n2});
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned l = 0; l < n; ++l)
        t.at({i * n + j, j * n + l, i * n + l}) = 1;
  return t;
}

StrassenMatrix strassen_matrix(const DenseTensor &t) {
  if (t.shape() != std::vector<std::size_t>{3, 3, 3})
    fail(ErrorCode::WrongShape, "Strassen's matrix needs a 3x3x3 tensor");
  // (block row, block col) -> (slice, sign); slice < 0 marks a zero block.
  static constexpr int kSlice[3][3] = {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}};
  static constexpr int kSign[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  QMatrix m(9, 9);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      if (kSlice[a][b] < 0)
        continue;
      const auto slice = static_cast<std::size_t>(kSlice[a][b]);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          m(3 * a + j, 3 * b + k) = kSign[a][b] * t.at({slice, j, k});
    }
  return {t, std::move(m)};
}

HomogPoly symbolic_determinant(const std::vector<std::vector<HomogPoly>> &m) {
  const std::size_t n = m.size();
  if (n == 0)
    fail(ErrorCode::NonSquare, "empty symbolic matrix");
  if (n > 31)
    fail(ErrorCode::InvalidArgument, "symbolic determinant limited to 31 columns");
  for (const auto &row : m)
    if (row.size() != n)
      fail(ErrorCode::NonSquare, "symbolic determinant of a non-square matrix");
  const unsigned vars = m[0][0].num_vars();

  // minors[S] = det of the first |S| rows restricted to the columns in S.
  std::unordered_map<std::uint32_t, HomogPoly> minors;
  minors.emplace(0u, HomogPoly::constant(vars, 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<std::uint32_t, HomogPoly> next;
    for (const auto &[mask, minor] : minors) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1u || m[k][j].is_zero())
          continue;
        // Laplace along the last row: sign (-1)^(#columns of S beyond j).
        const int above = std::popcount(mask >> (j + 1));
        HomogPoly term = m[k][j] * minor;
        if (above % 2)
          term *= Rational(-1);
        const std::uint32_t key = mask | (1u << j);
        auto it = next.find(key);
        if (it == next.end())
          next.emplace(key, std::move(term));
        else
          it->second += term;
      }
    }
    std::erase_if(next, [](const auto &kv) { return kv.second.is_zero(); });
    minors = std::move(next);
  }
  auto it = minors.find((1u << n) - 1u);
  return it == minors.end() ? HomogPoly(vars, static_cast<unsigned>(n)) : it->second;
}

HomogPoly strassen_det_symbolic() {
  constexpr unsigned kVars = 27;
  DenseTensor index_tensor({3, 3, 3});
  for (unsigned v = 0; v < kVars; ++v)
    index_tensor.at({v / 9, (v / 3) % 3, v % 3}) = v + 1; // 1-based marker, sign-free
  const QMatrix layout = strassen_matrix(index_tensor).matrix;
  std::vector<std::vector<HomogPoly>> m(9, std::vector<HomogPoly>(9, HomogPoly(kVars, 1)));
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) {
      const Rational &e = layout(r, c);
      if (is_zero(e))
        continue;
      const unsigned v = static_cast<unsigned>(Rational(abs(e)).get_num().get_ui()) - 1;
      m[r][c] = HomogPoly::from_monomial(Monomial::variable(kVars, v), sgn(e));
    }
  return symbolic_determinant(m);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

Rational json_rational(const json &v) {
  if (v.is_number_integer())
    return Rational(Integer(v.dump(), 10));
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  fail(ErrorCode::Json, "tensor entries must be integers or \"p/q\" strings");
}

json rational_json(const Rational &q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return to_string(q);
}

} // namespace

DenseTensor tensor_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    fail(ErrorCode::Json, std::string("malformed tensor JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail(ErrorCode::Json, "tensor JSON must be an object");
  try {
    if (doc.contains("rank_one_sum")) {
      const json &terms = doc.at("rank_one_sum");
      if (!terms.is_array() || terms.empty())
        fail(ErrorCode::Json, "rank_one_sum must be a nonempty array");
      DenseTensor sum;
      bool first = true;
      for (const json &term : terms) {
        std::vector<QVector> factors;
        for (const json &f : term.at("factors")) {
          QVector v;
          for (const json &x : f)
            v.push_back(json_rational(x));
          factors.push_back(std::move(v));
        }
        const Rational coeff = term.contains("coeff") ? json_rational(term.at("coeff")) : Rational(1);
        DenseTensor t = DenseTensor::rank_one(factors, coeff);
        if (first)
          sum = std::move(t);
        else
          sum += t;
        first = false;
      }
      return sum;
    }
    std::vector<std::size_t> shape = doc.at("shape").get<std::vector<std::size_t>>();
    std::vector<Rational> entries;
    for (const json &x : doc.at("entries"))
      entries.push_back(json_rational(x));
    return DenseTensor(std::move(shape), std::move(entries));
  } catch (const json::exception &e) {
    fail(ErrorCode::Json, std::string("invalid tensor JSON: ") + e.what());
  }
}

std::string tensor_to_json(const DenseTensor &t) {
  json entries = json::array();
  for (const Rational &q : t.entries())
    entries.push_back(rational_json(q));
  return json{{"shape", t.shape()}, {"entries", std::move(entries)}}.dump();
}

} // namespace waring
