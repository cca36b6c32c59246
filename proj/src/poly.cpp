#include "waring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "waring/error.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::variable(unsigned num_vars, unsigned index, unsigned power) {
  std::vector<unsigned> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial &other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (other.exponents_[i] > exponents_[i])
      return false;
  return true;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  std::vector<unsigned> e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] += b.exponents_[i];
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// HomogPoly

HomogPoly HomogPoly::from_monomial(const Monomial &m, const Rational &coeff) {
  HomogPoly p(m.num_vars(), m.degree());
  p.add_term(m, coeff);
  return p;
}

HomogPoly HomogPoly::variable(unsigned num_vars, unsigned index) {
  return from_monomial(Monomial::variable(num_vars, index));
}

HomogPoly HomogPoly::constant(unsigned num_vars, const Rational &c) {
  return from_monomial(Monomial::one(num_vars), c);
}

Rational HomogPoly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogPoly::add_term(const Monomial &m, const Rational &c) {
  if (m.num_vars() != num_vars_ || m.degree() != degree_)
    fail(ErrorCode::NotHomogeneous, "term does not match polynomial degree");
  if (waring::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (waring::is_zero(it->second))
      terms_.erase(it);
  }
}

Rational HomogPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_)
    fail(ErrorCode::WrongShape, "evaluation point has wrong length");
  Rational sum = 0, term, p;
  for (const auto &[m, c] : terms_) {
    term = c;
    for (unsigned i = 0; i < num_vars_; ++i) {
      if (m[i] == 0)
        continue;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

HomogPoly HomogPoly::partial(unsigned var) const {
  HomogPoly d(num_vars_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto &[m, c] : terms_) {
    if (m[var] == 0)
      continue;
    std::vector<unsigned> e = m.exponents();
    --e[var];
    d.add_term(Monomial(std::move(e)), c * m[var]);
  }
  return d;
}

HomogPoly &HomogPoly::operator+=(const HomogPoly &other) {
  if (num_vars_ != other.num_vars_)
    fail(ErrorCode::InvalidArgument, "polynomials in different rings");
  if (other.is_zero())
    return *this;
  if (is_zero())
    degree_ = other.degree_;
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

HomogPoly &HomogPoly::operator-=(const HomogPoly &other) {
  return *this += Rational(-1) * other;
}

HomogPoly &HomogPoly::operator*=(const Rational &s) {
  if (waring::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= s;
  return *this;
}

HomogPoly operator*(const HomogPoly &a, const HomogPoly &b) {
  if (a.num_vars_ != b.num_vars_)
    fail(ErrorCode::InvalidArgument, "polynomials in different rings");
  HomogPoly p(a.num_vars_, a.degree_ + b.degree_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      p.add_term(ma * mb, ca * cb);
  return p;
}

bool operator==(const HomogPoly &a, const HomogPoly &b) {
  if (a.num_vars_ != b.num_vars_)
    return false;
  if (a.is_zero() || b.is_zero())
    return a.is_zero() && b.is_zero();
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Points and linear forms

LinearForm::LinearForm(QVector coefficients) : coeffs_(std::move(coefficients)) {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &q) { return is_zero(q); }))
    fail(ErrorCode::InvalidArgument, "linear form must have a nonzero coefficient");
}

HomogPoly LinearForm::to_poly() const {
  HomogPoly p(num_vars(), 1);
  for (unsigned i = 0; i < num_vars(); ++i)
    p.add_term(Monomial::variable(num_vars(), i), coeffs_[i]);
  return p;
}

ProjPoint::ProjPoint(QVector coordinates) : coords_(std::move(coordinates)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational &q) { return is_zero(q); }))
    fail(ErrorCode::InvalidArgument, "projective point must have a nonzero coordinate");
}

QVector ProjPoint::canonical() const {
  auto lead = std::find_if(coords_.begin(), coords_.end(),
                           [](const Rational &q) { return !is_zero(q); });
  const Rational scale = *lead;
  QVector out(coords_);
  for (auto &c : out)
    c /= scale;
  return out;
}

// ---------------------------------------------------------------------------
// Monomial bases

std::size_t space_dim(unsigned num_vars, unsigned degree) {
  if (num_vars == 0)
    return degree == 0 ? 1 : 0;
  return binomial(num_vars + degree - 1, degree).get_ui();
}

namespace {

void enumerate(unsigned var, unsigned remaining, std::vector<unsigned> &e,
               std::vector<Monomial> &out) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    out.emplace_back(e);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    e[var] = k;
    enumerate(var + 1, remaining - k, e, out);
  }
}

} // namespace

std::vector<Monomial> monomial_basis(unsigned num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0)
      out.emplace_back();
    return out;
  }
  out.reserve(space_dim(num_vars, degree));
  std::vector<unsigned> e(num_vars, 0);
  enumerate(0, degree, e, out);
  return out;
}

MonomialIndex::MonomialIndex(unsigned num_vars, unsigned degree)
    : basis_(monomial_basis(num_vars, degree)) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    position_.emplace(basis_[i], i);
}

std::size_t MonomialIndex::at(const Monomial &m) const {
  auto it = position_.find(m);
  if (it == position_.end())
    fail(ErrorCode::InvalidArgument, "monomial outside the basis");
  return it->second;
}

QVector coefficient_vector(const HomogPoly &f) {
  MonomialIndex idx(f.num_vars(), f.degree());
  QVector v(idx.size());
  for (const auto &[m, c] : f.terms())
    v[idx.at(m)] = c;
  return v;
}

HomogPoly from_coefficients(unsigned num_vars, unsigned degree,
                            std::span<const Rational> coefficients) {
  const auto basis = monomial_basis(num_vars, degree);
  if (coefficients.size() != basis.size())
    fail(ErrorCode::WrongShape, "coefficient vector does not match basis size");
  HomogPoly p(num_vars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    p.add_term(basis[i], coefficients[i]);
  return p;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
public:
  Parser(std::string_view text, unsigned num_vars, char prefix)
      : text_(text), num_vars_(num_vars), prefix_(prefix) {}

  HomogPoly run() {
    std::vector<std::pair<Monomial, Rational>> terms;
    skip_ws();
    if (done())
      error("empty polynomial");
    bool first = true;
    while (!done()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      auto [m, c] = term();
      terms.emplace_back(std::move(m), sign * c);
      first = false;
      skip_ws();
    }
    const unsigned degree = terms.front().first.degree();
    if (degree > kMaxParseDegree)
      fail(ErrorCode::DegreeOutOfRange, "degree exceeds " + std::to_string(kMaxParseDegree));
    HomogPoly p(num_vars_, degree);
    for (const auto &[m, c] : terms) {
      if (m.degree() != degree)
        fail(ErrorCode::NotHomogeneous, "polynomial is not homogeneous");
      p.add_term(m, c);
    }
    return p;
  }

private:
  std::pair<Monomial, Rational> term() {
    std::vector<unsigned> e(num_vars_, 0);
    Rational c = 1;
    for (;;) {
      skip_ws();
      if (done())
        error("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else if (peek() == prefix_) {
        get();
        const unsigned long idx = integer();
        if (idx >= num_vars_)
          error("variable index out of range");
        unsigned long power = 1;
        skip_ws();
        if (!done() && peek() == '^') {
          get();
          skip_ws();
          power = integer();
          if (power > kMaxParseDegree)
            fail(ErrorCode::DegreeOutOfRange, "exponent exceeds " + std::to_string(kMaxParseDegree));
        }
        e[idx] += static_cast<unsigned>(power);
      } else {
        error(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (done() || peek() != '*')
        break;
      get();
    }
    return {Monomial(std::move(e)), c};
  }

  Rational number() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (!done() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
      if (den == pos_)
        error("expected denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  unsigned long integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_ || pos_ - start > 6)
      error("expected a small integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string &msg) const {
    fail(ErrorCode::Parse, msg + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned num_vars_;
  char prefix_;
};

} // namespace

HomogPoly parse_poly(std::string_view text, unsigned num_vars, char prefix) {
  if (num_vars == 0 || num_vars > kMaxParseVars)
    fail(ErrorCode::InvalidArgument,
         "number of variables must be in 1.." + std::to_string(kMaxParseVars));
  return Parser(text, num_vars, prefix).run();
}

unsigned infer_num_vars(std::string_view text, char prefix) {
  unsigned n = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != prefix)
      continue;
    std::size_t j = i + 1;
    unsigned idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 7)
      idx = idx * 10 + static_cast<unsigned>(text[j++] - '0');
    if (j > i + 1)
      n = std::max(n, idx + 1);
  }
  return n;
}

std::string render(const HomogPoly &f, char prefix) {
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (unsigned i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += prefix + std::to_string(i);
      if (m[i] > 1)
        mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Apolarity action and Veronese helpers

HomogPoly power_linear(const LinearForm &l, unsigned d) {
  const unsigned n = l.num_vars();
  const Integer dfact = factorial(d);
  HomogPoly p(n, d);
  Rational coeff, pw;
  for (const Monomial &m : monomial_basis(n, d)) {
    coeff = dfact;
    for (unsigned i = 0; i < n; ++i) {
      if (m[i] == 0)
        continue;
      const Rational &li = l.coefficients()[i];
      if (is_zero(li)) {
        coeff = 0;
        break;
      }
      mpz_pow_ui(pw.get_num_mpz_t(), li.get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), li.get_den_mpz_t(), m[i]);
      coeff *= pw;
      coeff /= factorial(m[i]);
    }
    p.add_term(m, coeff);
  }
  return p;
}

HomogPoly apolar_apply(const HomogPoly &op, const HomogPoly &f) {
  if (op.num_vars() != f.num_vars())
    fail(ErrorCode::InvalidArgument, "operator and form have different variable counts");
  if (op.degree() > f.degree())
    return HomogPoly(f.num_vars(), 0);
  HomogPoly out(f.num_vars(), f.degree() - op.degree());
  Integer falling;
  for (const auto &[b, cb] : op.terms()) {
    for (const auto &[a, ca] : f.terms()) {
      if (!a.divisible_by(b))
        continue;
      falling = 1;
      std::vector<unsigned> rest(a.exponents());
      for (unsigned i = 0; i < rest.size(); ++i) {
        for (unsigned k = 0; k < b[i]; ++k)
          falling *= a[i] - k;
        rest[i] -= b[i];
      }
      out.add_term(Monomial(std::move(rest)), cb * ca * falling);
    }
  }
  return out;
}

std::vector<HomogPoly> veronese_tangent_basis(const LinearForm &l, unsigned d) {
  if (d == 0)
    fail(ErrorCode::DegreeOutOfRange, "degree must be at least 1");
  const HomogPoly base = power_linear(l, d - 1);
  std::vector<HomogPoly> out;
  for (unsigned i = 0; i < l.num_vars(); ++i)
    out.push_back(base * HomogPoly::variable(l.num_vars(), i));
  return out;
}

} // namespace waring
