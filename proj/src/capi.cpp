#include "waring/waring.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <utility>

#include "waring/apolarity.hpp"
#include "waring/error.hpp"
#include "waring/fixtures.hpp"
#include "waring/random.hpp"
#include "waring/secant.hpp"
#include "waring/tensor.hpp"

struct waring_poly {
  waring::HomogPoly value;
};
struct waring_poly_list {
  std::vector<waring_poly> items;
};
struct waring_matrix {
  waring::QMatrix value;
};
struct waring_tensor {
  waring::DenseTensor value;
};

namespace {

thread_local std::string last_error;

waring_status to_status(waring::ErrorCode code) {
  using waring::ErrorCode;
  switch (code) {
  case ErrorCode::Parse:
    return WARING_ERR_PARSE;
  case ErrorCode::NotHomogeneous:
    return WARING_ERR_NOT_HOMOGENEOUS;
  case ErrorCode::DegreeOutOfRange:
    return WARING_ERR_DEGREE_OUT_OF_RANGE;
  case ErrorCode::ZeroPolynomial:
    return WARING_ERR_ZERO_POLYNOMIAL;
  case ErrorCode::NonSquare:
    return WARING_ERR_NON_SQUARE;
  case ErrorCode::WrongShape:
    return WARING_ERR_WRONG_SHAPE;
  case ErrorCode::InvalidModeSet:
    return WARING_ERR_INVALID_MODE_SET;
  case ErrorCode::DuplicatePoints:
    return WARING_ERR_DUPLICATE_POINTS;
  case ErrorCode::AllZero:
    return WARING_ERR_ALL_ZERO;
  case ErrorCode::InvalidArgument:
    return WARING_ERR_INVALID_ARGUMENT;
  case ErrorCode::Json:
    return WARING_ERR_JSON;
  }
  return WARING_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn> waring_status guarded(Fn &&fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const waring::Error &e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception &e) {
    last_error = e.what();
    return WARING_ERR_INTERNAL;
  }
}

waring_status null_argument() {
  last_error = "null argument";
  return WARING_ERR_INVALID_ARGUMENT;
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T> T *dup_array(const std::vector<T> &v) {
  T *out = static_cast<T *>(std::malloc(std::max<std::size_t>(1, v.size()) * sizeof(T)));
  if (!out)
    throw std::bad_alloc();
  std::copy(v.begin(), v.end(), out);
  return out;
}

waring::RankOptions rank_options(const waring_config *config) {
  waring::RankOptions o;
  if (config) {
    o.arithmetic = config->arithmetic == WARING_MODULAR ? waring::Arithmetic::ModularProbabilistic
                                                        : waring::Arithmetic::ExactRational;
    o.modulus = config->modulus;
    if (o.arithmetic == waring::Arithmetic::ModularProbabilistic && !waring::is_prime(o.modulus))
      waring::fail(waring::ErrorCode::InvalidArgument, "modulus must be prime");
  }
  return o;
}

waring::RunConfig run_config(const waring_config *config) {
  waring::RunConfig c;
  if (config) {
    c.seed = config->seed;
    c.trials = config->trials;
  }
  c.rank = rank_options(config);
  return c;
}

void fill_report(const waring::DimReport &r, waring_dim_report *out) {
  out->computed_dim = r.computed_dim;
  out->expected_dim = r.expected_dim;
  out->ambient_dim = r.spec.ambient_dim();
  out->defect = r.defect;
  out->trials = r.trials;
  out->seed = r.seed;
  out->arithmetic =
      r.arithmetic == waring::Arithmetic::ModularProbabilistic ? WARING_MODULAR : WARING_EXACT;
  out->has_known_dim = r.known_dim.has_value();
  out->known_dim = r.known_dim.value_or(0);
  out->certified = r.certified;
}

} // namespace

extern "C" {

void waring_config_init(waring_config *config) {
  if (!config)
    return;
  config->seed = 0;
  config->trials = 3;
  config->arithmetic = WARING_EXACT;
  config->modulus = waring::kDefaultModulus;
}

const char *waring_last_error(void) { return last_error.c_str(); }

const char *waring_status_name(waring_status status) {
  switch (status) {
  case WARING_OK:
    return "ok";
  case WARING_ERR_PARSE:
    return "parse_error";
  case WARING_ERR_NOT_HOMOGENEOUS:
    return "not_homogeneous";
  case WARING_ERR_DEGREE_OUT_OF_RANGE:
    return "degree_out_of_range";
  case WARING_ERR_ZERO_POLYNOMIAL:
    return "zero_polynomial";
  case WARING_ERR_NON_SQUARE:
    return "non_square";
  case WARING_ERR_WRONG_SHAPE:
    return "wrong_shape";
  case WARING_ERR_INVALID_MODE_SET:
    return "invalid_mode_set";
  case WARING_ERR_DUPLICATE_POINTS:
    return "duplicate_points";
  case WARING_ERR_ALL_ZERO:
    return "all_zero";
  case WARING_ERR_INVALID_ARGUMENT:
    return "invalid_argument";
  case WARING_ERR_JSON:
    return "json_error";
  case WARING_INFEASIBLE:
    return "infeasible";
  case WARING_ERR_INTERNAL:
    return "internal_error";
  }
  return "unknown";
}

const char *waring_version(void) { return "1.0.0"; }

void waring_string_free(char *s) { std::free(s); }
void waring_free(void *p) { std::free(p); }

// ---- polynomials -----------------------------------------------------------

waring_status waring_poly_parse(const char *text, unsigned num_vars, waring_poly **out) {
  if (!text || !out)
    return null_argument();
  return guarded([&] {
    if (num_vars == 0)
      num_vars = waring::infer_num_vars(text);
    *out = new waring_poly{waring::parse_poly(text, num_vars)};
    return WARING_OK;
  });
}

waring_status waring_poly_random(unsigned num_vars, unsigned degree, uint64_t seed, long bound,
                                 waring_poly **out) {
  if (!out)
    return null_argument();
  return guarded([&] {
    if (num_vars == 0 || num_vars > waring::kMaxParseVars || degree > waring::kMaxParseDegree)
      waring::fail(waring::ErrorCode::InvalidArgument, "random form size out of range");
    waring::Rng rng(seed);
    *out = new waring_poly{waring::random_form(rng, num_vars, degree, bound)};
    return WARING_OK;
  });
}

void waring_poly_free(waring_poly *p) { delete p; }
unsigned waring_poly_num_vars(const waring_poly *p) { return p ? p->value.num_vars() : 0; }
unsigned waring_poly_degree(const waring_poly *p) { return p ? p->value.degree() : 0; }

waring_status waring_poly_render(const waring_poly *p, char prefix, char **out) {
  if (!p || !out)
    return null_argument();
  return guarded([&] {
    *out = dup_string(waring::render(p->value, prefix));
    return WARING_OK;
  });
}

size_t waring_poly_list_size(const waring_poly_list *l) { return l ? l->items.size() : 0; }

const waring_poly *waring_poly_list_at(const waring_poly_list *l, size_t i) {
  return l && i < l->items.size() ? &l->items[i] : nullptr;
}

void waring_poly_list_free(waring_poly_list *l) { delete l; }

// ---- matrices --------------------------------------------------------------

void waring_matrix_free(waring_matrix *m) { delete m; }
size_t waring_matrix_rows(const waring_matrix *m) { return m ? m->value.rows() : 0; }
size_t waring_matrix_cols(const waring_matrix *m) { return m ? m->value.cols() : 0; }

waring_status waring_matrix_entry(const waring_matrix *m, size_t r, size_t c, char **out) {
  if (!m || !out)
    return null_argument();
  return guarded([&] {
    if (r >= m->value.rows() || c >= m->value.cols())
      waring::fail(waring::ErrorCode::InvalidArgument, "matrix index out of range");
    *out = dup_string(waring::to_string(m->value(r, c)));
    return WARING_OK;
  });
}

waring_status waring_matrix_rank(const waring_matrix *m, const waring_config *config,
                                 size_t *rank) {
  if (!m || !rank)
    return null_argument();
  return guarded([&] {
    *rank = waring::mat_rank(m->value, rank_options(config));
    return WARING_OK;
  });
}

waring_status waring_matrix_det(const waring_matrix *m, char **out) {
  if (!m || !out)
    return null_argument();
  return guarded([&] {
    *out = dup_string(waring::to_string(waring::mat_det(m->value)));
    return WARING_OK;
  });
}

// ---- apolarity -------------------------------------------------------------

waring_status waring_catalecticant(const waring_poly *f, unsigned t, waring_matrix **out) {
  if (!f || !out)
    return null_argument();
  return guarded([&] {
    *out = new waring_matrix{waring::catalecticant(f->value, t).matrix};
    return WARING_OK;
  });
}

waring_status waring_perp_piece(const waring_poly *f, unsigned t, waring_poly_list **out) {
  if (!f || !out)
    return null_argument();
  return guarded([&] {
    auto list = std::make_unique<waring_poly_list>();
    for (auto &p : waring::perp_piece(f->value, t))
      list->items.push_back(waring_poly{std::move(p)});
    *out = list.release();
    return WARING_OK;
  });
}

waring_status waring_hilbert_function(const waring_poly *f, const waring_config *config,
                                      size_t **hf, size_t **perp_dims, size_t *length) {
  if (!f || !hf || !perp_dims || !length)
    return null_argument();
  return guarded([&] {
    const auto profile = waring::hilbert_function(f->value, rank_options(config));
    *hf = dup_array(profile.hf);
    *perp_dims = dup_array(profile.perp_dims);
    *length = profile.hf.size();
    return WARING_OK;
  });
}

waring_status waring_sylvester_rank(const waring_poly *f, uint64_t seed, uint64_t *rank,
                                    waring_rank_branch *branch, char **witness) {
  if (!f || !rank)
    return null_argument();
  return guarded([&] {
    const auto cert = waring::sylvester_rank(f->value, seed);
    *rank = cert.rank;
    if (branch)
      *branch = static_cast<waring_rank_branch>(cert.branch);
    if (witness)
      *witness = dup_string(waring::render(cert.witness, 'y'));
    return WARING_OK;
  });
}

waring_status waring_monomial_rank(const unsigned *exponents, size_t count, uint64_t *rank) {
  if ((!exponents && count) || !rank)
    return null_argument();
  return guarded([&] {
    *rank = waring::monomial_rank(std::vector<unsigned>(exponents, exponents + count));
    return WARING_OK;
  });
}

waring_status waring_quadratic_rank(const waring_poly *f, const waring_config *config,
                                    size_t *rank) {
  if (!f || !rank)
    return null_argument();
  return guarded([&] {
    *rank = waring::quadratic_rank(f->value, rank_options(config));
    return WARING_OK;
  });
}

waring_status waring_decompose_check(const waring_poly *f, const char *const *points,
                                     size_t num_points, char ***coefficients) {
  if (!f || (!points && num_points) || !coefficients)
    return null_argument();
  return guarded([&] {
    const unsigned n = f->value.num_vars();
    std::vector<waring::ProjPoint> pts;
    for (size_t i = 0; i < num_points; ++i) {
      waring::QVector coords;
      for (unsigned k = 0; k < n; ++k) {
        const char *s = points[i * n + k];
        if (!s)
          waring::fail(waring::ErrorCode::InvalidArgument, "null coordinate");
        coords.push_back(waring::parse_rational(s));
      }
      pts.emplace_back(std::move(coords));
    }
    const auto sol = waring::decompose_check(f->value, pts);
    if (!sol) {
      *coefficients = nullptr;
      last_error = "form is not a combination of the given powers";
      return WARING_INFEASIBLE;
    }
    std::vector<char *> strs;
    for (const auto &c : *sol)
      strs.push_back(dup_string(waring::to_string(c)));
    *coefficients = dup_array(strs);
    return WARING_OK;
  });
}

// ---- secant varieties ------------------------------------------------------

waring_status waring_secant_veronese(unsigned n, unsigned d, unsigned s,
                                     const waring_config *config, waring_dim_report *out) {
  if (!out)
    return null_argument();
  return guarded([&] {
    fill_report(waring::terracini_dim_veronese(n, d, s, run_config(config)), out);
    return WARING_OK;
  });
}

waring_status waring_secant_segre(const unsigned *dims, size_t num_factors, unsigned s,
                                  const waring_config *config, waring_dim_report *out) {
  if ((!dims && num_factors) || !out)
    return null_argument();
  return guarded([&] {
    fill_report(waring::terracini_dim_segre(std::vector<unsigned>(dims, dims + num_factors), s,
                                            run_config(config)),
                out);
    return WARING_OK;
  });
}

waring_status waring_expected_dim_veronese(unsigned n, unsigned d, unsigned s, size_t *out) {
  if (!out)
    return null_argument();
  return guarded([&] {
    *out = waring::expected_dim(waring::VarietySpec::veronese(n, d), s);
    return WARING_OK;
  });
}

waring_status waring_expected_dim_segre(const unsigned *dims, size_t num_factors, unsigned s,
                                        size_t *out) {
  if ((!dims && num_factors) || !out)
    return null_argument();
  return guarded([&] {
    *out = waring::expected_dim(
        waring::VarietySpec::segre(std::vector<unsigned>(dims, dims + num_factors)), s);
    return WARING_OK;
  });
}

waring_status waring_big_waring_g(unsigned n, unsigned d, uint64_t *out) {
  if (!out)
    return null_argument();
  return guarded([&] {
    *out = waring::big_waring_g(n, d);
    return WARING_OK;
  });
}

// ---- tensors ---------------------------------------------------------------

waring_status waring_tensor_from_json(const char *text, waring_tensor **out) {
  if (!text || !out)
    return null_argument();
  return guarded([&] {
    *out = new waring_tensor{waring::tensor_from_json(text)};
    return WARING_OK;
  });
}

waring_status waring_tensor_to_json(const waring_tensor *t, char **out) {
  if (!t || !out)
    return null_argument();
  return guarded([&] {
    *out = dup_string(waring::tensor_to_json(t->value));
    return WARING_OK;
  });
}

void waring_tensor_free(waring_tensor *t) { delete t; }

waring_status waring_matmul_tensor(unsigned n, waring_tensor **out) {
  if (!out)
    return null_argument();
  return guarded([&] {
    *out = new waring_tensor{waring::matmul_tensor(n)};
    return WARING_OK;
  });
}

waring_status waring_tensor_flatten(const waring_tensor *t, const unsigned *left_modes,
                                    size_t count, waring_matrix **out) {
  if (!t || (!left_modes && count) || !out)
    return null_argument();
  return guarded([&] {
    *out = new waring_matrix{
        waring::flatten(t->value, std::vector<unsigned>(left_modes, left_modes + count))};
    return WARING_OK;
  });
}

waring_status waring_multilinear_rank(const waring_tensor *t, const waring_config *config,
                                      size_t **ranks, size_t *order) {
  if (!t || !ranks || !order)
    return null_argument();
  return guarded([&] {
    const auto r = waring::multilinear_rank(t->value, rank_options(config));
    *ranks = dup_array(r);
    *order = r.size();
    return WARING_OK;
  });
}

waring_status waring_gss_minor_test(const waring_tensor *t, size_t r, int *holds) {
  if (!t || !holds)
    return null_argument();
  return guarded([&] {
    *holds = waring::gss_minor_test(t->value, r) ? 1 : 0;
    return WARING_OK;
  });
}

waring_status waring_strassen_matrix(const waring_tensor *t, waring_matrix **out) {
  if (!t || !out)
    return null_argument();
  return guarded([&] {
    *out = new waring_matrix{waring::strassen_matrix(t->value).matrix};
    return WARING_OK;
  });
}

waring_status waring_strassen_expand(size_t *terms, unsigned *degree) {
  if (!terms || !degree)
    return null_argument();
  return guarded([&] {
    const auto det = waring::strassen_det_symbolic();
    *terms = det.terms().size();
    *degree = det.degree();
    return WARING_OK;
  });
}

// ---- fixtures --------------------------------------------------------------

size_t waring_fixture_count(void) { return waring::paper_fixtures().size(); }

const char *waring_fixture_name(size_t index) {
  const auto &all = waring::paper_fixtures();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

waring_status waring_fixture_run(size_t index, const waring_config *config, int *passed,
                                 char **detail) {
  if (!passed)
    return null_argument();
  return guarded([&] {
    const auto outcome = waring::run_fixture(index, run_config(config));
    *passed = outcome.passed ? 1 : 0;
    if (detail)
      *detail = dup_string(outcome.detail);
    return WARING_OK;
  });
}

} // extern "C"
