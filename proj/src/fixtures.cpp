#include "waring/fixtures.hpp"

#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/error.hpp"
#include "waring/random.hpp"
#include "waring/tensor.hpp"

namespace waring {

namespace {

template <class T> std::string join(const std::vector<T> &v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string join(const QVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

template <class T, class U>
FixtureOutcome expect_equal(const T &got, const U &want, const std::string &what) {
  std::ostringstream os;
  os << what << " = " << got << " (expected " << want << ")";
  return {got == want, os.str()};
}

FixtureOutcome all_of(const std::vector<FixtureOutcome> &parts) {
  FixtureOutcome out{true, ""};
  for (const auto &p : parts) {
    out.passed = out.passed && p.passed;
    out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
  }
  return out;
}

HomogPoly poly(const char *text, unsigned vars) { return parse_poly(text, vars); }

DenseTensor random_rank_one(Rng &rng, const std::vector<std::size_t> &shape) {
  std::vector<QVector> factors;
  for (std::size_t n : shape) {
    QVector f(n);
    for (auto &x : f)
      x = random_integer(rng, -20, 20);
    if (std::all_of(f.begin(), f.end(), [](const Rational &q) { return is_zero(q); }))
      f[0] = 1;
    factors.push_back(std::move(f));
  }
  return DenseTensor::rank_one(factors);
}

// Printed catalecticant of the generic ternary quartic at t = 2: each entry is
// multiplier * coefficient letter, letters a..p (no n) in basis order.
constexpr const char *kQuarticCatalecticant[6][6] = {
    {"12a", "3b", "3c", "2d", "e", "2f"},  {"6b", "4d", "2e", "6g", "2h", "2i"},
    {"6c", "2e", "4f", "2h", "2i", "6j"},  {"2d", "3g", "h", "12k", "3l", "2m"},
    {"2e", "2h", "2i", "6l", "4m", "6o"},  {"2f", "i", "3j", "2m", "3o", "12p"}};

Rational printed_entry(const char *cell, const QVector &coeffs) {
  static const std::string kLetters = "abcdefghijklmop";
  std::string s(cell);
  const char letter = s.back();
  s.pop_back();
  const Rational mult = s.empty() ? Rational(1) : parse_rational(s);
  return mult * coeffs.at(kLetters.find(letter));
}

FixtureOutcome hf_fixture(const HomogPoly &f, const std::vector<std::size_t> &want,
                          const RunConfig &config, const std::string &label) {
  return expect_equal(join(hilbert_function(f, config.rank).hf), join(want), label);
}

std::vector<Fixture> build() {
  std::vector<Fixture> fx;
  auto add = [&](std::string name, bool generic, auto fn) {
    fx.push_back({std::move(name), generic, fn});
  };

  // exact linear algebra
  add("rank_outer_product_is_1", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    QVector a(4), b(5);
    for (auto &x : a)
      x = random_integer(rng, 1, 99);
    for (auto &x : b)
      x = random_integer(rng, 1, 99);
    QMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        m(i, j) = a[i] * b[j];
    return expect_equal(mat_rank(m, c.rank), 1u, "rank(a b^T)");
  });
  add("kernel_catalecticant_x0x1^2_t2", false, [](const RunConfig &, std::uint64_t) {
    const auto ker = perp_piece(poly("x0*x1^2", 2), 2);
    std::string got;
    for (const auto &k : ker)
      got += render(k, 'y') + " ";
    return FixtureOutcome{ker.size() == 1 && ker[0] == poly("x0^2", 2),
                          "kernel basis = " + got + "(expected y0^2)"};
  });
  add("det_2x2_at_1234", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(to_string(mat_det(QMatrix(2, 2, {1, 2, 3, 4}))), "-2",
                        "det[[1,2],[3,4]]");
  });

  // polynomials and the apolarity action
  add("veronese_nu2_monomials", true, [](const RunConfig &, std::uint64_t seed) {
    Rng rng(seed);
    QVector l{random_integer(rng, 1, 999), random_integer(rng, 1, 999),
              random_integer(rng, 1, 999)};
    const auto &a = l[0], &b = l[1], &c = l[2];
    const QVector want{a * a, 2 * a * b, 2 * a * c, b * b, 2 * b * c, c * c};
    return expect_equal(join(coefficient_vector(power_linear(LinearForm(l), 2))), join(want),
                        "coefficients of (ax+by+cz)^2");
  });
  add("apolar_pairing_factorials", false, [](const RunConfig &, std::uint64_t) {
    for (unsigned d = 0; d <= 5; ++d)
      for (const Monomial &m : monomial_basis(4, d)) {
        Integer want = 1;
        for (unsigned e : m.exponents())
          want *= factorial(e);
        const HomogPoly got = apolar_apply(HomogPoly::from_monomial(m), HomogPoly::from_monomial(m));
        if (got.coefficient(Monomial::one(4)) != want)
          return FixtureOutcome{false, "pairing mismatch at degree " + std::to_string(d)};
      }
    return FixtureOutcome{true, "y^a o x^a = prod a_i! for all a, 4 vars, degree <= 5"};
  });
  add("apolar_y0^2_kills_x0x1^2", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(render(apolar_apply(poly("x0^2", 2), poly("x0*x1^2", 2))), "0",
                        "y0^2 o x0*x1^2");
  });
  add("veronese_tangent_x0_d2_n2", false, [](const RunConfig &, std::uint64_t) {
    std::string got;
    for (const auto &p : veronese_tangent_basis(LinearForm({1, 0, 0}), 2))
      got += (got.empty() ? "" : ", ") + render(p);
    return expect_equal(got, "x0^2, x0*x1, x0*x2", "tangent basis");
  });

  // catalecticants, perp ideals, Hilbert functions
  add("catalecticant_ternary_quartic_6x6", true, [](const RunConfig &, std::uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 16; ++trial) {
      const HomogPoly f = random_form(rng, 3, 4, 1000);
      const QVector coeffs = coefficient_vector(f);
      const QMatrix m = catalecticant(f, 2).matrix;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (m(i, j) != printed_entry(kQuarticCatalecticant[i][j], coeffs))
            return FixtureOutcome{false, "entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") differs"};
    }
    return FixtureOutcome{true, "all 36 entries match at 16 random quartics"};
  });
  add("perp_x0x1^d_degree2_is_y0^2", false, [](const RunConfig &, std::uint64_t) {
    for (unsigned d = 2; d <= 8; ++d) {
      HomogPoly f = HomogPoly::from_monomial(Monomial(std::vector<unsigned>{1, d}));
      const auto ker = perp_piece(f, 2);
      if (ker.size() != 1 || !(ker[0] == poly("x0^2", 2)))
        return FixtureOutcome{false, "d=" + std::to_string(d) + ": (F^perp)_2 != <y0^2>"};
    }
    return FixtureOutcome{true, "(F^perp)_2 = <y0^2> for x0*x1^d, d = 2..8"};
  });
  add("perp_fermat_cubic_degree1", false, [](const RunConfig &, std::uint64_t) {
    const auto ker = perp_piece(poly("x0^3 + x1^3 + x2^3", 5), 1);
    std::string got;
    for (const auto &k : ker)
      got += (got.empty() ? "" : ", ") + render(k, 'y');
    return expect_equal(got, "y3, y4", "(F^perp)_1 in 5 variables");
  });
  add("hf_generic_ternary_quartic", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    return hf_fixture(random_form(rng, 3, 4, 1000), {1, 3, 6, 3, 1, 0}, c, "HF");
  });
  add("hf_binary_cube_of_linear_form", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    LinearForm l({random_integer(rng, 1, 99), random_integer(rng, 1, 99)});
    return hf_fixture(power_linear(l, 3), {1, 1, 1, 1, 0}, c, "HF");
  });
  add("hf_generic_binary_cubic", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    return hf_fixture(random_form(rng, 2, 3, 1000), {1, 2, 2, 1, 0}, c, "HF");
  });
  add("hf_generic_cubic_5_vars", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    return hf_fixture(random_form(rng, 5, 3, 1000), {1, 5, 5, 1, 0}, c, "HF");
  });
  add("hf_generic_quartic_n3_n4", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    return all_of({hf_fixture(random_form(rng, 4, 4, 1000), {1, 4, 10, 4, 1, 0}, c, "HF n=3"),
                   hf_fixture(random_form(rng, 5, 4, 1000), {1, 5, 15, 5, 1, 0}, c, "HF n=4")});
  });

  // ranks
  add("sylvester_x0x1^2_rank_3", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(sylvester_rank(poly("x0*x1^2", 2)).rank, 3u, "rk(x0*x1^2)");
  });
  add("sylvester_x0x1^d_rank_d+1", false, [](const RunConfig &, std::uint64_t seed) {
    std::vector<FixtureOutcome> parts;
    for (unsigned d = 1; d <= 8; ++d) {
      HomogPoly f = HomogPoly::from_monomial(Monomial(std::vector<unsigned>{1, d}));
      parts.push_back(expect_equal(sylvester_rank(f, seed).rank, d + 1,
                                   "rk(x0*x1^" + std::to_string(d) + ")"));
    }
    return all_of(parts);
  });
  add("monomial_rank_x0x1^2", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(monomial_rank({1, 2}), 3u, "rk formula for x0*x1^2");
  });
  add("quadratic_rank_nondegenerate_n+1", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FixtureOutcome> parts;
    for (unsigned n = 1; n <= 5; ++n)
      parts.push_back(expect_equal(quadratic_rank(random_form(rng, n + 1, 2, 1000), c.rank),
                                   std::size_t{n + 1}, "rk(generic quadric, n=" + std::to_string(n) + ")"));
    return all_of(parts);
  });
  add("little_waring_G_1_2_and_G_1_3", false, [](const RunConfig &, std::uint64_t) {
    // maximal rank over all binary forms with coefficients in [-2, 2]
    std::vector<FixtureOutcome> parts;
    for (unsigned d = 2; d <= 3; ++d) {
      const auto basis = monomial_basis(2, d);
      std::uint64_t max_rank = 0;
      std::vector<long> c(basis.size(), -2);
      for (;;) {
        HomogPoly f(2, d);
        for (std::size_t i = 0; i < basis.size(); ++i)
          f.add_term(basis[i], c[i]);
        if (!f.is_zero())
          max_rank = std::max(max_rank, sylvester_rank(f).rank);
        std::size_t i = 0;
        while (i < c.size() && c[i] == 2)
          c[i++] = -2;
        if (i == c.size())
          break;
        ++c[i];
      }
      parts.push_back(expect_equal(max_rank, std::uint64_t{d}, "G(1," + std::to_string(d) + ")"));
    }
    return all_of(parts);
  });
  add("decompose_x0^2x1_three_cubes", false, [](const RunConfig &, std::uint64_t) {
    const auto sol = decompose_check(poly("x0^2*x1", 2),
                                     {ProjPoint({1, 1}), ProjPoint({-1, 1}), ProjPoint({0, 1})});
    return expect_equal(sol ? join(*sol) : std::string("infeasible"), "(1/6,1/6,-1/3)",
                        "coefficients");
  });
  add("decompose_x0x1^2_two_cubes_infeasible", true, [](const RunConfig &, std::uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      ProjPoint p({random_integer(rng, -50, 50), random_integer(rng, 1, 50)});
      ProjPoint q({random_integer(rng, -50, 50), random_integer(rng, 1, 50)});
      if (p.same_point(q))
        continue;
      if (decompose_check(poly("x0*x1^2", 2), {p, q}))
        return FixtureOutcome{false, "found a two-cube decomposition"};
    }
    return FixtureOutcome{true, "no two-cube decomposition at 50 random point pairs"};
  });

  // secant varieties
  add("expected_dim_veronese_2_2_s2", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(expected_dim(VarietySpec::veronese(2, 2), 2), 5u, "expdim");
  });
  add("expected_dim_segre_1_1_1_1_s3_fills_P15", false, [](const RunConfig &, std::uint64_t) {
    return expect_equal(expected_dim(VarietySpec::segre({1, 1, 1, 1}), 3), 15u, "expdim");
  });
  auto veronese = [&](unsigned n, unsigned d, unsigned s, std::size_t want) {
    add("secant_veronese_n" + std::to_string(n) + "_d" + std::to_string(d) + "_s" +
            std::to_string(s),
        true, [=](const RunConfig &c, std::uint64_t seed) {
          RunConfig cfg = c;
          cfg.seed = seed;
          return expect_equal(terracini_dim_veronese(n, d, s, cfg).computed_dim, want, "dim");
        });
  };
  veronese(2, 2, 2, 4);
  veronese(1, 3, 2, 3);
  veronese(2, 4, 5, 13);
  auto segre = [&](std::vector<unsigned> dims, unsigned s, std::size_t want, std::string name) {
    add(std::move(name), true, [=](const RunConfig &c, std::uint64_t seed) {
      RunConfig cfg = c;
      cfg.seed = seed;
      return expect_equal(terracini_dim_segre(dims, s, cfg).computed_dim, want, "dim");
    });
  };
  segre({1, 1, 1}, 2, 7, "secant_segre_1_1_1_s2_fills_P7");
  add("secant_segre_1_1_1_1_s3_hypersurface_in_P15", true,
      [](const RunConfig &c, std::uint64_t seed) {
        RunConfig cfg = c;
        cfg.seed = seed;
        const auto r = terracini_dim_segre({1, 1, 1, 1}, 3, cfg);
        return FixtureOutcome{r.computed_dim == 14 && r.spec.ambient_dim() == 15,
                              "dim = " + std::to_string(r.computed_dim) +
                                  " (expected 14, a hypersurface in P^15)"};
      });
  segre({2, 2, 2}, 4, 25, "secant_segre_2_2_2_s4_hypersurface");
  segre({3, 3, 3}, 7, 63, "secant_segre_3_3_3_s7_fills_P63");
  add("big_waring_g_alexander_hirschowitz", false, [](const RunConfig &, std::uint64_t) {
    std::vector<FixtureOutcome> parts{
        expect_equal(big_waring_g(2, 4), 6u, "g(2,4)"),
        expect_equal(big_waring_g(3, 4), 10u, "g(3,4)"),
        expect_equal(big_waring_g(4, 3), 8u, "g(4,3)"),
        expect_equal(big_waring_g(4, 4), 15u, "g(4,4)"),
        expect_equal(big_waring_g(1, 3), 2u, "g(1,3)")};
    for (unsigned n = 1; n <= 6; ++n)
      parts.push_back(expect_equal(big_waring_g(n, 2), std::uint64_t{n + 1},
                                   "g(" + std::to_string(n) + ",2)"));
    return all_of(parts);
  });
  auto defect = [&](VarietySpec spec, unsigned s, long want, std::string name) {
    add(std::move(name), true, [=](const RunConfig &c, std::uint64_t seed) {
      RunConfig cfg = c;
      cfg.seed = seed;
      return expect_equal(defect_report(spec, s, cfg).defect, want, "defect");
    });
  };
  defect(VarietySpec::veronese(2, 2), 2, 1, "defect_veronese_surface_s2");
  defect(VarietySpec::veronese(3, 2), 2, 1, "defect_veronese_3fold_quadrics_s2");
  defect(VarietySpec::segre({1, 1, 1}), 2, 0, "defect_segre_1_1_1_s2");

  // tensors
  add("rank_one_flattenings", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    const DenseTensor t = random_rank_one(rng, {3, 4, 2});
    return all_of({expect_equal(join(multilinear_rank(t, c.rank)), "(1,1,1)", "mlrank"),
                   expect_equal(gss_minor_test(t, 1), true, "gss(r=1)")});
  });
  add("matmul_2_has_8_terms", false, [](const RunConfig &, std::uint64_t) {
    const DenseTensor t = matmul_tensor(2);
    std::size_t nonzero = 0;
    for (const auto &e : t.entries())
      nonzero += !is_zero(e);
    return expect_equal(nonzero, 8u, "nonzero entries");
  });
  add("strassen_rank_one_phi_rank_2", true, [](const RunConfig &c, std::uint64_t seed) {
    Rng rng(seed);
    return expect_equal(mat_rank(strassen_matrix(random_rank_one(rng, {3, 3, 3})).matrix, c.rank),
                        2u, "rank(phi_T)");
  });
  add("strassen_phi_additive", true, [](const RunConfig &, std::uint64_t seed) {
    Rng rng(seed);
    const DenseTensor a = random_rank_one(rng, {3, 3, 3}) + random_rank_one(rng, {3, 3, 3});
    const DenseTensor b = random_rank_one(rng, {3, 3, 3});
    return FixtureOutcome{strassen_matrix(a + b).matrix ==
                              strassen_matrix(a).matrix + strassen_matrix(b).matrix,
                          "phi_{T+T'} = phi_T + phi_T'"};
  });
  add("strassen_rank_4_det_vanishes", true, [](const RunConfig &, std::uint64_t seed) {
    Rng rng(seed);
    DenseTensor t = random_rank_one(rng, {3, 3, 3});
    for (int i = 0; i < 3; ++i)
      t += random_rank_one(rng, {3, 3, 3});
    return expect_equal(to_string(mat_det(strassen_matrix(t).matrix)), "0", "det(phi_T)");
  });
  add("strassen_symbolic_9216_terms_degree_9", false, [](const RunConfig &, std::uint64_t) {
    const HomogPoly det = strassen_det_symbolic();
    return all_of({expect_equal(det.terms().size(), 9216u, "terms"),
                   expect_equal(det.degree(), 9u, "degree")});
  });
  return fx;
}

} // namespace

const std::vector<Fixture> &paper_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

FixtureOutcome run_fixture(std::size_t index, const RunConfig &config) {
  const auto &all = paper_fixtures();
  if (index >= all.size())
    fail(ErrorCode::InvalidArgument, "fixture index out of range");
  const Fixture &f = all[index];
  const std::uint64_t seed = derive_seed(config.seed, index);
  auto attempt = [&](std::uint64_t s) {
    try {
      return f.check(config, s);
    } catch (const std::exception &e) {
      return FixtureOutcome{false, std::string("error: ") + e.what()};
    }
  };
  FixtureOutcome first = attempt(seed);
  if (first.passed || !f.generic)
    return first;
  FixtureOutcome retry = attempt(derive_seed(seed, 1));
  return {retry.passed, "first attempt: " + first.detail + "; retry: " + retry.detail};
}

} // namespace waring
