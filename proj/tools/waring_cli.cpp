// waring: command-line front end over the libwaring C interface.
//
// Exit codes: 0 success, 1 fixture failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/waring.h"

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FreeString {
  void operator()(char *s) const { waring_string_free(s); }
};
struct FreeArray {
  void operator()(void *p) const { waring_free(p); }
};
struct FreePoly {
  void operator()(waring_poly *p) const { waring_poly_free(p); }
};
struct FreePolyList {
  void operator()(waring_poly_list *p) const { waring_poly_list_free(p); }
};
struct FreeMatrix {
  void operator()(waring_matrix *p) const { waring_matrix_free(p); }
};
struct FreeTensor {
  void operator()(waring_tensor *p) const { waring_tensor_free(p); }
};
using String = std::unique_ptr<char, FreeString>;
using Poly = std::unique_ptr<waring_poly, FreePoly>;
using PolyList = std::unique_ptr<waring_poly_list, FreePolyList>;
using Matrix = std::unique_ptr<waring_matrix, FreeMatrix>;
using Tensor = std::unique_ptr<waring_tensor, FreeTensor>;

void check(waring_status st) {
  if (st != WARING_OK)
    throw InputError(std::string(waring_status_name(st)) + ": " + waring_last_error());
}

std::string take(char *s) { return String(s).get(); }

struct Settings {
  std::uint64_t seed = 0;
  unsigned trials = 3;
  std::string arithmetic = "exact";
  std::uint64_t modulus = 2147483647ULL;
  std::string output = "text";

  waring_config config() const {
    waring_config c;
    waring_config_init(&c);
    c.seed = seed;
    c.trials = trials;
    c.arithmetic = arithmetic == "modular" ? WARING_MODULAR : WARING_EXACT;
    c.modulus = modulus;
    return c;
  }
  bool exact() const { return arithmetic == "exact"; }
};

// Result of one command before rendering.
struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  bool certified = true;
  std::string text;
};

void emit(const Report &r, const Settings &s) {
  if (s.output == "json") {
    json envelope{{"command", r.command},
                  {"inputs", r.inputs},
                  {"result", r.result},
                  {"provenance",
                   {{"seed", s.seed},
                    {"trials", s.trials},
                    {"arithmetic_mode", s.exact() ? "exact" : "modular"},
                    {"certified", r.certified}}}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
}

Poly parse(const std::string &form, unsigned vars) {
  waring_poly *p = nullptr;
  check(waring_poly_parse(form.c_str(), vars, &p));
  return Poly(p);
}

std::string render(const waring_poly *p, char prefix = 'x') {
  char *s = nullptr;
  check(waring_poly_render(p, prefix, &s));
  return take(s);
}

json matrix_json(const waring_matrix *m) {
  json rows = json::array();
  for (std::size_t r = 0; r < waring_matrix_rows(m); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < waring_matrix_cols(m); ++c) {
      char *s = nullptr;
      check(waring_matrix_entry(m, r, c, &s));
      row.push_back(take(s));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const json &rows) {
  std::size_t width = 1;
  for (const auto &row : rows)
    for (const auto &e : row)
      width = std::max(width, e.get<std::string>().size());
  std::ostringstream os;
  for (const auto &row : rows) {
    os << " ";
    for (const auto &e : row) {
      const auto s = e.get<std::string>();
      os << " " << std::string(width - s.size(), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string list_text(const std::vector<std::size_t> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

template <class T> std::vector<T> split_numbers(const std::string &text, char sep = ',') {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0)
        throw InputError("");
      out.push_back(static_cast<T>(v));
    } catch (const std::exception &) {
      throw InputError("expected a comma-separated list of non-negative integers, got '" + text + "'");
    }
  }
  if (out.empty())
    throw InputError("empty list");
  return out;
}

std::string read_input(const std::string &file) {
  if (file.empty() || file == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(file);
  if (!in)
    throw InputError("cannot open '" + file + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Accepts a bare tensor document or a JSON report whose result holds one.
Tensor load_tensor(const std::string &file) {
  std::string text = read_input(file);
  try {
    const json doc = json::parse(text);
    if (doc.is_object() && doc.contains("result") && doc["result"].contains("tensor"))
      text = doc["result"]["tensor"].dump();
  } catch (const json::exception &) {
    // leave malformed input for the library to report
  }
  waring_tensor *t = nullptr;
  check(waring_tensor_from_json(text.c_str(), &t));
  return Tensor(t);
}

std::vector<std::size_t> mlrank(const waring_tensor *t, const Settings &s) {
  const waring_config cfg = s.config();
  std::size_t *ranks = nullptr, order = 0;
  check(waring_multilinear_rank(t, &cfg, &ranks, &order));
  std::unique_ptr<std::size_t, FreeArray> guard(ranks);
  return {ranks, ranks + order};
}

std::size_t matrix_rank(const waring_matrix *m, const Settings &s) {
  const waring_config cfg = s.config();
  std::size_t r = 0;
  check(waring_matrix_rank(m, &cfg, &r));
  return r;
}

const char *branch_name(waring_rank_branch b) {
  switch (b) {
  case WARING_BRANCH_SQUARE_FREE_AT_D1:
    return "square_free_at_d1";
  case WARING_BRANCH_FELL_THROUGH_TO_D2:
    return "fell_through_to_d2";
  case WARING_BRANCH_FORMULA:
    return "formula";
  case WARING_BRANCH_MATRIX_RANK:
    return "matrix_rank";
  }
  return "unknown";
}

json dim_report_json(const waring_dim_report &r) {
  json j{{"computed_dim", r.computed_dim}, {"expected_dim", r.expected_dim},
         {"ambient_dim", r.ambient_dim},   {"defect", r.defect},
         {"trials", r.trials},             {"seed", r.seed},
         {"arithmetic_mode", r.arithmetic == WARING_MODULAR ? "modular" : "exact"},
         {"certified", static_cast<bool>(r.certified)}};
  j["known_dim"] = r.has_known_dim ? json(r.known_dim) : json(nullptr);
  return j;
}

std::string dim_report_text(const waring_dim_report &r) {
  std::ostringstream os;
  os << "dim: " << r.computed_dim << "\nexpected: " << r.expected_dim
     << "\nambient: P^" << r.ambient_dim << "\ndefect: " << r.defect
     << "\ncertified: " << (r.certified ? "yes" : "no");
  if (r.arithmetic == WARING_MODULAR)
    os << " (modular arithmetic: probabilistic lower bound)";
  os << "\n";
  return os.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact Waring ranks, apolarity, secant dimensions and tensor flattenings"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--seed", settings.seed, "Seed for random points and generic forms");
  app.add_option("--trials", settings.trials, "Independent Terracini trials (max-aggregated)")
      ->check(CLI::PositiveNumber);
  app.add_option("--arithmetic", settings.arithmetic, "Rank arithmetic")
      ->check(CLI::IsMember({"exact", "modular"}));
  app.add_option("--modulus", settings.modulus, "Prime modulus for modular arithmetic");
  app.add_option("--output", settings.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  Report report;
  std::function<void()> action;
  int exit_code = 0;

  // rank ---------------------------------------------------------------------
  auto *rank = app.add_subcommand("rank", "Waring rank of binary forms, monomials and quadrics");
  rank->require_subcommand(1);
  std::string form;
  unsigned vars = 0;
  std::string exponents;

  auto *rank_binary = rank->add_subcommand("binary", "Sylvester's algorithm for a binary form");
  rank_binary->add_option("--form", form, "Binary form in x0, x1")->required();
  rank_binary->callback([&] {
    action = [&] {
      Poly f = parse(form, 2);
      std::uint64_t r = 0;
      waring_rank_branch branch{};
      char *witness = nullptr;
      check(waring_sylvester_rank(f.get(), settings.seed, &r, &branch, &witness));
      const std::string w = take(witness);
      report.command = "rank binary";
      report.inputs = {{"form", form}, {"vars", 2}};
      report.result = {{"rank", r}, {"branch", branch_name(branch)}, {"witness", w}};
      report.text = "rank: " + std::to_string(r) + "\nbranch: " + branch_name(branch) +
                    "\nwitness: " + w + "\n";
    };
  });

  auto *rank_monomial = rank->add_subcommand("monomial", "Rank of a monomial from its exponents");
  rank_monomial->add_option("--exponents", exponents, "Comma-separated exponents")->required();
  rank_monomial->callback([&] {
    action = [&] {
      const auto e = split_numbers<unsigned>(exponents);
      std::uint64_t r = 0;
      check(waring_monomial_rank(e.data(), e.size(), &r));
      report.command = "rank monomial";
      report.inputs = {{"exponents", e}};
      report.result = {{"rank", r}, {"branch", "formula"}};
      report.text = "rank: " + std::to_string(r) + "\n";
    };
  });

  auto *rank_quadratic = rank->add_subcommand("quadratic", "Rank of a quadratic form");
  rank_quadratic->add_option("--form", form, "Quadratic form")->required();
  rank_quadratic->add_option("--vars", vars, "Number of variables");
  rank_quadratic->callback([&] {
    action = [&] {
      Poly f = parse(form, vars);
      const unsigned n = waring_poly_num_vars(f.get());
      const waring_config cfg = settings.config();
      std::size_t r = 0;
      check(waring_quadratic_rank(f.get(), &cfg, &r));
      report.command = "rank quadratic";
      report.inputs = {{"form", form}, {"vars", n}};
      report.result = {{"rank", r}, {"branch", "matrix_rank"}};
      report.certified = settings.exact();
      report.text = "rank: " + std::to_string(r) + "\n";
    };
  });

  // perp / catalecticant -----------------------------------------------------
  unsigned t = 0;
  auto *perp = app.add_subcommand("perp", "Basis of the degree-t piece of the apolar ideal");
  perp->add_option("--form", form, "Form")->required();
  perp->add_option("--t", t, "Degree")->required();
  perp->add_option("--vars", vars, "Number of variables");
  perp->callback([&] {
    action = [&] {
      Poly f = parse(form, vars);
      const unsigned n = waring_poly_num_vars(f.get());
      waring_poly_list *raw = nullptr;
      check(waring_perp_piece(f.get(), t, &raw));
      PolyList list(raw);
      json basis = json::array();
      report.text = "dim (F^perp)_" + std::to_string(t) + ": " +
                    std::to_string(waring_poly_list_size(list.get())) + "\n";
      for (std::size_t i = 0; i < waring_poly_list_size(list.get()); ++i) {
        const std::string op = render(waring_poly_list_at(list.get(), i), 'y');
        basis.push_back(op);
        report.text += "  " + op + "\n";
      }
      report.command = "perp";
      report.inputs = {{"form", form}, {"vars", n}, {"t", t}};
      report.result = {{"dim", basis.size()}, {"basis", basis}};
    };
  });

  auto *cat = app.add_subcommand("catalecticant", "Catalecticant matrix T_t -> S_{d-t}");
  cat->add_option("--form", form, "Form")->required();
  cat->add_option("--t", t, "Degree of the differential operators")->required();
  cat->add_option("--vars", vars, "Number of variables");
  cat->callback([&] {
    action = [&] {
      Poly f = parse(form, vars);
      const unsigned n = waring_poly_num_vars(f.get());
      waring_matrix *raw = nullptr;
      check(waring_catalecticant(f.get(), t, &raw));
      Matrix m(raw);
      const json rows = matrix_json(m.get());
      const std::size_t r = matrix_rank(m.get(), settings);
      report.command = "catalecticant";
      report.inputs = {{"form", form}, {"vars", n}, {"t", t}};
      report.result = {{"rows", waring_matrix_rows(m.get())},
                       {"cols", waring_matrix_cols(m.get())},
                       {"matrix", rows},
                       {"rank", r}};
      report.certified = settings.exact();
      report.text = matrix_text(rows) + "rank: " + std::to_string(r) + "\n";
    };
  });

  // hilbert ------------------------------------------------------------------
  auto *hilbert = app.add_subcommand("hilbert", "Hilbert function of T/F^perp");
  bool random_form = false;
  unsigned degree = 0;
  long bound = 1000;
  hilbert->add_option("--form", form, "Form");
  hilbert->add_option("--vars", vars, "Number of variables");
  hilbert->add_flag("--random", random_form, "Use a seeded random (generic) form");
  hilbert->add_option("--degree", degree, "Degree of the random form");
  hilbert->add_option("--bound", bound, "Coefficient bound of the random form");
  hilbert->callback([&] {
    action = [&] {
      Poly f;
      if (random_form) {
        if (!vars || !degree)
          throw InputError("--random needs --vars and --degree");
        waring_poly *p = nullptr;
        check(waring_poly_random(vars, degree, settings.seed, bound, &p));
        f.reset(p);
        report.inputs = {{"random", true}, {"vars", vars}, {"degree", degree}, {"bound", bound}};
      } else {
        if (form.empty())
          throw InputError("hilbert needs --form or --random");
        f = parse(form, vars);
        const unsigned n = waring_poly_num_vars(f.get());
        report.inputs = {{"form", form}, {"vars", n}};
      }
      const waring_config cfg = settings.config();
      std::size_t *hf = nullptr, *perp_dims = nullptr, len = 0;
      check(waring_hilbert_function(f.get(), &cfg, &hf, &perp_dims, &len));
      std::unique_ptr<std::size_t, FreeArray> g1(hf), g2(perp_dims);
      const std::vector<std::size_t> h(hf, hf + len), p(perp_dims, perp_dims + len);
      report.command = "hilbert";
      report.result = {{"form", render(f.get())}, {"hf", h}, {"perp_dims", p}};
      report.certified = settings.exact();
      report.text = "HF: " + list_text(h) + "\nperp dims: " + list_text(p) + "\n";
    };
  });

  // decompose-check ----------------------------------------------------------
  auto *decomp = app.add_subcommand("decompose-check", "Fit F as a combination of powers L_i^d");
  std::string points;
  decomp->add_option("--form", form, "Form")->required();
  decomp->add_option("--points", points, "Points, e.g. \"1:1;-1:1;0:1\"")->required();
  decomp->add_option("--vars", vars, "Number of variables");
  decomp->callback([&] {
    action = [&] {
      Poly f = parse(form, vars);
      const unsigned n = waring_poly_num_vars(f.get());
      std::vector<std::string> coords;
      json pts = json::array();
      std::stringstream ss(points);
      std::string pt;
      while (std::getline(ss, pt, ';')) {
        std::stringstream cs(pt);
        std::string c;
        json one = json::array();
        while (std::getline(cs, c, ':')) {
          coords.push_back(c);
          one.push_back(c);
        }
        if (one.size() != n)
          throw InputError("point '" + pt + "' needs " + std::to_string(n) + " coordinates");
        pts.push_back(one);
      }
      std::vector<const char *> ptrs;
      for (const auto &c : coords)
        ptrs.push_back(c.c_str());
      char **coeffs = nullptr;
      const waring_status st = waring_decompose_check(f.get(), ptrs.data(), pts.size(), &coeffs);
      report.command = "decompose-check";
      report.inputs = {{"form", form}, {"vars", n}, {"points", pts}};
      if (st == WARING_INFEASIBLE) {
        report.result = {{"feasible", false}};
        report.text = "infeasible\n";
        return;
      }
      check(st);
      json out = json::array();
      for (std::size_t i = 0; i < pts.size(); ++i)
        out.push_back(take(coeffs[i]));
      waring_free(coeffs);
      report.result = {{"feasible", true}, {"coefficients", out}};
      report.text = "coefficients:";
      for (const auto &c : out)
        report.text += " " + c.get<std::string>();
      report.text += "\n";
    };
  });

  // secant-dim ---------------------------------------------------------------
  auto *secant = app.add_subcommand("secant-dim", "Dimension of a secant variety via Terracini");
  secant->require_subcommand(1);
  unsigned n_arg = 0, d_arg = 0, s_arg = 0;
  std::string dims_arg;
  auto finish_secant = [&](const waring_dim_report &r) {
    report.result = dim_report_json(r);
    report.certified = r.certified;
    report.text = dim_report_text(r);
  };
  auto *sec_ver = secant->add_subcommand("veronese", "Secant variety of nu_d(P^n)");
  sec_ver->add_option("--n", n_arg, "Projective dimension n")->required();
  sec_ver->add_option("--d", d_arg, "Degree d")->required();
  sec_ver->add_option("--s", s_arg, "Number of points s")->required();
  sec_ver->callback([&] {
    action = [&] {
      const waring_config cfg = settings.config();
      waring_dim_report r{};
      check(waring_secant_veronese(n_arg, d_arg, s_arg, &cfg, &r));
      report.command = "secant-dim veronese";
      report.inputs = {{"n", n_arg}, {"d", d_arg}, {"s", s_arg}};
      finish_secant(r);
    };
  });
  auto *sec_seg = secant->add_subcommand("segre", "Secant variety of P^n1 x ... x P^nt");
  sec_seg->add_option("--dims", dims_arg, "Comma-separated n_i")->required();
  sec_seg->add_option("--s", s_arg, "Number of points s")->required();
  sec_seg->callback([&] {
    action = [&] {
      const auto dims = split_numbers<unsigned>(dims_arg);
      const waring_config cfg = settings.config();
      waring_dim_report r{};
      check(waring_secant_segre(dims.data(), dims.size(), s_arg, &cfg, &r));
      report.command = "secant-dim segre";
      report.inputs = {{"dims", dims}, {"s", s_arg}};
      finish_secant(r);
    };
  });

  auto *ahg = app.add_subcommand("ah-g", "Generic Waring rank g(n,d) (Alexander-Hirschowitz)");
  ahg->add_option("--n", n_arg, "Number of variables minus one")->required();
  ahg->add_option("--d", d_arg, "Degree")->required();
  ahg->callback([&] {
    action = [&] {
      std::uint64_t g = 0;
      check(waring_big_waring_g(n_arg, d_arg, &g));
      report.command = "ah-g";
      report.inputs = {{"n", n_arg}, {"d", d_arg}};
      report.result = {{"g", g}};
      report.text = "g: " + std::to_string(g) + "\n";
    };
  });

  // tensor -------------------------------------------------------------------
  auto *tensor = app.add_subcommand("tensor", "Tensor flattenings, Strassen's equation, matmul");
  tensor->require_subcommand(1);
  std::string file, modes_arg;
  std::size_t r_arg = 1;

  auto *t_flat = tensor->add_subcommand("flatten", "Flattening along a set of modes");
  t_flat->add_option("--file", file, "Tensor JSON (default: stdin)");
  t_flat->add_option("--modes", modes_arg, "Comma-separated 1-based row modes")->required();
  t_flat->callback([&] {
    action = [&] {
      Tensor tt = load_tensor(file);
      auto modes = split_numbers<unsigned>(modes_arg);
      for (auto &m : modes) {
        if (m == 0)
          throw InputError("modes are 1-based");
        --m;
      }
      waring_matrix *raw = nullptr;
      check(waring_tensor_flatten(tt.get(), modes.data(), modes.size(), &raw));
      Matrix m(raw);
      const json rows = matrix_json(m.get());
      const std::size_t rk = matrix_rank(m.get(), settings);
      report.command = "tensor flatten";
      report.inputs = {{"file", file.empty() ? "-" : file}, {"modes", split_numbers<unsigned>(modes_arg)}};
      report.result = {{"rows", waring_matrix_rows(m.get())},
                       {"cols", waring_matrix_cols(m.get())},
                       {"matrix", rows},
                       {"rank", rk}};
      report.certified = settings.exact();
      report.text = matrix_text(rows) + "rank: " + std::to_string(rk) + "\n";
    };
  });

  auto *t_ml = tensor->add_subcommand("mlrank", "Multilinear rank");
  t_ml->add_option("--file", file, "Tensor JSON (default: stdin)");
  t_ml->callback([&] {
    action = [&] {
      Tensor tt = load_tensor(file);
      const auto ranks = mlrank(tt.get(), settings);
      report.command = "tensor mlrank";
      report.inputs = {{"file", file.empty() ? "-" : file}};
      report.result = {{"multilinear_rank", ranks}};
      report.certified = settings.exact();
      report.text = json(ranks).dump() + "\n";
    };
  });

  auto *t_minors = tensor->add_subcommand("minors", "Vanishing of (r+1)-minors of all flattenings");
  t_minors->add_option("--file", file, "Tensor JSON (default: stdin)");
  t_minors->add_option("--r", r_arg, "Rank bound r")->required();
  t_minors->callback([&] {
    action = [&] {
      Tensor tt = load_tensor(file);
      int holds = 0;
      check(waring_gss_minor_test(tt.get(), r_arg, &holds));
      report.command = "tensor minors";
      report.inputs = {{"file", file.empty() ? "-" : file}, {"r", r_arg}};
      report.result = {{"minors_vanish", static_cast<bool>(holds)},
                       {"multilinear_rank", mlrank(tt.get(), settings)}};
      report.text = std::string("minors vanish: ") + (holds ? "yes" : "no") + "\n";
    };
  });

  auto *t_str = tensor->add_subcommand("strassen", "Strassen's 9x9 matrix phi_T of a 3x3x3 tensor");
  t_str->add_option("--file", file, "Tensor JSON (default: stdin)");
  t_str->callback([&] {
    action = [&] {
      Tensor tt = load_tensor(file);
      waring_matrix *raw = nullptr;
      check(waring_strassen_matrix(tt.get(), &raw));
      Matrix m(raw);
      const json rows = matrix_json(m.get());
      char *det = nullptr;
      check(waring_matrix_det(m.get(), &det));
      const std::string d = take(det);
      const std::size_t rk = matrix_rank(m.get(), settings);
      report.command = "tensor strassen";
      report.inputs = {{"file", file.empty() ? "-" : file}};
      report.result = {{"matrix", rows}, {"rank", rk}, {"det", d}};
      report.certified = settings.exact();
      report.text = matrix_text(rows) + "rank: " + std::to_string(rk) + "\ndet: " + d + "\n";
    };
  });

  auto *t_exp = tensor->add_subcommand("strassen-expand", "Expand det(phi_T) symbolically");
  t_exp->callback([&] {
    action = [&] {
      std::size_t terms = 0;
      unsigned deg = 0;
      check(waring_strassen_expand(&terms, &deg));
      report.command = "tensor strassen-expand";
      report.result = {{"terms", terms}, {"degree", deg}};
      report.text = "terms: " + std::to_string(terms) + "\ndegree: " + std::to_string(deg) + "\n";
    };
  });

  auto *t_mm = tensor->add_subcommand("matmul", "Matrix multiplication tensor of n x n matrices");
  t_mm->add_option("--n", n_arg, "Matrix size")->required();
  t_mm->callback([&] {
    action = [&] {
      waring_tensor *raw = nullptr;
      check(waring_matmul_tensor(n_arg, &raw));
      Tensor tt(raw);
      char *js = nullptr;
      check(waring_tensor_to_json(tt.get(), &js));
      const std::string doc = take(js);
      report.command = "tensor matmul";
      report.inputs = {{"n", n_arg}};
      report.result = {{"tensor", json::parse(doc)}};
      report.text = doc + "\n";
    };
  });

  // paper-fixtures -----------------------------------------------------------
  auto *fixtures = app.add_subcommand("paper-fixtures", "Run the golden-value fixture suite");
  bool list_only = false;
  std::string filter;
  fixtures->add_flag("--list", list_only, "Print fixture names without running them");
  fixtures->add_option("--filter", filter, "Only fixtures whose name contains this text");
  fixtures->callback([&] {
    action = [&] {
      report.command = "paper-fixtures";
      report.inputs = {{"list", list_only}, {"filter", filter}};
      const waring_config cfg = settings.config();
      json rows = json::array();
      std::size_t passed = 0, failed = 0;
      for (std::size_t i = 0; i < waring_fixture_count(); ++i) {
        const std::string name = waring_fixture_name(i);
        if (!filter.empty() && name.find(filter) == std::string::npos)
          continue;
        if (list_only) {
          rows.push_back(name);
          report.text += name + "\n";
          continue;
        }
        int ok = 0;
        char *detail = nullptr;
        check(waring_fixture_run(i, &cfg, &ok, &detail));
        const std::string d = take(detail);
        (ok ? passed : failed)++;
        rows.push_back({{"name", name}, {"passed", static_cast<bool>(ok)}, {"detail", d}});
        report.text += std::string(ok ? "PASS " : "FAIL ") + name + ": " + d + "\n";
      }
      if (list_only) {
        report.result = {{"fixtures", rows}};
        return;
      }
      report.result = {{"fixtures", rows}, {"passed", passed}, {"failed", failed}};
      report.certified = failed == 0;
      report.text += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
      if (failed)
        exit_code = 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  emit(report, settings);
  return exit_code;
}
