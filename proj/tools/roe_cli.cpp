// Command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 when every check passes, 1 on a chain or oracle failure,
// 2 on usage, domain, parse or I/O errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "roe/roe.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(roe_status s, const std::string& context) {
  if (s != ROE_OK) {
    throw CliError(context + ": " + roe_status_name(s) + ": " + roe_last_error());
  }
}

struct MatrixDeleter {
  void operator()(roe_matrix* m) const { roe_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(roe_report* r) const { roe_report_free(r); }
};
using MatrixPtr = std::unique_ptr<roe_matrix, MatrixDeleter>;
using ReportPtr = std::unique_ptr<roe_report, ReportDeleter>;

MatrixPtr load(const std::string& path, const char* what) {
  if (path.empty()) throw CliError(std::string("--") + what + " is required");
  roe_matrix* m = nullptr;
  check(roe_matrix_load(path.c_str(), &m), std::string("loading --") + what);
  return MatrixPtr(m);
}

nlohmann::json matrix_json(const roe_matrix* m) {
  char* text = nullptr;
  check(roe_matrix_to_json(m, &text), "serializing matrix");
  nlohmann::json j = nlohmann::json::parse(text);
  roe_string_free(text);
  return j;
}

std::string matrix_table(const roe_matrix* m) {
  const std::size_t n = roe_matrix_dim(m);
  const bool complex = roe_matrix_field(m) == ROE_FIELD_COMPLEX;
  std::ostringstream os;
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      check(roe_matrix_entry(m, i, j, &re, &im), "reading entry");
      if (complex) {
        std::snprintf(buf, sizeof buf, " %13.6g%+.6gi", re, im);
      } else {
        std::snprintf(buf, sizeof buf, " %14.8g", re);
      }
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError("cannot open --out file '" + path + "'");
  f << text;
  if (!f.flush()) throw CliError("failed writing --out file '" + path + "'");
}

// Table to stdout unless the JSON goes there instead.
void emit(const std::string& out, const std::string& table, const std::string& json) {
  if (out != "-") std::cout << table;
  write_out(out, json);
}

roe_field parse_field(const std::string& s) {
  if (s == "real") return ROE_FIELD_REAL;
  if (s == "complex") return ROE_FIELD_COMPLEX;
  throw CliError("--field must be real or complex");
}

nlohmann::json opt_json(double v) { return std::isnan(v) ? nlohmann::json() : nlohmann::json(v); }

struct ParamFlags {
  double alpha = kNaN, beta = kNaN, delta = kNaN, lambda = kNaN;

  void add(CLI::App* app) {
    app->add_option("--alpha", alpha, "alpha parameter");
    app->add_option("--beta", beta, "beta parameter (h(t) = t^beta)");
    app->add_option("--delta", delta, "delta parameter of the primed bounds");
    app->add_option("--lambda", lambda, "weight of the operator means, in [0, 1]");
  }
  roe_params params() const { return {alpha, beta, delta, lambda}; }
  nlohmann::json to_json() const {
    return {{"alpha", opt_json(alpha)},
            {"beta", opt_json(beta)},
            {"delta", opt_json(delta)},
            {"lambda", opt_json(lambda)}};
  }
};

struct GenFlags {
  std::size_t dim = 0;
  std::string field = "real";
  std::uint64_t seed = 0;
  double spec_lo = 0.25, spec_hi = 4.0;

  void add(CLI::App* app) {
    app->add_option("--dim", dim, "matrix dimension 1..32 (default: sampled from 1..8)");
    app->add_option("--field", field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
    app->add_option("--seed", seed, "master seed");
    app->add_option("--spec-lo", spec_lo, "lower end of the sampled spectrum");
    app->add_option("--spec-hi", spec_hi, "upper end of the sampled spectrum");
  }
};

struct VerifyFlags {
  std::string suite;
  std::uint64_t trials = 100;
  double tol = 1e-8;
  unsigned threads = 0;
  bool list = false;
  std::string a_path, b_path, out;
  GenFlags gen;
  ParamFlags params;
};

int run_verify(const VerifyFlags& f) {
  if (f.list) {
    for (std::size_t i = 0; i < roe_suite_count(); ++i) std::cout << roe_suite_name(i) << "\n";
    return kExitPass;
  }
  if (f.suite.empty()) throw CliError("--suite is required");
  roe_report* raw = nullptr;
  if (!f.a_path.empty() || !f.b_path.empty()) {
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    const roe_params p = f.params.params();
    check(roe_check_pair(f.suite.c_str(), a.get(), b.get(), &p, f.tol, &raw), "verify");
  } else {
    roe_run_config c = roe_run_config_default();
    c.suite = f.suite.c_str();
    c.trials = f.trials;
    c.tol = f.tol;
    c.dim = f.gen.dim;
    c.field = parse_field(f.gen.field);
    c.spectrum_lo = f.gen.spec_lo;
    c.spectrum_hi = f.gen.spec_hi;
    c.seed = f.gen.seed;
    c.alpha = f.params.alpha;
    c.beta = f.params.beta;
    c.delta = f.params.delta;
    c.lambda = f.params.lambda;
    c.threads = f.threads;
    check(roe_run_suite(&c, &raw), "verify");
  }
  const ReportPtr report(raw);
  emit(f.out, roe_report_table(report.get()), roe_report_json(report.get()));
  switch (roe_report_verdict(report.get())) {
    case ROE_VERDICT_PASS: return kExitPass;
    case ROE_VERDICT_FAIL: return kExitFail;
    case ROE_VERDICT_PRECONDITION_FAILED: return kExitError;
  }
  return kExitError;
}

struct ComputeFlags {
  std::string expr;
  std::string a_path, b_path, out;
  std::string f_name, h_name = "pow", fn_name, kind, route = "perspective";
  double exponent = 1.0;
  double tol = 1e-8;
  ParamFlags params;
};

nlohmann::json compute_config(const ComputeFlags& f) {
  nlohmann::json c{{"command", "compute"}, {"expr", f.expr}, {"params", f.params.to_json()}};
  if (f.expr == "perspective") {
    c["f"] = f.f_name;
    c["h"] = f.h_name;
  }
  if (f.expr == "apply") c["fn"] = f.fn_name;
  if (f.expr == "bound") {
    c["kind"] = f.kind;
    c["route"] = f.route;
  }
  if (f.expr == "congruence") c["exponent"] = f.exponent;
  if (f.expr == "loewner") c["tol"] = f.tol;
  return c;
}

int run_compute(const ComputeFlags& f) {
  nlohmann::json doc{{"tool_version", roe_version()}, {"config", compute_config(f)}};
  std::ostringstream table;
  const roe_params p = f.params.params();
  std::vector<std::pair<std::string, MatrixPtr>> results;
  auto binary = [&](const char* expr) {
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    roe_matrix* out = nullptr;
    check(roe_compute(expr, a.get(), b.get(), &p, &out), std::string("compute ") + expr);
    results.emplace_back(expr, MatrixPtr(out));
  };

  const std::string& e = f.expr;
  if (e == "S" || e == "S_a" || e == "S_ab" || e == "geomean" || e == "harmonic" ||
      e == "geometric" || e == "arithmetic") {
    binary(e.c_str());
  } else if (e == "means") {
    for (const char* m : {"harmonic", "geometric", "arithmetic"}) binary(m);
  } else if (e == "bound") {
    if (f.kind.empty()) throw CliError("--kind is required for --expr bound");
    if (f.route != "perspective" && f.route != "explicit") {
      throw CliError("--route must be perspective or explicit");
    }
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    roe_matrix* out = nullptr;
    check(roe_bound(f.kind.c_str(), a.get(), b.get(), &p,
                    f.route == "explicit" ? ROE_ROUTE_EXPLICIT : ROE_ROUTE_PERSPECTIVE, &out),
          "compute bound");
    results.emplace_back(f.kind, MatrixPtr(out));
  } else if (e == "perspective") {
    if (f.f_name.empty()) throw CliError("--f is required for --expr perspective");
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    const roe_scalar_fn fn{f.f_name.c_str(), p.alpha, p.delta, p.lambda};
    const roe_scalar_fn h{f.h_name.c_str(), std::isnan(p.beta) ? 1.0 : p.beta, kNaN, kNaN};
    roe_matrix* out = nullptr;
    check(roe_perspective(&fn, &h, a.get(), b.get(), &out), "compute perspective");
    results.emplace_back("perspective", MatrixPtr(out));
  } else if (e == "apply") {
    if (f.fn_name.empty()) throw CliError("--fn is required for --expr apply");
    const MatrixPtr a = load(f.a_path, "A");
    const roe_scalar_fn fn{f.fn_name.c_str(), p.alpha, p.delta, p.lambda};
    roe_matrix* out = nullptr;
    check(roe_apply_fn(a.get(), &fn, &out), "compute apply");
    results.emplace_back(f.fn_name, MatrixPtr(out));
  } else if (e == "congruence") {
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    roe_matrix* out = nullptr;
    check(roe_congruence(a.get(), b.get(), f.exponent, &out), "compute congruence");
    results.emplace_back("congruence", MatrixPtr(out));
  } else if (e == "eig") {
    const MatrixPtr a = load(f.a_path, "A");
    std::vector<double> values(roe_matrix_dim(a.get()));
    check(roe_eigenvalues(a.get(), values.data()), "compute eig");
    doc["result"] = {{"eigenvalues", values}};
    table << "eigenvalues:";
    for (double v : values) table << " " << std::setprecision(12) << v;
    table << "\n";
  } else if (e == "loewner") {
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    roe_loewner v{};
    check(roe_loewner_leq(a.get(), b.get(), f.tol, &v), "compute loewner");
    doc["result"] = {{"holds", v.holds != 0}, {"margin", v.margin}, {"threshold", v.threshold}};
    table << "A <= B: " << (v.holds ? "yes" : "no") << "  margin " << std::setprecision(12)
          << v.margin << "  threshold " << v.threshold << "\n";
  } else if (e == "jordan") {
    const MatrixPtr a = load(f.a_path, "A");
    const MatrixPtr b = load(f.b_path, "B");
    double residual = 0.0;
    check(roe_jordan_residual(a.get(), b.get(), &residual), "compute jordan");
    doc["result"] = {{"residual", residual}};
    table << "jordan residual: " << std::setprecision(6) << residual << "\n";
  } else {
    throw CliError("unknown --expr '" + e + "'");
  }

  if (!results.empty()) {
    nlohmann::json r = nlohmann::json::object();
    for (const auto& [name, m] : results) {
      r[name] = matrix_json(m.get());
      table << name << ":\n" << matrix_table(m.get());
    }
    doc["result"] = std::move(r);
  }
  emit(f.out, table.str(), doc.dump(2) + "\n");
  return kExitPass;
}

struct HhFlags {
  double alpha = 0.0;
  double x = 2.0;
  std::size_t grid = 101;
  std::string out;
};

int run_hh(const HhFlags& f) {
  roe_report* raw = nullptr;
  check(roe_hh_report(f.alpha, f.x, f.grid, &raw), "hh");
  const ReportPtr report(raw);
  emit(f.out, roe_report_table(report.get()), roe_report_json(report.get()));
  return roe_report_verdict(report.get()) == ROE_VERDICT_PASS ? kExitPass : kExitFail;
}

struct OracleFlags {
  std::uint64_t trials = 100;
  double threshold = 1e-10;
  std::string out;
  GenFlags gen;
  ParamFlags params;
};

int run_oracle(const OracleFlags& f) {
  roe_oracle_config c = roe_oracle_config_default();
  c.trials = f.trials;
  c.dim = f.gen.dim;
  c.field = parse_field(f.gen.field);
  c.spectrum_lo = f.gen.spec_lo;
  c.spectrum_hi = f.gen.spec_hi;
  c.seed = f.gen.seed;
  c.alpha = f.params.alpha;
  c.beta = f.params.beta;
  c.delta = f.params.delta;
  c.lambda = f.params.lambda;
  c.threshold = f.threshold;
  roe_report* raw = nullptr;
  check(roe_oracle_compare(&c, &raw), "oracle");
  const ReportPtr report(raw);
  emit(f.out, roe_report_table(report.get()), roe_report_json(report.get()));
  return roe_report_verdict(report.get()) == ROE_VERDICT_PASS ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative operator entropies, their bounds, and Loewner-order chain checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(roe_version()));

  VerifyFlags verify;
  CLI::App* v = app.add_subcommand("verify", "check an inequality suite on generated or given pairs");
  v->add_option("--suite", verify.suite, "suite name (see --list)");
  v->add_flag("--list", verify.list, "list suite names");
  v->add_option("--trials", verify.trials, "number of generated trials");
  v->add_option("--tol", verify.tol, "relative Loewner tolerance")->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.threads, "worker threads (0: all cores)");
  v->add_option("--A", verify.a_path, "check this A instead of generating");
  v->add_option("--B", verify.b_path, "check this B instead of generating");
  v->add_option("--out", verify.out, "write the JSON report here ('-' for stdout)");
  verify.gen.add(v);
  verify.params.add(v);

  ComputeFlags compute;
  CLI::App* c = app.add_subcommand("compute", "evaluate one operator expression");
  c->set_help_flag("--help", "print this help message and exit");
  c->add_option("--expr", compute.expr,
                "S, S_a, S_ab, geomean, means, harmonic, geometric, arithmetic, perspective, "
                "bound, apply, eig, loewner, jordan, congruence")
      ->required();
  c->add_option("--A", compute.a_path, "matrix file for A (JSON or text)");
  c->add_option("--B", compute.b_path, "matrix file for B (JSON or text)");
  c->add_option("--f", compute.f_name, "perspective: scalar function f");
  c->add_option("--h", compute.h_name, "perspective: scalar function h (pow uses --beta)");
  c->add_option("--fn", compute.fn_name, "apply: scalar function");
  c->add_option("--kind", compute.kind, "bound: I, II, III, V, I', II', III', V', ...");
  c->add_option("--route", compute.route, "bound: perspective or explicit");
  c->add_option("--exponent", compute.exponent, "congruence: B^{e/2} A B^{e/2}");
  c->add_option("--tol", compute.tol, "loewner: relative tolerance");
  c->add_option("--out", compute.out, "write the JSON result here ('-' for stdout)");
  compute.params.add(c);

  HhFlags hh;
  CLI::App* h = app.add_subcommand("hh", "refined Hermite-Hadamard record for x^alpha/t - 1");
  h->add_option("--alpha", hh.alpha, "alpha >= 0");
  h->add_option("--x", hh.x, "x > 0")->required();
  h->add_option("--grid", hh.grid, "grid points on [0, 1] (>= 3)");
  h->add_option("--out", hh.out, "write the JSON report here ('-' for stdout)");

  OracleFlags oracle;
  CLI::App* o = app.add_subcommand("oracle", "compare matrix expressions with scalar closed forms");
  o->add_option("--trials", oracle.trials, "number of diagonal pairs");
  o->add_option("--threshold", oracle.threshold, "maximum allowed relative deviation");
  o->add_option("--out", oracle.out, "write the JSON report here ('-' for stdout)");
  oracle.gen.add(o);
  oracle.params.add(o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (v->parsed()) return run_verify(verify);
    if (c->parsed()) return run_compute(compute);
    if (h->parsed()) return run_hh(hh);
    if (o->parsed()) return run_oracle(oracle);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
