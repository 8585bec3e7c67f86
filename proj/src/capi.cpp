#include "roe/roe.h"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "bounds.hpp"
#include "entropy.hpp"
#include "error.hpp"
#include "hermite.hpp"
#include "matrix_io.hpp"
#include "perspective.hpp"
#include "runner.hpp"

struct roe_matrix {
  roe::SymMatrix m;
};

struct roe_report {
  std::string json;
  std::string table;
  roe_verdict verdict = ROE_VERDICT_PASS;
};

namespace {

thread_local std::string last_error;

roe_status fail(roe_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
roe_status guard(Body body) {
  try {
    body();
    return ROE_OK;
  } catch (const roe::InvalidArgument& e) {
    return fail(ROE_INVALID_ARGUMENT, e.what());
  } catch (const roe::DimensionMismatch& e) {
    return fail(ROE_DIMENSION_MISMATCH, e.what());
  } catch (const roe::NotSelfAdjoint& e) {
    return fail(ROE_NOT_SELF_ADJOINT, e.what());
  } catch (const roe::DomainError& e) {
    return fail(ROE_DOMAIN_ERROR, e.what());
  } catch (const roe::PreconditionFailed& e) {
    return fail(ROE_PRECONDITION_FAILED, e.what());
  } catch (const roe::NumericalFailure& e) {
    return fail(ROE_NUMERICAL_FAILURE, e.what());
  } catch (const roe::IoError& e) {
    return fail(ROE_IO_ERROR, e.what());
  } catch (const roe::ParseError& e) {
    return fail(ROE_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ROE_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ROE_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ROE_INTERNAL_ERROR, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw roe::InvalidArgument(what);
}

const roe::SymMatrix& get(const roe_matrix* m, const char* what) {
  if (!m) throw roe::InvalidArgument(std::string(what) + " is null");
  return m->m;
}

roe_matrix* wrap(roe::SymMatrix m) { return new roe_matrix{std::move(m)}; }

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

roe::Field to_field(roe_field f) {
  switch (f) {
    case ROE_FIELD_REAL: return roe::Field::Real;
    case ROE_FIELD_COMPLEX: return roe::Field::Complex;
  }
  throw roe::InvalidArgument("unknown field");
}

std::optional<double> opt(double v) {
  return std::isnan(v) ? std::nullopt : std::optional<double>(v);
}

double or_default(double v, double fallback) { return std::isnan(v) ? fallback : v; }

struct Resolved {
  double alpha, beta, delta, lambda;
};

Resolved resolve(const roe_params* p) {
  const roe_params d = roe_params_default();
  if (!p) p = &d;
  return {or_default(p->alpha, 0.0), or_default(p->beta, 1.0), or_default(p->delta, 1.0),
          or_default(p->lambda, 0.5)};
}

roe::ScalarFn to_fn(const roe_scalar_fn* f) {
  require(f && f->name, "scalar function is null");
  return roe::scalar_fn_from_name(f->name, or_default(f->alpha, 0.0), or_default(f->delta, 1.0),
                                  or_default(f->lambda, 0.5));
}

roe::GenConfig to_gen(const roe_gen_config* c) {
  require(c, "generator config is null");
  roe::GenConfig g;
  g.dim = c->dim;
  g.field = to_field(c->field);
  g.spectrum_lo = c->spectrum_lo;
  g.spectrum_hi = c->spectrum_hi;
  g.master_seed = c->seed;
  return g;
}

roe_report* make_report(const nlohmann::json& j, std::string table, roe_verdict verdict) {
  return new roe_report{j.dump(2) + "\n", std::move(table), verdict};
}

roe_verdict suite_verdict(const roe::SuiteReport& r) {
  return r.all_passed() ? ROE_VERDICT_PASS : ROE_VERDICT_FAIL;
}

std::string hh_table(const roe::HHRecord& r, const roe::GridVerdict& g, std::size_t grid) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "alpha " << r.alpha << "  x " << r.x << "  lambda* " << r.lambda_star << "\n"
     << "  midpoint           " << r.midpoint << "\n"
     << "  sup l              " << r.sup_l << "\n"
     << "  integral average   " << r.integral_avg << "\n"
     << "  inf L              " << r.inf_L << "\n"
     << "  endpoint average   " << r.endpoint_avg << "\n"
     << "grid " << grid << ": max l " << g.max_l << "  min L " << g.min_L << "\n"
     << "verdict: " << (g.pass ? "pass" : "fail");
  if (!g.failure.empty()) os << " (" << g.failure << ")";
  os << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* roe_version(void) { return roe::kToolVersion; }

const char* roe_status_name(roe_status status) {
  switch (status) {
    case ROE_OK: return "ok";
    case ROE_INVALID_ARGUMENT: return "invalid_argument";
    case ROE_DIMENSION_MISMATCH: return "dimension_mismatch";
    case ROE_NOT_SELF_ADJOINT: return "not_self_adjoint";
    case ROE_DOMAIN_ERROR: return "domain_error";
    case ROE_PRECONDITION_FAILED: return "precondition_failed";
    case ROE_NUMERICAL_FAILURE: return "numerical_failure";
    case ROE_IO_ERROR: return "io_error";
    case ROE_PARSE_ERROR: return "parse_error";
    case ROE_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* roe_last_error(void) { return last_error.c_str(); }

void roe_string_free(char* s) { delete[] s; }

roe_status roe_matrix_from_real(size_t dim, const double* rows, roe_matrix** out) {
  return guard([&] {
    require(out && (rows || dim == 0), "null argument");
    require(dim > 0, "dim must be positive");
    *out = wrap(roe::SymMatrix(
        roe::Matrix(dim, roe::Field::Real, std::vector<roe::Complex>(rows, rows + dim * dim))));
  });
}

roe_status roe_matrix_from_complex(size_t dim, const double* entries, roe_matrix** out) {
  return guard([&] {
    require(out && entries, "null argument");
    require(dim > 0, "dim must be positive");
    std::vector<roe::Complex> data(dim * dim);
    for (std::size_t k = 0; k < data.size(); ++k) data[k] = {entries[2 * k], entries[2 * k + 1]};
    *out = wrap(roe::SymMatrix(roe::Matrix(dim, roe::Field::Complex, std::move(data))));
  });
}

roe_status roe_matrix_identity(size_t dim, roe_field field, roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    require(dim > 0, "dim must be positive");
    *out = wrap(roe::SymMatrix::identity(dim, to_field(field)));
  });
}

roe_status roe_matrix_parse(const char* text, roe_matrix** out) {
  return guard([&] {
    require(out && text, "null argument");
    *out = wrap(roe::parse_matrix(text));
  });
}

roe_status roe_matrix_load(const char* path, roe_matrix** out) {
  return guard([&] {
    require(out && path, "null argument");
    *out = wrap(roe::load_matrix(path));
  });
}

roe_status roe_matrix_save(const roe_matrix* m, const char* path) {
  return guard([&] {
    require(path, "null argument");
    roe::save_matrix(get(m, "matrix"), path);
  });
}

roe_status roe_matrix_to_json(const roe_matrix* m, char** out) {
  return guard([&] {
    require(out, "null argument");
    *out = copy_string(roe::matrix_to_json(get(m, "matrix")).dump());
  });
}

void roe_matrix_free(roe_matrix* m) { delete m; }

size_t roe_matrix_dim(const roe_matrix* m) { return m ? m->m.dim() : 0; }

roe_field roe_matrix_field(const roe_matrix* m) {
  return m && m->m.field() == roe::Field::Complex ? ROE_FIELD_COMPLEX : ROE_FIELD_REAL;
}

roe_status roe_matrix_entry(const roe_matrix* m, size_t i, size_t j, double* re, double* im) {
  return guard([&] {
    const roe::SymMatrix& s = get(m, "matrix");
    require(i < s.dim() && j < s.dim(), "index out of range");
    if (re) *re = s(i, j).real();
    if (im) *im = s(i, j).imag();
  });
}

roe_status roe_eigenvalues(const roe_matrix* m, double* out) {
  return guard([&] {
    require(out, "null argument");
    const roe::EigenPair e = roe::sym_eig(get(m, "matrix"));
    std::copy(e.values.begin(), e.values.end(), out);
  });
}

roe_status roe_loewner_leq(const roe_matrix* a, const roe_matrix* b, double tol,
                           roe_loewner* out) {
  return guard([&] {
    require(out, "null argument");
    require(tol >= 0.0, "tol must be nonnegative");
    const roe::LoewnerVerdict v = roe::loewner_leq(get(a, "A"), get(b, "B"), tol);
    *out = {v.holds ? 1 : 0, v.margin, v.threshold};
  });
}

roe_status roe_jordan_residual(const roe_matrix* a, const roe_matrix* b, double* out) {
  return guard([&] {
    require(out, "null argument");
    *out = roe::jordan_check(get(a, "A"), get(b, "B"));
  });
}

roe_status roe_scalar_eval(const roe_scalar_fn* f, double x, double* out) {
  return guard([&] {
    require(out, "null argument");
    const roe::ScalarFn fn = to_fn(f);
    if (!fn.in_domain(x)) {
      throw roe::DomainError(std::string(fn.name()) + " is undefined at " + std::to_string(x), x);
    }
    *out = fn(x);
  });
}

roe_status roe_apply_fn(const roe_matrix* m, const roe_scalar_fn* f, roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    *out = wrap(roe::apply_fn(get(m, "matrix"), to_fn(f)));
  });
}

roe_params roe_params_default(void) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {0.0, 1.0, 1.0, nan};
}

roe_status roe_compute(const char* expr, const roe_matrix* a, const roe_matrix* b,
                       const roe_params* params, roe_matrix** out) {
  return guard([&] {
    require(out && expr, "null argument");
    const roe::SymMatrix& A = get(a, "A");
    const roe::SymMatrix& B = get(b, "B");
    const Resolved p = resolve(params);
    const std::string e = expr;
    if (e == "S") {
      *out = wrap(roe::rel_entropy(A, B));
    } else if (e == "S_a") {
      *out = wrap(roe::rel_entropy_alpha(A, B, p.alpha));
    } else if (e == "S_ab") {
      *out = wrap(roe::rel_entropy_alpha_beta(A, B, p.alpha, p.beta));
    } else if (e == "geomean") {
      *out = wrap(roe::geo_mean(A, B, p.alpha, p.beta));
    } else if (e == "harmonic" || e == "geometric" || e == "arithmetic") {
      require(p.lambda >= 0.0 && p.lambda <= 1.0, "lambda must lie in [0, 1]");
      roe::WeightedMeans m = roe::weighted_means(A, B, p.lambda);
      *out = wrap(e == "harmonic" ? m.harmonic : e == "geometric" ? m.geometric : m.arithmetic);
    } else {
      *out = wrap(roe::bound(roe::bound_from_name(e), A, B, p.alpha, p.beta, p.delta));
    }
  });
}

roe_status roe_bound(const char* kind, const roe_matrix* a, const roe_matrix* b,
                     const roe_params* params, roe_route route, roe_matrix** out) {
  return guard([&] {
    require(out && kind, "null argument");
    const roe::BoundKind k = roe::bound_from_name(kind);
    const Resolved p = resolve(params);
    const roe::SymMatrix& A = get(a, "A");
    const roe::SymMatrix& B = get(b, "B");
    *out = wrap(route == ROE_ROUTE_EXPLICIT ? roe::bound_explicit(k, A, B, p.alpha, p.beta, p.delta)
                                            : roe::bound(k, A, B, p.alpha, p.beta, p.delta));
  });
}

roe_status roe_perspective(const roe_scalar_fn* f, const roe_scalar_fn* h, const roe_matrix* a,
                           const roe_matrix* b, roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    *out = wrap(roe::perspective({to_fn(f), to_fn(h)}, get(a, "A"), get(b, "B")));
  });
}

roe_status roe_congruence(const roe_matrix* x, const roe_matrix* b, double exponent,
                          roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    *out = wrap(roe::congruence(get(x, "X"), get(b, "B"), exponent));
  });
}

roe_status roe_hh_record_eval(double alpha, double x, roe_hh_record* out) {
  return guard([&] {
    require(out, "null argument");
    const roe::HHRecord r = roe::hh_record(alpha, x);
    *out = {r.x, r.alpha, r.midpoint, r.sup_l, r.integral_avg, r.inf_L, r.endpoint_avg,
            r.lambda_star};
  });
}

roe_status roe_hh_l(double alpha, double x, double lambda, double* out) {
  return guard([&] {
    require(out, "null argument");
    *out = roe::l_of_lambda(alpha, x, lambda);
  });
}

roe_status roe_hh_L(double alpha, double x, double lambda, double* out) {
  return guard([&] {
    require(out, "null argument");
    *out = roe::L_of_lambda(alpha, x, lambda);
  });
}

roe_status roe_hh_extremizer(double x, double* out) {
  return guard([&] {
    require(out, "null argument");
    *out = roe::extremizer(x);
  });
}

roe_status roe_hh_report(double alpha, double x, size_t grid, roe_report** out) {
  return guard([&] {
    require(out, "null argument");
    const roe::HHRecord r = roe::hh_record(alpha, x);
    const roe::GridVerdict g = roe::grid_verify(alpha, x, grid);
    nlohmann::json j{{"tool_version", roe::kToolVersion},
                     {"config", {{"command", "hh"}, {"alpha", alpha}, {"x", x}, {"grid", grid}}},
                     {"record",
                      {{"x", r.x},
                       {"alpha", r.alpha},
                       {"midpoint", r.midpoint},
                       {"sup_l", r.sup_l},
                       {"integral_avg", r.integral_avg},
                       {"inf_L", r.inf_L},
                       {"endpoint_avg", r.endpoint_avg},
                       {"lambda_star", r.lambda_star}}},
                     {"summary",
                      {{"max_l", g.max_l},
                       {"min_L", g.min_L},
                       {"ordered", roe::hh_ordered(r)},
                       {"verdict", g.pass ? "pass" : "fail"}}}};
    if (!g.failure.empty()) j["summary"]["failure"] = g.failure;
    *out = make_report(j, hh_table(r, g, grid), g.pass ? ROE_VERDICT_PASS : ROE_VERDICT_FAIL);
  });
}

roe_gen_config roe_gen_config_default(void) {
  const roe::GenConfig g;
  return {g.dim, ROE_FIELD_REAL, g.spectrum_lo, g.spectrum_hi, g.master_seed};
}

roe_status roe_random_spd(const roe_gen_config* cfg, uint64_t trial, roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    *out = wrap(roe::random_spd(to_gen(cfg), trial));
  });
}

roe_status roe_random_partner(const roe_matrix* a, double beta, double delta, int dominating,
                              const roe_gen_config* cfg, uint64_t trial, roe_matrix** out) {
  return guard([&] {
    require(out, "null argument");
    roe::GenConfig g = to_gen(cfg);
    g.dim = get(a, "A").dim();
    *out = wrap(roe::random_partner(
        a->m, beta, delta, dominating ? roe::Direction::Dominating : roe::Direction::Dominated, g,
        trial));
  });
}

size_t roe_suite_count(void) { return roe::all_suites().size(); }

const char* roe_suite_name(size_t index) {
  const auto suites = roe::all_suites();
  return index < suites.size() ? suites[index].name.data() : nullptr;
}

roe_run_config roe_run_config_default(void) {
  const roe::RunConfig c;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {nullptr,       c.trials, c.tol, 0,   ROE_FIELD_REAL, c.spectrum_lo, c.spectrum_hi,
          c.seed,        nan,      nan,   nan, nan,            c.threads};
}

roe_status roe_run_suite(const roe_run_config* cfg, roe_report** out) {
  return guard([&] {
    require(out && cfg && cfg->suite, "null argument");
    roe::RunConfig c;
    c.suite = cfg->suite;
    c.trials = cfg->trials;
    c.tol = cfg->tol;
    if (cfg->dim != 0) c.dim = cfg->dim;
    c.field = to_field(cfg->field);
    c.spectrum_lo = cfg->spectrum_lo;
    c.spectrum_hi = cfg->spectrum_hi;
    c.seed = cfg->seed;
    c.alpha = opt(cfg->alpha);
    c.beta = opt(cfg->beta);
    c.delta = opt(cfg->delta);
    c.lambda = opt(cfg->lambda);
    c.threads = cfg->threads;
    const roe::SuiteReport r = roe::run_suite(c);
    *out = make_report(roe::suite_report_to_json(r), roe::suite_report_table(r), suite_verdict(r));
  });
}

roe_status roe_check_pair(const char* suite, const roe_matrix* a, const roe_matrix* b,
                          const roe_params* params, double tol, roe_report** out) {
  return guard([&] {
    require(out && suite, "null argument");
    const roe::SuiteDef& def = roe::find_suite(suite);
    const Resolved p = resolve(params);
    roe::ChainParams cp{p.alpha, p.beta, p.delta, std::nullopt};
    if (def.uses_lambda) cp.lambda = p.lambda;
    const roe::SuiteReport r = roe::check_instance(suite, get(a, "A"), get(b, "B"), cp, tol);
    const roe::Verdict v = r.trials.front().verdict;
    *out = make_report(roe::suite_report_to_json(r), roe::suite_report_table(r),
                       v == roe::Verdict::Pass   ? ROE_VERDICT_PASS
                       : v == roe::Verdict::Fail ? ROE_VERDICT_FAIL
                                                 : ROE_VERDICT_PRECONDITION_FAILED);
  });
}

roe_oracle_config roe_oracle_config_default(void) {
  const roe::OracleConfig c;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {c.trials, 0, ROE_FIELD_REAL, c.spectrum_lo, c.spectrum_hi, c.seed,
          nan,      nan, nan,          nan,           c.threshold};
}

roe_status roe_oracle_compare(const roe_oracle_config* cfg, roe_report** out) {
  return guard([&] {
    require(out && cfg, "null argument");
    roe::OracleConfig c;
    c.trials = cfg->trials;
    if (cfg->dim != 0) c.dim = cfg->dim;
    c.field = to_field(cfg->field);
    c.spectrum_lo = cfg->spectrum_lo;
    c.spectrum_hi = cfg->spectrum_hi;
    c.seed = cfg->seed;
    c.alpha = opt(cfg->alpha);
    c.beta = opt(cfg->beta);
    c.delta = opt(cfg->delta);
    c.lambda = opt(cfg->lambda);
    c.threshold = cfg->threshold;
    const roe::OracleReport r = roe::oracle_compare(c);
    *out = make_report(roe::oracle_report_to_json(r), roe::oracle_report_table(r),
                       r.passed() ? ROE_VERDICT_PASS : ROE_VERDICT_FAIL);
  });
}

roe_verdict roe_report_verdict(const roe_report* r) { return r ? r->verdict : ROE_VERDICT_FAIL; }

const char* roe_report_json(const roe_report* r) { return r ? r->json.c_str() : ""; }

const char* roe_report_table(const roe_report* r) { return r ? r->table.c_str() : ""; }

void roe_report_free(roe_report* r) { delete r; }

}  // extern "C"
