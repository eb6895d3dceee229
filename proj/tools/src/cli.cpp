#include "srf/cli/cli.hpp"

#include "srf/acceptance.hpp"
#include "srf/errors.hpp"
#include "srf/parallel.hpp"
#include "srf/recovery.hpp"
#include "srf/spectral.hpp"
#include "srf/szego.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef SRF_VERSION
#define SRF_VERSION "0.0.0"
#endif

namespace srf::cli {

namespace {

const std::vector<std::string> kSubcommands = {"gram",   "smin",    "epsilon",   "spark", "contiguity",
                                               "asymptote", "szego", "bounds",   "recover", "adversary",
                                               "minimax", "scaling", "selftest"};

/// Raised for inputs that are syntactically valid but unusable.
struct UsageError : DomainError {
  using DomainError::DomainError;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

HPReal parse_number(const std::string& text, Bits bits, const char* flag) {
  try {
    return HPReal::parse(text, bits);
  } catch (const Error&) {
    throw UsageError(std::string("--") + flag + ": not a number: '" + text + "'");
  }
}

bool needs_single_parameter(const std::string& sub) {
  return sub != "asymptote" && sub != "scaling" && sub != "selftest";
}

SystemParams system_params(const RunConfig& c) {
  if (c.y && c.srf) throw UsageError("give exactly one of --y and --srf");
  if (!c.y && !c.srf) throw UsageError("'" + c.subcommand + "' requires --y or --srf");
  if (c.y) return SystemParams::from_y(parse_number(*c.y, c.precision_bits, "y"));
  return SystemParams::from_srf(parse_number(*c.srf, c.precision_bits, "srf"));
}

SearchMode mode_or(const RunConfig& c, SearchMode fallback) {
  if (!c.mode) return fallback;
  try {
    return parse_search_mode(*c.mode);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

/// "inf", "re" or "re,im".
ExteriorPoint parse_point(const std::string& text, Bits bits, const char* flag) {
  if (text == "inf" || text == "infinity") return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) return HPComplex(parse_number(text, bits, flag), HPReal::zero(bits));
  return HPComplex(parse_number(text.substr(0, comma), bits, flag), parse_number(text.substr(comma + 1), bits, flag));
}

/// "a..b" or a comma list of offsets.
SupportSet parse_window(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const long a = std::stol(text.substr(0, dots));
      const long b = std::stol(text.substr(dots + 2));
      if (b < a) throw UsageError("--window: empty range " + text);
      return SupportSet::contiguous(static_cast<std::size_t>(b - a + 1), a);
    }
    std::vector<long> v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(std::stol(item));
    return SupportSet(std::move(v));
  } catch (const std::logic_error&) {
    throw UsageError("--window: cannot parse '" + text + "'");
  }
}

std::vector<HPReal> parse_grid(const std::vector<std::string>& grid, Bits bits, const char* flag) {
  std::vector<HPReal> out;
  for (const auto& s : grid) out.push_back(parse_number(s, bits, flag));
  return out;
}

SupportSet support_or_contiguous(const RunConfig& c) {
  if (!c.support.empty()) return SupportSet(c.support);
  if (c.n < 0) throw UsageError("--n must be nonnegative");
  return SupportSet::contiguous(static_cast<std::size_t>(c.n) + 1);
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Json eig_json(const MinEigResult& r) {
  Json vec = Json::array();
  for (const auto& x : r.vector) vec.push_back(hp_json(x));
  return Json{{"lambda_min", hp_json(r.value)}, {"eigenvector", vec}, {"bits_used", r.bits_used}};
}

Json epsilon_json(const EpsilonResult& e) {
  return Json{{"k", e.k},
              {"value", hp_json(e.value)},
              {"attaining_support", support_json(e.attaining_support)},
              {"mode", to_string(e.mode)},
              {"span_searched", e.span_searched},
              {"supports_examined", e.supports_examined}};
}

Json pair_json(const AdversarialPair& p) {
  return Json{{"x0", coefficients_json(p.x0)},         {"x1", coefficients_json(p.x1)},
              {"t_star", support_json(p.t_star)},      {"eps2k", hp_json(p.eps2k)},
              {"sigma", hp_json(p.sigma)},             {"threshold_tie", p.threshold_tie}};
}

Json pencil_json(const PencilData& p) {
  Json m = Json::array();
  for (const auto& q : p.m_exact) m.push_back(rational_string(q));
  return Json{{"n", p.n},
              {"m", m},
              {"quadratic_form", rational_string(p.quadratic_form)},
              {"c_n", hp_json(p.c_n)},
              {"mu", hp_json(p.mu)},
              {"limit_mu", hp_json(p.limit_mu)}};
}

Json recovery_json(const RecoveryResult& r) {
  return Json{{"estimate", coefficients_json(r.estimate)},
              {"support", support_json(r.support)},
              {"sparsity", r.sparsity},
              {"residual", hp_json(r.residual)},
              {"supports_examined", r.supports_examined}};
}

void run_gram(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const SupportSet t = support_or_contiguous(c);
  const GramMatrix g = build_gram(p, t, c.precision_bits);
  Json rows = Json::array();
  Table table{"gram", {}, {}};
  for (long off : t.offsets()) table.columns.push_back(std::to_string(off));
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < t.size(); ++j) {
      row.push_back(hp_json(g.entries(i, j)));
      cells.push_back(g.entries(i, j).to_string());
    }
    rows.push_back(row);
    table.rows.push_back(cells);
  }
  r.results = Json{{"support", support_json(t)}, {"matrix", rows}};
  r.tables.push_back(std::move(table));
}

void run_smin(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const SupportSet t = support_or_contiguous(c);
  const MinEigResult e = gram_min_eig(p, t);
  r.results = eig_json(e);
  r.results["support"] = support_json(t);
  r.results["sigma_min"] = hp_json(sqrt(e.value));
}

long span_or(const RunConfig& c, long fallback) { return c.span >= 0 ? c.span : fallback; }

void run_epsilon(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const EpsilonResult e = epsilon(p, c.k, mode_or(c, SearchMode::contiguous), span_or(c, std::max(10, c.k - 1)));
  r.results = epsilon_json(e);
}

bool run_spark(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const HPReal eps = parse_number(c.eps, c.precision_bits, "eps");
  const SparkResult s = eps_spark(p, eps, c.k, mode_or(c, SearchMode::contiguous), span_or(c, std::max(10, c.k - 1)));
  Json levels = Json::array();
  Table table{"levels", {"k", "epsilon"}, {}};
  for (const auto& e : s.levels) {
    levels.push_back(epsilon_json(e));
    table.rows.push_back({std::to_string(e.k), e.value.to_string()});
  }
  r.results = Json{{"spark", s.value}, {"saturated", s.saturated}, {"eps", hp_json(eps)}, {"levels", levels}};
  r.tables.push_back(std::move(table));
  return s.saturated;
}

void run_contiguity(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  if (c.k < 1) throw UsageError("--k must be at least 1");
  const auto size = static_cast<std::size_t>(c.k);
  const ContiguityScan s = contiguity_scan(p, size, span_or(c, 10));
  Table table{"supports", {"support", "sigma_min"}, {}};
  for (const auto& row : s.table) table.rows.push_back({row.support.to_string(), row.sigma.to_string()});
  r.results = Json{{"holds", s.holds},
                   {"minimizer", support_json(s.table.front().support)},
                   {"sigma_min", hp_json(s.table.front().sigma)},
                   {"supports_examined", s.table.size()},
                   {"monotone_pairs", s.monotone_pairs},
                   {"monotone_violations", s.monotone_violations}};
  const Bits bits = c.precision_bits;
  // Contiguous support first in the ascending table, strictly below the runner-up.
  if (s.table.size() > 1) {
    BoundCheck strict = BoundCheck::less_equal("contiguous_minimizes", s.table.front().sigma, s.table[1].sigma);
    strict.satisfied = s.holds;
    r.checks.push_back(std::move(strict));
  }
  r.checks.push_back(BoundCheck::less_equal("monotone_violations",
                                            HPReal(static_cast<double>(s.monotone_violations), bits),
                                            HPReal::zero(bits)));
  r.tables.push_back(std::move(table));
}

void run_asymptote(const RunConfig& c, Report& r) {
  const Bits bits = c.precision_bits;
  const SupportSet t = support_or_contiguous(c);
  const std::vector<std::string> defaults = {"0.001", "0.002", "0.004", "0.008"};
  const std::vector<HPReal> grid = parse_grid(c.y_grid.empty() ? defaults : c.y_grid, bits, "y-grid");
  const SmallYFit fit = smally_exponent(t, grid, bits);
  Table table{"small_y", {"y", "lambda_min", "bits_used"}, {}};
  for (const auto& pt : fit.points)
    table.rows.push_back({pt.y.to_string(), pt.lambda_min.to_string(), std::to_string(pt.bits_used)});
  r.results = Json{{"support", support_json(t)},
                   {"alpha", hp_json(HPReal(fit.alpha, 53))},
                   {"mu_fit", hp_json(HPReal(fit.mu_fit, 53))}};
  if (fit.pencil) r.results["pencil"] = pencil_json(*fit.pencil);
  if (t.is_contiguous()) {
    const double expected = 2.0 * static_cast<double>(t.size() - 1);
    r.results["alpha_expected"] = expected;
    r.checks.push_back(BoundCheck::less_equal("alpha_within_0.05", HPReal(std::abs(fit.alpha - expected), 53),
                                              HPReal::parse("0.05", 53)));
  }
  r.tables.push_back(std::move(table));
}

void run_szego(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const Bits bits = c.precision_bits;
  const HPReal& cap = p.capacity();
  if (!c.z && !c.zeta && !c.w) throw UsageError("'szego' needs at least one of --z, --zeta, --w");
  r.results = Json{{"capacity", hp_json(cap)}};
  if (c.w) {
    const ExteriorPoint w = parse_point(*c.w, bits, "w");
    if (!w) throw UsageError("--w must be finite");
    r.results["w"] = complex_json(*w);
    r.results["phi"] = complex_json(phi_map(cap, *w));
    r.results["phi_prime"] = complex_json(phi_prime(cap, *w));
  }
  ExteriorPoint z;
  if (c.z) {
    z = parse_point(*c.z, bits, "z");
    if (z) {
      r.results["z"] = complex_json(*z);
      r.results["Phi"] = complex_json(Phi_map(cap, *z));
      r.results["Phi_prime"] = complex_json(Phi_prime(cap, *z));
      r.results["sqrt_Phi_prime"] = complex_json(sqrt_Phi_prime(cap, *z));
    } else {
      r.results["z"] = "inf";
    }
  }
  if (c.zeta) {
    const ExteriorPoint zeta = parse_point(*c.zeta, bits, "zeta");
    r.results["zeta"] = zeta ? complex_json(*zeta) : Json("inf");
    r.results["kernel"] = complex_json(szego_kernel(p, zeta, z));
  }
}

void run_bounds(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  if (c.n < 1) throw UsageError("--n must be at least 1");
  SuiteOptions o;
  o.n_max = c.n;
  o.polynomials = c.samples;
  o.seed = c.seed;
  o.bits = c.precision_bits;
  const SzegoSuite suite = bound_suite(p, o);
  const SrfBounds chain = verify_srf_bounds(p, c.n, c.precision_bits);
  r.checks = suite.checks;
  r.checks.insert(r.checks.end(), chain.checks.begin(), chain.checks.end());

  Table trend{"trend", {"n", "k_inv_sq", "ratio"}, {}};
  for (const auto& row : suite.trend)
    trend.rows.push_back({std::to_string(row.n), row.k_inv_sq.to_string(), row.ratio.to_string()});
  Table ratios{"ratios", {"n", "eps", "k_inv", "upper", "ratio"}, {}};
  for (const auto& row : chain.rows) {
    ratios.rows.push_back({std::to_string(row.n), row.eps.to_string(), row.k_inv.to_string(), row.upper.to_string(),
                           row.ratio.to_string()});
  }
  r.results = Json{{"min_ratio", hp_json(chain.min_ratio)},
                   {"min_ratio_n", chain.min_ratio_n},
                   {"polynomials", suite.polynomials},
                   {"exterior_points", suite.exterior_points}};
  r.tables.push_back(std::move(trend));
  r.tables.push_back(std::move(ratios));
}

void run_recover(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const Bits bits = c.precision_bits;
  if (c.support.empty()) throw UsageError("'recover' needs --support and --values");
  if (c.values.size() != c.support.size()) throw UsageError("--values must match --support in length");
  std::vector<HPReal> v;
  for (const auto& s : c.values) v.push_back(parse_number(s, bits, "values"));
  const CoefficientVector x = CoefficientVector::real(SupportSet(c.support), v);
  const SupportSet window =
      c.window.empty() ? SupportSet::contiguous(static_cast<std::size_t>(x.support.span() + 5), x.support.front() - 2)
                       : parse_window(c.window);
  const HPReal sigma = parse_number(c.sigma, bits, "sigma");
  const MeasurementVector f = synthesize(p, x, window);
  const RecoveryResult rec = l0_solve(p, f, sigma, static_cast<std::size_t>(std::max(c.k, 0)), bits);
  r.results = recovery_json(rec);
  r.results["window"] = support_json(window);
  r.checks.push_back(BoundCheck::less_equal("residual_within_sigma", rec.residual, sigma));
}

AdversaryOptions adversary_options(const RunConfig& c) {
  AdversaryOptions o;
  o.mode = mode_or(c, SearchMode::exhaustive);
  o.span_max = c.span;
  return o;
}

bool run_adversary(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const AdversarialPair a =
      adversarial_pair(p, c.k, parse_number(c.sigma, c.precision_bits, "sigma"), c.precision_bits, adversary_options(c));
  r.results = pair_json(a);
  return a.threshold_tie;
}

void run_minimax(const RunConfig& c, Report& r) {
  const SystemParams p = system_params(c);
  const MinimaxReport m = minimax_experiment(p, c.k, parse_number(c.sigma, c.precision_bits, "sigma"),
                                             c.precision_bits, adversary_options(c));
  r.results = Json{{"pair", pair_json(m.pair)},
                   {"window", support_json(m.window)},
                   {"recovery", recovery_json(m.recovery)},
                   {"error_x0", hp_json(m.error_x0)},
                   {"error_x1", hp_json(m.error_x1)},
                   {"upper_bound", hp_json(m.upper_bound)},
                   {"lower_bound", hp_json(m.lower_bound)}};
  r.checks = m.checks;
}

void run_scaling(const RunConfig& c, Report& r) {
  const Bits bits = c.precision_bits;
  const std::vector<std::string> defaults = {"8", "12", "16", "24", "32"};
  const std::vector<HPReal> grid = parse_grid(c.srf_grid.empty() ? defaults : c.srf_grid, bits, "srf-grid");
  const ScalingResult s = srf_scaling(c.k, grid, bits);
  Table table{"scaling", {"srf", "y", "eps"}, {}};
  for (const auto& row : s.rows) table.rows.push_back({row.srf.to_string(), row.y.to_string(), row.eps.to_string()});
  const double expected = -(2.0 * c.k - 1.0);
  r.results = Json{{"k", s.k},
                   {"slope", hp_json(HPReal(s.slope, 53))},
                   {"intercept", hp_json(HPReal(s.intercept, 53))},
                   {"slope_expected", expected}};
  r.checks.push_back(BoundCheck::less_equal("slope_within_0.15", HPReal(std::abs(s.slope - expected), 53),
                                            HPReal::parse("0.15", 53)));
  r.tables.push_back(std::move(table));
}

void run_selftest(const RunConfig& c, Report& r, std::ostream& err) {
  AcceptanceOptions o;
  o.seed = c.seed;
  Json criteria = Json::array();
  Table table{"criteria", {"id", "name", "passed", "detail"}, {}};
  // Timings go to the diagnostic stream so the report stays reproducible.
  for (const auto& res : run_acceptance(o, [&](const CriterionResult& cr) { err << format_result(cr) << '\n'; })) {
    criteria.push_back(Json{{"id", res.id}, {"name", res.name}, {"passed", res.passed}, {"detail", res.detail}});
    table.rows.push_back({std::to_string(res.id), res.name, res.passed ? "true" : "false", res.detail});
    r.checks.push_back(BoundCheck::less_equal("criterion_" + std::to_string(res.id) + "_" + res.name + "_failures",
                                              HPReal(res.passed ? 0.0 : 1.0, 53), HPReal::zero(53)));
  }
  r.results = Json{{"criteria", criteria}};
  r.tables.push_back(std::move(table));
}

}  // namespace

Json config_json(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}};
  if (c.y) j["y"] = *c.y;
  if (c.srf) j["srf"] = *c.srf;
  j["k"] = c.k;
  j["n"] = c.n;
  j["span"] = c.span;
  j["sigma"] = c.sigma;
  j["eps"] = c.eps;
  j["precision_bits"] = c.precision_bits;
  j["srf_grid"] = c.srf_grid;
  j["y_grid"] = c.y_grid;
  j["mode"] = c.mode ? Json(*c.mode) : Json(nullptr);
  j["format"] = c.format;
  j["output"] = c.output;
  j["seed"] = c.seed;
  j["support"] = c.support;
  j["values"] = c.values;
  j["window"] = c.window;
  j["z"] = c.z ? Json(*c.z) : Json(nullptr);
  j["zeta"] = c.zeta ? Json(*c.zeta) : Json(nullptr);
  j["w"] = c.w ? Json(*c.w) : Json(nullptr);
  j["samples"] = c.samples;
  return j;
}

namespace {

Report execute_with(const RunConfig& c, std::ostream& err) {
  if (c.precision_bits < 64 || c.precision_bits > 8192)
    throw UsageError("--precision-bits must lie in [64, 8192]");
  if (!needs_single_parameter(c.subcommand) && (c.y || c.srf))
    throw UsageError("'" + c.subcommand + "' takes a grid, not --y/--srf");
  PrecisionScope scope(c.precision_bits);
  Report r;
  r.tool_version = SRF_VERSION;
  r.timestamp = utc_timestamp();
  r.config = config_json(c);
  if (needs_single_parameter(c.subcommand)) {
    const SystemParams p = system_params(c);
    r.config["parameter"] = Json{{"y", hp_json(p.y())}, {"srf", hp_json(p.srf())}};
  }
  bool incomplete = false;
  const std::string& s = c.subcommand;
  if (s == "gram") run_gram(c, r);
  else if (s == "smin") run_smin(c, r);
  else if (s == "epsilon") run_epsilon(c, r);
  else if (s == "spark") incomplete = run_spark(c, r);
  else if (s == "contiguity") run_contiguity(c, r);
  else if (s == "asymptote") run_asymptote(c, r);
  else if (s == "szego") run_szego(c, r);
  else if (s == "bounds") run_bounds(c, r);
  else if (s == "recover") run_recover(c, r);
  else if (s == "adversary") incomplete = run_adversary(c, r);
  else if (s == "minimax") run_minimax(c, r);
  else if (s == "scaling") run_scaling(c, r);
  else if (s == "selftest") run_selftest(c, r, err);
  else throw UsageError("unknown subcommand '" + s + "'");
  r.finalize(incomplete);
  return r;
}

}  // namespace

Report execute(const RunConfig& config) { return execute_with(config, std::cerr); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.precision_bits = precision_from_environment();

  CLI::App app{"Superresolution limits: spectral constants, Szego bounds and sparse recovery experiments", "srf"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", SRF_VERSION);

  std::string y, srf, mode, z, zeta, w;
  app.add_option("--y", y, "band fraction y in (0, 1/2)");
  app.add_option("--srf", srf, "superresolution factor, y = 1/SRF");
  app.add_option("--k", c.k, "sparsity level (criterion size, spark cap, l0 cap)");
  app.add_option("--n", c.n, "degree; support {0..n} when --support is absent");
  app.add_option("--span", c.span, "largest offset in exhaustive searches");
  app.add_option("--sigma", c.sigma, "noise level");
  app.add_option("--eps", c.eps, "spark threshold");
  app.add_option("--precision-bits", c.precision_bits, "working precision (default: SRF_PRECISION_BITS or 256)");
  app.add_option("--srf-grid", c.srf_grid, "SRF values for 'scaling'")->delimiter(',');
  app.add_option("--y-grid", c.y_grid, "y values for 'asymptote'")->delimiter(',');
  app.add_option("--mode", mode, "contiguous | exhaustive");
  app.add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", c.output, "write the report here instead of standard output");
  app.add_option("--seed", c.seed, "seed for sampled suites");
  app.add_option("--threads", c.threads, "worker threads (0: machine parallelism)");
  app.add_option("--support", c.support, "comma-separated offsets")->delimiter(',');
  app.add_option("--values", c.values, "comma-separated real coefficients for --support")->delimiter(',');
  app.add_option("--window", c.window, "measurement window: a..b or comma list");
  app.add_option("--z", z, "exterior point re,im or inf");
  app.add_option("--zeta", zeta, "second kernel argument re,im or inf");
  app.add_option("--w", w, "point of |w| > 1 for the interior map");
  app.add_option("--samples", c.samples, "random polynomials per degree in 'bounds'");
  for (const auto& name : kSubcommands) app.add_subcommand(name, "")->callback([&c, name] { c.subcommand = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }
  if (app.count("--y")) c.y = y;
  if (app.count("--srf")) c.srf = srf;
  if (app.count("--mode")) c.mode = mode;
  if (app.count("--z")) c.z = z;
  if (app.count("--zeta")) c.zeta = zeta;
  if (app.count("--w")) c.w = w;
  set_thread_count(c.threads);

  Report report;
  try {
    report = execute_with(c, err);
  } catch (const DomainError& e) {
    err << "srf: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "srf: " << e.what() << '\n';
    return kComputeError;
  } catch (const std::exception& e) {
    err << "srf: internal error: " << e.what() << '\n';
    return kComputeError;
  }

  const std::string text = c.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream file(c.output);
    if (!(file << text)) {
      err << "srf: cannot write " << c.output << '\n';
      return kComputeError;
    }
  }
  return report.status == Status::fail ? kChecksFailed : kPass;
}

}  // namespace srf::cli
