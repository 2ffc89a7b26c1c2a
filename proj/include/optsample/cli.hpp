#pragma once

// Subcommand drivers shared by the optsample executable and the tests. Every driver takes a
// fully resolved JSON config, writes its outputs plus manifest.json into an output directory,
// and can be replayed from that manifest.

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "bench.hpp"
#include "closedform.hpp"
#include "io.hpp"
#include "layout.hpp"
#include "objective.hpp"
#include "optimize.hpp"
#include "rkhs.hpp"
#include "spectral.hpp"

namespace optsample::cli {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline constexpr const char* kToolName = "optsample";
inline constexpr const char* kVersion = "0.1.0";

/// Exit status contract.
enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

namespace detail {

inline void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw InvalidArgument(where + ": unknown key '" + key + "'");
}

inline const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw InvalidArgument(where + ": missing key '" + key + "'");
  return j.at(key);
}

template <class T>
T as(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("config key '" + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const std::string& key, T fallback) {
  return j.contains(key) ? as<T>(j.at(key), key) : fallback;
}

inline json points_json(const PointSet& p) {
  json out = json::array();
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < p.cols(); ++c) row.push_back(p(r, c));
    out.push_back(row);
  }
  return out;
}

inline PointSet points_from_json(const json& j, int dim, const std::string& key) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("config key '" + key + "' must be a nonempty array of points");
  PointSet p(static_cast<Eigen::Index>(j.size()), dim);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (row.is_number() && dim == 1) {
      p(static_cast<Eigen::Index>(r), 0) = as<double>(row, key);
      continue;
    }
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw InvalidArgument("config key '" + key + "': every point needs " + std::to_string(dim) + " coordinates");
    for (int c = 0; c < dim; ++c) p(static_cast<Eigen::Index>(r), c) = as<double>(row[static_cast<std::size_t>(c)], key);
  }
  return p;
}

inline json domain_json(const BoxDomain& d) {
  json out = json::array();
  for (int i = 0; i < d.dim(); ++i) out.push_back(json::array({d.lo()(i), d.hi()(i)}));
  return out;
}

inline BoxDomain domain_from_json(const json& j, int dim) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("config key 'domain' must be a list of [lo, hi] pairs");
  std::vector<std::pair<double, double>> axes;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2) throw InvalidArgument("config key 'domain' must be a list of [lo, hi] pairs");
    axes.emplace_back(as<double>(a[0], "domain"), as<double>(a[1], "domain"));
  }
  if (axes.size() == 1 && dim > 1) axes.assign(static_cast<std::size_t>(dim), axes.front());
  if (static_cast<int>(axes.size()) != dim) throw InvalidArgument("config key 'domain' needs one interval per dimension");
  Eigen::VectorXd lo(dim), hi(dim);
  for (int i = 0; i < dim; ++i) lo(i) = axes[static_cast<std::size_t>(i)].first, hi(i) = axes[static_cast<std::size_t>(i)].second;
  return BoxDomain(lo, hi);
}

/// Parses "lo:hi[,lo:hi...]".
inline json domain_flag(const std::string& text) {
  json out = json::array();
  for (const auto& axis : io::split(text, ',')) {
    const auto ends = io::split(axis, ':');
    if (ends.size() != 2) throw InvalidArgument("--domain expects lo:hi[,lo:hi...]");
    out.push_back(json::array({io::parse_double(ends[0]), io::parse_double(ends[1])}));
  }
  return out;
}

inline json measure_json(const MeasureSpec& m) {
  if (m.type == MeasureType::grid) return json{{"type", "grid"}, {"resolution", m.resolution}};
  return json{{"type", "nodes"}, {"points", points_json(m.points)}};
}

inline MeasureSpec measure_from_json(const json& j, const BoxDomain& domain) {
  const int dim = domain.dim();
  if (j.is_null()) return MeasureSpec{MeasureType::grid, default_resolution(dim), {}};
  check_keys(j, {"type", "resolution", "points", "count"}, "measure");
  const auto type = as<std::string>(require(j, "type", "measure"), "measure.type");
  if (type == "grid" || type == "lebesgue") {
    MeasureSpec m{MeasureType::grid, get_or<std::vector<int>>(j, "resolution", default_resolution(dim)), {}};
    if (m.resolution.size() == 1 && dim > 1) m.resolution.assign(static_cast<std::size_t>(dim), m.resolution.front());
    if (static_cast<int>(m.resolution.size()) != dim) throw InvalidArgument("config key 'measure.resolution' needs one entry per axis");
    for (int r : m.resolution)
      if (r < 2) throw InvalidArgument("config key 'measure.resolution' entries must be >= 2");
    return m;
  }
  if (type == "nodes") {
    if (j.contains("points")) return MeasureSpec{MeasureType::nodes, {}, points_from_json(j.at("points"), dim, "measure.points")};
    const auto count = as<Eigen::Index>(require(j, "count", "measure"), "measure.count");
    return MeasureSpec{MeasureType::nodes, {}, equally_spaced(domain, count)};
  }
  throw InvalidArgument("config key 'measure.type' must be 'grid' or 'nodes'");
}

inline json search_json(const SearchConfig& s) {
  return json{{"restarts", s.restarts}, {"max_iters", s.max_iters}, {"tol", s.tol},
              {"seed", s.seed}, {"simplex_scale", s.simplex_scale}};
}

/// Materializes the n- and domain-dependent defaults so a manifest fully pins the search.
inline SearchConfig search_from_json(const json& j, std::uint64_t default_seed, Eigen::Index n, const BoxDomain& domain) {
  SearchConfig s;
  s.seed = default_seed;
  if (!j.is_null()) {
    check_keys(j, {"restarts", "max_iters", "tol", "seed", "simplex_scale"}, "search");
    s.restarts = get_or<int>(j, "restarts", s.restarts);
    s.max_iters = get_or<long>(j, "max_iters", s.max_iters);
    s.tol = get_or<double>(j, "tol", s.tol);
    s.seed = get_or<std::uint64_t>(j, "seed", s.seed);
    s.simplex_scale = get_or<double>(j, "simplex_scale", s.simplex_scale);
  }
  if (s.restarts < 1) throw InvalidArgument("config key 'search.restarts' must be positive");
  if (!(s.tol > 0.0)) throw InvalidArgument("config key 'search.tol' must be positive");
  if (s.max_iters <= 0) s.max_iters = 2000L * n * domain.dim();
  if (!(s.simplex_scale > 0.0)) s.simplex_scale = 0.1 * domain.diameter();
  return s;
}

inline std::string manifest_text(const std::string& subcommand, const json& config, std::uint64_t seed,
                                 const std::vector<std::string>& outputs) {
  json m{{"tool", kToolName}, {"version", kVersion}, {"subcommand", subcommand},
         {"config", config},  {"seed", seed},        {"outputs", outputs}};
  return m.dump(2) + "\n";
}

inline void prepare_dir(const fs::path& out) { fs::create_directories(out); }

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// points

struct PointsConfig {
  KernelFamily kernel = KernelFamily::gaussian;
  int dim = 1;
  BoxDomain domain = BoxDomain::cube(-3.0, 3.0, 1);
  Eigen::Index n = 1;
  ObjectiveKind objective = ObjectiveKind::supnorm;
  MeasureSpec measure{MeasureType::grid, {201}, {}};
  SearchConfig search;
  double delta_sep = -1.0;  // negative: 1e-6 * domain diameter
};

inline PointsConfig points_config_from_json(const json& j) {
  detail::check_keys(j, {"kernel", "dim", "domain", "n", "objective", "measure", "search", "delta_sep"}, "points config");
  PointsConfig c;
  c.kernel = parse_kernel_family(detail::as<std::string>(detail::require(j, "kernel", "points config"), "kernel"));
  c.dim = detail::as<int>(detail::require(j, "dim", "points config"), "dim");
  if (c.dim < 1) throw InvalidArgument("config key 'dim' must be positive");
  c.domain = detail::domain_from_json(detail::require(j, "domain", "points config"), c.dim);
  c.n = detail::as<Eigen::Index>(detail::require(j, "n", "points config"), "n");
  if (c.n < 1) throw InvalidArgument("config key 'n' must be positive");
  c.objective = parse_objective_kind(detail::as<std::string>(detail::require(j, "objective", "points config"), "objective"));
  c.measure = detail::measure_from_json(j.value("measure", json()), c.domain);
  c.search = detail::search_from_json(j.value("search", json()), 0, c.n, c.domain);
  c.delta_sep = detail::get_or<double>(j, "delta_sep", -1.0);
  if (c.delta_sep < 0.0) c.delta_sep = 1e-6 * c.domain.diameter();
  return c;
}

inline json to_json(const PointsConfig& c) {
  return json{{"kernel", to_string(c.kernel)},          {"dim", c.dim},
              {"domain", detail::domain_json(c.domain)}, {"n", c.n},
              {"objective", to_string(c.objective)},     {"measure", detail::measure_json(c.measure)},
              {"search", detail::search_json(c.search)}, {"delta_sep", c.delta_sep}};
}

/// Writes points.csv, objective.json and manifest.json.
inline void cmd_points(const PointsConfig& given, const fs::path& out, int threads = 0) {
  const PointsConfig c = points_config_from_json(to_json(given));  // every default materialized
  const Kernel kernel(c.kernel, c.dim);
  const Measure measure = c.measure.build(c.domain);
  const auto spec = ObjectiveSpec::make(c.objective, kernel, measure, c.domain, c.n, c.delta_sep);
  SearchConfig search = c.search;
  search.threads = threads;
  const SearchResult r = optimize_points(spec, search);

  detail::prepare_dir(out);
  io::write_text(out / "points.csv", io::points_csv(r.points));
  const json objective{{"kind", to_string(c.objective)},
                       {"value", spec.natural(r.points)},
                       {"k_omega", k_omega(kernel, measure)},
                       {"phi_norm_2", phi_norm(kernel, r.points, measure, PhiNorm::l2)},
                       {"phi_norm_inf", phi_norm(kernel, r.points, measure, PhiNorm::sup)},
                       {"best_start_index", r.best_start_index},
                       {"starts_tried", r.starts_tried},
                       {"converged", r.converged}};
  io::write_text(out / "objective.json", objective.dump(2) + "\n");
  io::write_text(out / "manifest.json",
                 detail::manifest_text("points", to_json(c), c.search.seed, {"points.csv", "objective.json"}));
}

// ---------------------------------------------------------------------------------------------
// experiment

inline ExperimentConfig experiment_config_from_json(const json& j) {
  const std::string where = "experiment config";
  detail::check_keys(j, {"kernel", "dim", "domain", "n", "objective", "measure", "trials", "target", "seed", "search",
                         "error_grid_factor", "delta_sep"},
                     where);
  ExperimentConfig c;
  c.kernel = parse_kernel_family(detail::as<std::string>(detail::require(j, "kernel", where), "kernel"));
  c.dim = detail::as<int>(detail::require(j, "dim", where), "dim");
  if (c.dim < 1) throw InvalidArgument("config key 'dim' must be positive");
  c.domain = detail::domain_from_json(detail::require(j, "domain", where), c.dim);
  c.n = detail::as<Eigen::Index>(detail::require(j, "n", where), "n");
  if (c.n < 1) throw InvalidArgument("config key 'n' must be positive");
  c.objective = parse_objective_kind(detail::as<std::string>(detail::require(j, "objective", where), "objective"));
  c.measure = detail::measure_from_json(j.value("measure", json()), c.domain);
  c.trials = detail::get_or<int>(j, "trials", c.trials);
  c.seed = detail::get_or<std::uint64_t>(j, "seed", c.seed);
  if (j.contains("target")) {
    const json& t = j.at("target");
    detail::check_keys(t, {"terms_min", "terms_max", "coeff_range"}, "target");
    c.target.terms_min = detail::get_or<int>(t, "terms_min", c.target.terms_min);
    c.target.terms_max = detail::get_or<int>(t, "terms_max", c.target.terms_max);
    if (t.contains("coeff_range")) {
      const auto range = detail::as<std::vector<double>>(t.at("coeff_range"), "target.coeff_range");
      if (range.size() != 2) throw InvalidArgument("config key 'target.coeff_range' must be [lo, hi]");
      c.target.coeff_lo = range[0];
      c.target.coeff_hi = range[1];
    }
  }
  c.search = detail::search_from_json(j.value("search", json()), c.seed, c.n, c.domain);
  c.error_grid_factor = detail::get_or<int>(j, "error_grid_factor", c.error_grid_factor);
  c.delta_sep = detail::get_or<double>(j, "delta_sep", -1.0);
  if (c.delta_sep < 0.0) c.delta_sep = 1e-6 * c.domain.diameter();
  c.validate();
  return c;
}

inline json to_json(const ExperimentConfig& c) {
  return json{{"kernel", to_string(c.kernel)},
              {"dim", c.dim},
              {"domain", detail::domain_json(c.domain)},
              {"n", c.n},
              {"objective", to_string(c.objective)},
              {"measure", detail::measure_json(c.measure)},
              {"trials", c.trials},
              {"target", {{"terms_min", c.target.terms_min},
                          {"terms_max", c.target.terms_max},
                          {"coeff_range", {c.target.coeff_lo, c.target.coeff_hi}}}},
              {"seed", c.seed},
              {"search", detail::search_json(c.search)},
              {"error_grid_factor", c.error_grid_factor},
              {"delta_sep", c.delta_sep}};
}

inline json summary_json(const ExperimentReport& r) {
  return json{{"mean_improvement", r.mean_improvement},
              {"std_improvement", r.std_improvement},
              {"count_opt_worse", r.count_opt_worse},
              {"trials", r.e_opt.size()},
              {"points_opt", detail::points_json(r.points_opt)},
              {"points_equ", detail::points_json(r.points_equ)},
              {"objective_opt", r.objective_opt},
              {"objective_equ", r.objective_equ},
              {"best_start_index", r.best_start_index},
              {"converged", r.converged},
              {"redraws", r.redraws}};
}

/// Writes errors.csv, summary.json, points_opt.csv, points_equ.csv, plotdata_errors.csv, manifest.json.
inline ExperimentReport cmd_experiment(const ExperimentConfig& given, const fs::path& out, int threads = 0) {
  const ExperimentConfig c = experiment_config_from_json(to_json(given));  // every default materialized
  const ExperimentReport r = run_experiment(c, threads);
  detail::prepare_dir(out);

  std::string errors = "trial,e_opt,e_equ\n";
  std::string plot = "trial,e_opt,e_equ,improvement\n";
  for (std::size_t t = 0; t < r.e_opt.size(); ++t) {
    const auto opt = io::format_double(r.e_opt[t]);
    const auto equ = io::format_double(r.e_equ[t]);
    errors += std::to_string(t) + ',' + opt + ',' + equ + '\n';
    plot += std::to_string(t) + ',' + opt + ',' + equ + ',' + io::format_double(r.e_equ[t] - r.e_opt[t]) + '\n';
  }
  io::write_text(out / "errors.csv", errors);
  io::write_text(out / "plotdata_errors.csv", plot);
  io::write_text(out / "points_opt.csv", io::points_csv(r.points_opt));
  io::write_text(out / "points_equ.csv", io::points_csv(r.points_equ));
  io::write_text(out / "summary.json", summary_json(r).dump(2) + "\n");
  io::write_text(out / "manifest.json",
                 detail::manifest_text("experiment", to_json(c), c.seed,
                                       {"errors.csv", "summary.json", "points_opt.csv", "points_equ.csv",
                                        "plotdata_errors.csv"}));
  return r;
}

// ---------------------------------------------------------------------------------------------
// oracle

/**
 * Oracle configs are JSON objects keyed by "mode":
 *   exp2pt       a, b, grid
 *   bruteforce   kernel, dim, domain, n, objective, measure, candidates, delta_sep
 *   phi-profile  kernel, dim, domain, points, samples
 */
inline json oracle_config_resolve(const json& j) {
  const auto mode = detail::as<std::string>(detail::require(j, "mode", "oracle config"), "mode");
  if (mode == "exp2pt") {
    detail::check_keys(j, {"mode", "a", "b", "grid"}, "oracle config");
    json r{{"mode", mode}, {"a", detail::get_or<double>(j, "a", 0.0)}, {"b", detail::get_or<double>(j, "b", 1.0)},
           {"grid", detail::get_or<int>(j, "grid", 400)}};
    if (!(r["a"].get<double>() < r["b"].get<double>())) throw InvalidArgument("oracle: need a < b");
    if (r["grid"].get<int>() < 50) throw InvalidArgument("oracle: grid must be at least 50");
    return r;
  }
  if (mode == "bruteforce") {
    detail::check_keys(j, {"mode", "kernel", "dim", "domain", "n", "objective", "measure", "candidates", "delta_sep"},
                       "oracle config");
    const int dim = detail::as<int>(detail::require(j, "dim", "oracle config"), "dim");
    const BoxDomain domain = detail::domain_from_json(detail::require(j, "domain", "oracle config"), dim);
    parse_kernel_family(detail::as<std::string>(detail::require(j, "kernel", "oracle config"), "kernel"));
    parse_objective_kind(detail::as<std::string>(detail::require(j, "objective", "oracle config"), "objective"));
    const auto& cand = detail::require(j, "candidates", "oracle config");
    const PointSet candidates = cand.is_number_integer() ? equally_spaced(domain, cand.get<Eigen::Index>())
                                                         : detail::points_from_json(cand, dim, "candidates");
    return json{{"mode", mode},
                {"kernel", j.at("kernel")},
                {"dim", dim},
                {"domain", detail::domain_json(domain)},
                {"n", detail::as<Eigen::Index>(detail::require(j, "n", "oracle config"), "n")},
                {"objective", j.at("objective")},
                {"measure", detail::measure_json(detail::measure_from_json(j.value("measure", json()), domain))},
                {"candidates", detail::points_json(candidates)},
                {"delta_sep", detail::get_or<double>(j, "delta_sep", 1e-6 * domain.diameter())}};
  }
  if (mode == "phi-profile") {
    detail::check_keys(j, {"mode", "kernel", "dim", "domain", "points", "samples"}, "oracle config");
    const int dim = detail::as<int>(detail::require(j, "dim", "oracle config"), "dim");
    const BoxDomain domain = detail::domain_from_json(detail::require(j, "domain", "oracle config"), dim);
    parse_kernel_family(detail::as<std::string>(detail::require(j, "kernel", "oracle config"), "kernel"));
    const PointSet points = detail::points_from_json(detail::require(j, "points", "oracle config"), dim, "points");
    const int samples = detail::get_or<int>(j, "samples", dim == 1 ? 201 : 41);
    if (samples < 2) throw InvalidArgument("config key 'samples' must be >= 2");
    return json{{"mode", mode},    {"kernel", j.at("kernel")},           {"dim", dim},
                {"domain", detail::domain_json(domain)}, {"points", detail::points_json(points)},
                {"samples", samples}};
  }
  throw InvalidArgument("oracle: unknown mode '" + mode + "'");
}

/// Thrown when an exhaustive search would exceed its subset budget (exit status 2).
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void cmd_oracle(const json& resolved, const fs::path& out, int /*threads*/ = 0) {
  const auto mode = resolved.at("mode").get<std::string>();
  detail::prepare_dir(out);
  std::vector<std::string> outputs;

  if (mode == "exp2pt") {
    const double a = resolved.at("a"), b = resolved.at("b");
    const int grid = resolved.at("grid");
    const auto exact = closedform::exp_two_point_optimal(a, b);
    const auto swept = closedform::supmin_v_bruteforce(a, b, grid);
    const double step = (b - a) / grid;
    const double gap = std::max(std::abs(exact.x1 - swept.x1), std::abs(exact.x2 - swept.x2));
    const double length = b - a;
    const json report{{"closed_form", {{"x1", exact.x1}, {"x2", exact.x2}, {"value", exact.value}}},
                      {"grid_supmin", {{"x1", swept.x1}, {"x2", swept.x2}, {"value", swept.value}}},
                      {"gap", gap},
                      {"grid_step", step},
                      {"gap_in_steps", gap / step},
                      {"case_values",
                       {{"inside", closedform::interior_value(length)},
                        {"straddle", closedform::straddle_value(length)},
                        {"one_side", closedform::one_side_value(length)}}}};
    io::write_text(out / "exp2pt.json", report.dump(2) + "\n");
    outputs = {"exp2pt.json"};
  } else if (mode == "bruteforce") {
    const int dim = resolved.at("dim");
    const Kernel kernel(parse_kernel_family(resolved.at("kernel").get<std::string>()), dim);
    const BoxDomain domain = detail::domain_from_json(resolved.at("domain"), dim);
    const MeasureSpec mspec = detail::measure_from_json(resolved.at("measure"), domain);
    const auto n = resolved.at("n").get<Eigen::Index>();
    const PointSet candidates = detail::points_from_json(resolved.at("candidates"), dim, "candidates");
    if (optsample::detail::binomial_capped(static_cast<std::uint64_t>(candidates.rows()), static_cast<std::uint64_t>(n),
                                           1'000'000) > 1'000'000)
      throw BudgetExceeded("bruteforce: more than 10^6 subsets");
    const auto spec = ObjectiveSpec::make(parse_objective_kind(resolved.at("objective").get<std::string>()), kernel,
                                          mspec.build(domain), domain, n, resolved.at("delta_sep").get<double>());
    const SearchResult r = brute_force(spec, candidates, n);
    const json report{{"indices", r.candidate_indices},
                      {"objective_value", r.objective_value},
                      {"natural_value", spec.natural(r.points)},
                      {"subsets", r.starts_tried}};
    io::write_text(out / "bruteforce.json", report.dump(2) + "\n");
    io::write_text(out / "points.csv", io::points_csv(r.points));
    outputs = {"bruteforce.json", "points.csv"};
  } else {
    const int dim = resolved.at("dim");
    const Kernel kernel(parse_kernel_family(resolved.at("kernel").get<std::string>()), dim);
    const BoxDomain domain = detail::domain_from_json(resolved.at("domain"), dim);
    const PointSet x = detail::points_from_json(resolved.at("points"), dim, "points");
    const PointSet grid = optsample::detail::tensor_grid(domain, resolved.at("samples").get<Eigen::Index>());
    PointSet samples(grid.rows() + x.rows(), dim);
    samples << grid, x;
    samples = sorted_lex(samples);
    const Eigen::VectorXd phi = power_function(kernel, x, samples);
    std::string csv;
    for (int i = 0; i < dim; ++i) csv += (i ? ",x" : "x") + std::to_string(i + 1);
    csv += ",phi\n";
    for (Eigen::Index r = 0; r < samples.rows(); ++r) {
      for (int i = 0; i < dim; ++i) csv += io::format_double(samples(r, i)) + ',';
      csv += io::format_double(phi(r)) + '\n';
    }
    io::write_text(out / "phi_profile.csv", csv);
    outputs = {"phi_profile.csv"};
  }
  io::write_text(out / "manifest.json", detail::manifest_text("oracle", resolved, 0, outputs));
}

// ---------------------------------------------------------------------------------------------
// replay

/// Re-runs the subcommand recorded in a manifest, writing into `out`.
inline void replay(const json& manifest, const fs::path& out, int threads = 0) {
  const auto sub = detail::as<std::string>(detail::require(manifest, "subcommand", "manifest"), "subcommand");
  const json& config = detail::require(manifest, "config", "manifest");
  if (sub == "points") return cmd_points(points_config_from_json(config), out, threads);
  if (sub == "experiment") {
    cmd_experiment(experiment_config_from_json(config), out, threads);
    return;
  }
  if (sub == "oracle") return cmd_oracle(oracle_config_resolve(config), out, threads);
  throw InvalidArgument("manifest: unknown subcommand '" + sub + "'");
}

}  // namespace optsample::cli
