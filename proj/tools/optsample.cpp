// optsample: optimal sampling points for kernel reconstruction.
//
//   optsample points --kernel gaussian --dim 1 --domain=-3:3 --n 1 --objective supnorm --out run/
//   optsample experiment configs/experiment1.json --out exp1/
//   optsample oracle --mode exp2pt --a 0 --b 1 --grid 400 --out oracle/
//   optsample replay run/manifest.json --out rerun/

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "optsample/cli.hpp"

namespace {

using optsample::cli::json;

json grid_flag(const std::string& text) {
  json res = json::array();
  for (const auto& part : optsample::io::split(text, ',')) res.push_back(std::stoi(part));
  return res;
}

json measure_flag(const std::string& measure, const std::string& grid, int dim) {
  if (measure == "lebesgue") {
    json m{{"type", "grid"}};
    if (!grid.empty()) m["resolution"] = grid_flag(grid);
    return m;
  }
  if (measure.rfind("nodes:", 0) == 0) {
    const auto points = optsample::io::parse_points_csv(optsample::io::read_text(measure.substr(6)));
    if (points.cols() != dim) throw optsample::InvalidArgument("node file dimension does not match --dim");
    return json{{"type", "nodes"}, {"points", optsample::cli::detail::points_json(points)}};
  }
  throw optsample::InvalidArgument("--measure must be 'lebesgue' or 'nodes:<file>'");
}

// "x1,x2;y1,y2" -> [[x1,x2],[y1,y2]]
json points_flag(const std::string& text) {
  json out = json::array();
  for (const auto& p : optsample::io::split(text, ';')) {
    json row = json::array();
    for (const auto& c : optsample::io::split(p, ',')) row.push_back(optsample::io::parse_double(c));
    out.push_back(row);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = optsample::cli;
  CLI::App app{"Optimal sampling points for reconstruction in reproducing kernel Hilbert spaces"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: $OPTSAMPLE_THREADS or all cores)");

  // points
  auto* points = app.add_subcommand("points", "Optimize a sampling configuration");
  std::string kernel = "gaussian", domain = "-3:3", objective = "trace", grid, measure = "lebesgue", out;
  int dim = 1;
  long n = 0;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<long> max_iters;
  points->add_option("--kernel", kernel, "gaussian | sinc | exponential")->check(CLI::IsMember({"gaussian", "sinc", "exponential"}));
  points->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber);
  points->add_option("--domain", domain, "Box as lo:hi[,lo:hi...]");
  points->add_option("--n", n, "Number of sampling points")->required()->check(CLI::PositiveNumber);
  points->add_option("--objective", objective, "trace | subspace | supnorm")->check(CLI::IsMember({"trace", "trace_spectral", "subspace", "supnorm"}));
  points->add_option("--grid", grid, "Midpoint grid resolution per axis (comma-separated for d > 1)");
  points->add_option("--measure", measure, "lebesgue | nodes:<csv file>");
  points->add_option("--restarts", restarts, "Multistart count");
  points->add_option("--seed", seed, "Random seed");
  points->add_option("--max-iters", max_iters, "Nelder-Mead iteration cap per start");
  points->add_option("--out", out, "Output directory")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Optimal vs equally spaced comparison from a JSON config");
  std::string config_file;
  experiment->add_option("config", config_file, "Experiment JSON config")->required()->check(CLI::ExistingFile);
  experiment->add_option("--out", out, "Output directory")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Closed-form and exhaustive reference solutions");
  std::string mode, candidates_file, points_text, points_file;
  double a = 0.0, b = 1.0;
  int oracle_grid = 400, samples = 0;
  long candidates = 0;
  oracle->add_option("--mode", mode, "exp2pt | bruteforce | phi-profile")->required()->check(CLI::IsMember({"exp2pt", "bruteforce", "phi-profile"}));
  oracle->add_option("--a", a, "exp2pt: left end");
  oracle->add_option("--b", b, "exp2pt: right end");
  oracle->add_option("--grid", oracle_grid, "exp2pt: lattice subdivisions of [a,b]");
  oracle->add_option("--kernel", kernel, "Kernel family");
  oracle->add_option("--dim", dim, "Dimension");
  oracle->add_option("--domain", domain, "Box as lo:hi[,lo:hi...]");
  oracle->add_option("--n", n, "bruteforce: subset size");
  oracle->add_option("--objective", objective, "bruteforce: objective");
  oracle->add_option("--measure-grid", grid, "bruteforce: midpoint grid resolution");
  oracle->add_option("--candidates", candidates, "bruteforce: number of equally spaced candidates");
  oracle->add_option("--candidates-file", candidates_file, "bruteforce: candidate CSV");
  oracle->add_option("--points", points_text, "phi-profile: sampling points as x[,y][;x[,y]...]");
  oracle->add_option("--points-file", points_file, "phi-profile: sampling point CSV");
  oracle->add_option("--samples", samples, "phi-profile: profile samples per axis");
  oracle->add_option("--out", out, "Output directory")->required();

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  std::string manifest_file;
  replay->add_option("manifest", manifest_file, "manifest.json")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    if (*points) {
      json cfg{{"kernel", kernel}, {"dim", dim}, {"domain", cli::detail::domain_flag(domain)}, {"n", n},
               {"objective", objective}, {"measure", measure_flag(measure, grid, dim)}};
      json search = json::object();
      if (restarts) search["restarts"] = *restarts;
      if (seed) search["seed"] = *seed;
      if (max_iters) search["max_iters"] = *max_iters;
      cfg["search"] = search;
      cli::cmd_points(cli::points_config_from_json(cfg), out, threads);
    } else if (*experiment) {
      json cfg;
      try {
        cfg = json::parse(optsample::io::read_text(config_file));
      } catch (const json::parse_error& e) {
        throw optsample::InvalidArgument(std::string("config is not valid JSON: ") + e.what());
      }
      cli::cmd_experiment(cli::experiment_config_from_json(cfg), out, threads);
    } else if (*oracle) {
      json cfg{{"mode", mode}};
      if (mode == "exp2pt") {
        cfg.update({{"a", a}, {"b", b}, {"grid", oracle_grid}});
      } else {
        cfg.update({{"kernel", kernel}, {"dim", dim}, {"domain", cli::detail::domain_flag(domain)}});
        if (mode == "bruteforce") {
          cfg.update({{"n", n}, {"objective", objective}, {"measure", measure_flag("lebesgue", grid, dim)}});
          if (!candidates_file.empty())
            cfg["candidates"] = cli::detail::points_json(optsample::io::parse_points_csv(optsample::io::read_text(candidates_file)));
          else if (candidates > 0)
            cfg["candidates"] = candidates;
          else
            throw optsample::InvalidArgument("bruteforce needs --candidates or --candidates-file");
        } else {
          if (!points_file.empty())
            cfg["points"] = cli::detail::points_json(optsample::io::parse_points_csv(optsample::io::read_text(points_file)));
          else if (!points_text.empty())
            cfg["points"] = points_flag(points_text);
          else
            throw optsample::InvalidArgument("phi-profile needs --points or --points-file");
          if (samples > 0) cfg["samples"] = samples;
        }
      }
      cli::cmd_oracle(cli::oracle_config_resolve(cfg), out, threads);
    } else if (*replay) {
      json manifest;
      try {
        manifest = json::parse(optsample::io::read_text(manifest_file));
      } catch (const json::parse_error& e) {
        throw optsample::InvalidArgument(std::string("manifest is not valid JSON: ") + e.what());
      }
      cli::replay(manifest, out, threads);
    }
  } catch (const optsample::InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kNumerical;
  }
  return cli::kOk;
}
