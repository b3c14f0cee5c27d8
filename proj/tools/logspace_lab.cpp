// logspace-lab: command-line front end for the logspace library.
//
// Subcommands cover the metric/modular calculators, weight classification,
// analytic-function probes, the polynomial infimum search, and the named
// experiment suites.  Calculators print a small JSON object to stdout;
// `experiment` prints or writes a full report and exits nonzero when an
// asserted check fails.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "logspace/csv.hpp"
#include "logspace/experiments.hpp"
#include "logspace/logspace.hpp"

namespace {

using nlohmann::json;

logspace::MeasurePtr make_grid(const std::string& measure_csv, int grid_size, bool midpoint) {
  if (!measure_csv.empty()) return logspace::load_measure_csv(measure_csv);
  const std::size_t n = grid_size > 0 ? static_cast<std::size_t>(grid_size) : 256;
  return midpoint ? logspace::midpoint_grid(n) : logspace::lebesgue_grid(n);
}

logspace::SampledFunction load_fn(const std::string& desc, const std::string& csv,
                                  const logspace::MeasurePtr& m, double p, std::uint64_t seed) {
  if (!csv.empty()) return logspace::load_function_csv(csv, m);
  if (desc.empty()) throw CLI::ValidationError("provide a descriptor or a CSV path");
  return logspace::generate_function(desc, m, p, seed);
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int write_report(const logspace::ExperimentReport& rep, const std::string& out,
                 const std::string& format) {
  const std::string payload = format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  if (out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream os(out);
    if (!os) throw CLI::ValidationError("cannot open output file: " + out);
    os << payload;
    std::cerr << rep.experiment << ": " << (rep.pass() ? "pass" : "FAIL") << " -> " << out
              << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk laboratory for log-type function spaces on circle grids"};
  app.require_subcommand(1);

  // Options shared by several subcommands.
  double p = 1.0;
  int grid_size = 0;
  bool midpoint = false;
  std::uint64_t seed = 1;
  std::string measure_csv;

  const auto add_grid_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "space exponent p > 0")->check(CLI::PositiveNumber);
    cmd->add_option("--grid-size", grid_size, "number of circle-grid atoms (default 256)");
    cmd->add_flag("--midpoint", midpoint,
                  "shift grid atoms to interval midpoints (avoids t = 0 singularities)");
    cmd->add_option("--measure-csv", measure_csv, "load the measure from a CSV file instead");
    cmd->add_option("--seed", seed, "seed for sampled descriptors");
  };

  // ---------------------------------------------------------------- metric
  auto* metric = app.add_subcommand("metric", "distance between two functions");
  std::string kind = "d", f_desc, g_desc, f_csv, g_csv;
  metric->add_option("--kind", kind, "metric family: d, delta, or rho")
      ->check(CLI::IsMember({"d", "delta", "rho"}));
  metric->add_option("--f", f_desc, "first function descriptor, e.g. trig-affine:a=2,b=1");
  metric->add_option("--g", g_desc, "second function descriptor (default const:0)");
  metric->add_option("--f-csv", f_csv, "first function from CSV rows index,re,im");
  metric->add_option("--g-csv", g_csv, "second function from CSV");
  std::string weight_desc;
  metric->add_option("--weight", weight_desc, "weight descriptor for the rho family");
  add_grid_opts(metric);
  metric->callback([&] {
    const auto m = make_grid(measure_csv, grid_size, midpoint);
    const logspace::Exponent pe(p);
    const auto f = load_fn(f_desc, f_csv, m, p, seed);
    const auto g = g_desc.empty() && g_csv.empty()
                       ? logspace::constant_function(m, 0.0)
                       : load_fn(g_desc, g_csv, m, p, seed + 1);
    logspace::MetricValue v;
    if (kind == "d") {
      v = logspace::metric_d_p(f, g, pe);
    } else if (kind == "delta") {
      v = logspace::metric_delta_p(f, g, pe);
    } else if (!weight_desc.empty()) {
      const auto w = logspace::generate_weight(weight_desc, m, p, seed);
      v = logspace::metric_rho_w_p(f, g, w, pe);
    } else {
      v = logspace::metric_rho_p(f, g, pe);
    }
    json out = {{"kind", kind}, {"p", p}, {"value", v.value}, {"atoms", m->size()}};
    if (v.ky_fan_part) out["ky_fan_part"] = *v.ky_fan_part;
    if (v.integral_part) out["integral_part"] = *v.integral_part;
    if (!weight_desc.empty()) out["weight"] = weight_desc;
    emit(out);
  });

  // ---------------------------------------------------------------- modular
  auto* modular = app.add_subcommand("modular", "modular, norm, and sandwich slack");
  modular->add_option("--f", f_desc, "function descriptor");
  modular->add_option("--f-csv", f_csv, "function from CSV");
  modular->add_option("--weight", weight_desc, "optional weight descriptor");
  add_grid_opts(modular);
  modular->callback([&] {
    const auto m = make_grid(measure_csv, grid_size, midpoint);
    const logspace::Exponent pe(p);
    const auto f = load_fn(f_desc, f_csv, m, p, seed);
    json out = {{"p", p}, {"atoms", m->size()}};
    if (weight_desc.empty()) {
      out["modular"] = logspace::orlicz_modular(f, pe);
      out["norm"] = logspace::norm_p(f, pe);
      const auto sw = logspace::check_sandwich(f, pe);
      out["sandwich_ok"] = sw.ok;
    } else {
      const auto w = logspace::generate_weight(weight_desc, m, p, seed);
      out["modular"] = logspace::weighted_modular(f, w, pe);
      out["norm"] = logspace::weighted_norm_p(f, w, pe);
      out["weight"] = weight_desc;
    }
    emit(out);
  });

  // ---------------------------------------------------------------- fnorm
  auto* fnorm = app.add_subcommand("fnorm", "F-norm |f|_p by bisection");
  double rel_tol = 1e-12, residual_tol = 1e-10;
  fnorm->add_option("--f", f_desc, "function descriptor");
  fnorm->add_option("--f-csv", f_csv, "function from CSV");
  fnorm->add_option("--weight", weight_desc, "optional weight descriptor");
  fnorm->add_option("--rel-tol", rel_tol, "bracket width tolerance (default 1e-12)");
  fnorm->add_option("--residual-tol", residual_tol, "residual tolerance (default 1e-10)");
  add_grid_opts(fnorm);
  fnorm->callback([&] {
    const auto m = make_grid(measure_csv, grid_size, midpoint);
    const logspace::Exponent pe(p);
    const auto f = load_fn(f_desc, f_csv, m, p, seed);
    logspace::FNormOptions opt;
    opt.rel_tol = rel_tol;
    opt.residual_tol = residual_tol;
    const auto r = weight_desc.empty()
                       ? logspace::f_norm_detailed(f, pe, opt)
                       : logspace::f_norm_w_detailed(
                             f, logspace::generate_weight(weight_desc, m, p, seed), pe, opt);
    emit({{"p", p},
          {"value", r.value},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"atoms", m->size()}});
  });

  // ------------------------------------------------------- classify-weights
  auto* classify = app.add_subcommand("classify-weights",
                                      "compare the spaces generated by two weights");
  std::string w_desc = "expneg:a=1,b=1/p", omega_desc = "const:1", ladder_text;
  classify->add_option("--w", w_desc, "weight descriptor (default expneg:a=1,b=1/p)");
  classify->add_option("--omega", omega_desc, "reference weight (default const:1)");
  classify->add_option("--ladder", ladder_text,
                       "refinement exponents, comma separated (default 8,10,...,20)");
  classify->add_option("--p", p, "space exponent")->check(CLI::PositiveNumber);
  classify->callback([&] {
    const logspace::Exponent pe(p);
    logspace::ClassifyOptions opt;
    if (!ladder_text.empty()) opt.ladder = parse_ladder(ladder_text);
    const auto r = logspace::classify_weights(logspace::parse_descriptor(w_desc, p),
                                              logspace::parse_descriptor(omega_desc, p), pe, opt);
    emit({{"p", p},
          {"w", w_desc},
          {"omega", omega_desc},
          {"relation", logspace::to_string(r.relation)},
          {"grid_sizes", r.grid_sizes},
          {"logplus_energies", r.logplus_energies},
          {"abs_energies", r.abs_energies},
          {"note", r.note}});
  });

  // ---------------------------------------------------------------- privalov
  auto* privalov = app.add_subcommand("privalov",
                                      "radial log^+ means of an analytic function");
  std::string poly_coeffs, radii_text = "0.5,0.9,0.99";
  privalov->add_option("--poly", poly_coeffs, "polynomial coefficients c0,c1,... (complex as re)");
  privalov->add_option("--weight", weight_desc, "outer function with this boundary modulus");
  privalov->add_option("--radii", radii_text, "probe radii, comma separated");
  add_grid_opts(privalov);
  privalov->callback([&] {
    const auto m = make_grid(measure_csv, grid_size, midpoint);
    const logspace::Exponent pe(p);
    std::optional<logspace::AnalyticFunction> fn;
    if (!poly_coeffs.empty()) {
      std::vector<std::complex<double>> cs;
      std::stringstream ss(poly_coeffs);
      std::string tok;
      while (std::getline(ss, tok, ',')) cs.emplace_back(std::stod(tok), 0.0);
      fn = logspace::AnalyticFunction::polynomial(std::move(cs));
    } else if (!weight_desc.empty()) {
      fn = logspace::AnalyticFunction::outer_from_weight(
          logspace::generate_weight(weight_desc, m, p, seed));
    } else {
      throw CLI::ValidationError("provide --poly or --weight");
    }
    std::vector<double> radii;
    std::stringstream ss(radii_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) radii.push_back(std::stod(tok));
    const auto prof = logspace::privalov_profile(*fn, pe, radii, m);
    emit({{"p", p},
          {"radii", prof.radii},
          {"means", prof.means},
          {"sup_estimate", prof.sup_estimate},
          {"bounded", prof.bounded}});
  });

  // ------------------------------------------------------------ poly-infimum
  auto* polyinf = app.add_subcommand("poly-infimum",
                                     "minimize the modular over polynomials with P(0) = 1");
  int degree = 3, restarts = 20;
  std::string ratio_desc;
  polyinf->add_option("--degree", degree, "polynomial degree (default 3)")
      ->check(CLI::NonNegativeNumber);
  polyinf->add_option("--restarts", restarts, "random restarts (default 20)");
  polyinf->add_option("--ratio-weight", ratio_desc,
                      "multiply samples by this weight ratio before the modular");
  add_grid_opts(polyinf);
  polyinf->callback([&] {
    const auto m = make_grid(measure_csv, grid_size, midpoint);
    const logspace::Exponent pe(p);
    logspace::PolyInfimumOptions opt;
    opt.degree = degree;
    opt.restarts = restarts;
    opt.seed = seed;
    if (!ratio_desc.empty()) {
      opt.ratio = logspace::generate_weight(ratio_desc, m, p, seed).values;
    }
    const auto r = logspace::poly_modular_infimum(m, pe, opt);
    json coeffs = json::array();
    for (const auto& c : r.coeffs) coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    emit({{"p", p},
          {"degree", degree},
          {"best_value", r.best_value},
          {"coeffs", coeffs},
          {"best_restart", r.best_restart},
          {"evaluations", r.evaluations},
          {"unweighted_reference", std::pow(std::numbers::ln2, p)}});
  });

  // ------------------------------------------------------------- experiment
  auto* expcmd = app.add_subcommand("experiment", "run a named experiment suite");
  std::string exp_name, out_path, format = "json", ladder_text2;
  std::vector<double> p_list;
  int triples = 1000;
  bool list_only = false;
  expcmd->add_option("name", exp_name, "experiment name, or 'all'");
  expcmd->add_flag("--list", list_only, "print the experiment catalog and exit");
  expcmd->add_option("--p", p_list, "exponents to test (default per experiment)");
  expcmd->add_option("--grid-size", grid_size, "override the base grid size");
  expcmd->add_option("--ladder", ladder_text2, "refinement exponents, comma separated");
  expcmd->add_option("--seed", seed, "root seed (default 1)");
  expcmd->add_option("--triples", triples, "random triples for the axiom checks");
  expcmd->add_option("--out", out_path, "write the report here instead of stdout");
  expcmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  expcmd->callback([&] {
    if (list_only) {
      for (const auto& e : logspace::experiment_catalog()) {
        std::cout << e.name << "\n    " << e.anchor << "\n";
      }
      return;
    }
    if (exp_name.empty()) throw CLI::ValidationError("experiment name required (or --list)");
    logspace::ExperimentConfig cfg;
    cfg.p_values = p_list;
    cfg.grid_size = grid_size;
    cfg.seed = seed;
    cfg.triples = triples;
    if (!ladder_text2.empty()) cfg.ladder = parse_ladder(ladder_text2);
    int rc = 0;
    if (exp_name == "all") {
      for (const auto& e : logspace::experiment_catalog()) {
        cfg.name = e.name;
        const auto rep = logspace::run_experiment(cfg);
        std::string path = out_path;
        if (!path.empty()) {
          const auto dot = path.rfind('.');
          path = dot == std::string::npos ? path + "-" + e.name
                                          : path.substr(0, dot) + "-" + e.name + path.substr(dot);
        }
        rc |= write_report(rep, path, format);
      }
    } else {
      cfg.name = exp_name;
      rc = write_report(logspace::run_experiment(cfg), out_path, format);
    }
    if (rc != 0) std::exit(1);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
