#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <argus/blaschke.hpp>
#include <argus/boundary.hpp>
#include <argus/contour_index.hpp>
#include <argus/cusp.hpp>
#include <argus/factory.hpp>
#include <argus/index_profile.hpp>
#include <argus/report.hpp>
#include <argus/suites.hpp>
#include <argus/types.hpp>

namespace {

using argus::cplx;
using argus::FunctionHandle;
using nlohmann::json;

struct FunctionOptions {
  std::string builtin;
  std::string spec_path;
};

void add_function_options(CLI::App* cmd, FunctionOptions& opts) {
  auto* b = cmd->add_option("--builtin", opts.builtin,
                            "builtin function name (counterexample, cusp-example-product)");
  auto* s = cmd->add_option("--spec", opts.spec_path, "path to a factory spec JSON file");
  b->excludes(s);
  s->excludes(b);
}

FunctionHandle resolve_function(const FunctionOptions& opts) {
  if (!opts.builtin.empty()) return argus::suites::builtin_by_name(opts.builtin);
  if (!opts.spec_path.empty()) {
    std::ifstream in(opts.spec_path);
    if (!in) throw argus::invalid_argument("cannot open spec file: " + opts.spec_path);
    json j;
    in >> j;
    return argus::build(argus::spec_from_json(j));
  }
  throw argus::invalid_argument("either --builtin or --spec is required");
}

// geometric:start:end:count, endpoints included.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4 || parts[0] != "geometric")
    throw argus::invalid_argument("grid syntax is geometric:start:end:count");
  const double start = std::stod(parts[1]);
  const double end = std::stod(parts[2]);
  const int count = std::stoi(parts[3]);
  if (!(start > 0.0) || !(end > 0.0) || count < 2)
    throw argus::invalid_argument("geometric grid needs positive endpoints and count >= 2");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i)
    grid[i] = start * std::pow(end / start, static_cast<double>(i) / (count - 1));
  return grid;
}

argus::Region parse_region(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "cone") return argus::Region::cone(std::stod(arg));
  if (kind == "cone-infinity") return argus::Region::cone_infinity();
  if (kind == "half-plane") {
    const auto comma = arg.find(',');
    return argus::Region::half_plane(
        {std::stod(arg.substr(0, comma)), comma == std::string::npos ? 0.0 : std::stod(arg.substr(comma + 1))});
  }
  if (kind == "slit-plane") return argus::Region::slit_plane();
  if (kind == "upper-half-disc") return argus::Region::upper_half_disc();
  if (kind == "upper-half-plane") return argus::Region::upper_half_plane();
  throw argus::invalid_argument("unknown region: " + text);
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw argus::invalid_argument("cannot open output path: " + path);
  out << content;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

int print_checks(const std::vector<argus::CheckRecord>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    std::printf("%-4s %-34s measured=%.6g expected=%.6g tol=%.1g\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.measured, c.expected, c.tolerance);
    all = all && c.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical boundary-index laboratory"};
  app.require_subcommand(1);

  double tolerance = 1e-8;
  app.add_option("--tolerance", tolerance, "numeric tolerance for index computations")
      ->check(CLI::Range(1e-12, 1e-2))
      ->capture_default_str();

  std::string output_path;
  app.add_option("--output", output_path, "output path ('-' or empty for stdout)");
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

  // index-profile
  auto* profile_cmd = app.add_subcommand("index-profile", "I(r) over a radius grid");
  FunctionOptions profile_fn;
  add_function_options(profile_cmd, profile_fn);
  std::string grid_text = "geometric:0.25:0.001:12";
  profile_cmd->add_option("--grid", grid_text, "geometric:start:end:count")->capture_default_str();

  // jump-check
  auto* jump_cmd = app.add_subcommand("jump-check", "one-sided limits of I at the zero radii");
  FunctionOptions jump_fn;
  add_function_options(jump_cmd, jump_fn);
  double delta0 = 1e-4;
  jump_cmd->add_option("--delta", delta0, "base offset for Richardson extrapolation")
      ->capture_default_str();

  // summation-check
  auto* sum_cmd = app.add_subcommand("summation-check", "telescoping identity over the ledger");
  FunctionOptions sum_fn;
  add_function_options(sum_cmd, sum_fn);
  int sum_levels = 0;
  sum_cmd->add_option("--levels", sum_levels, "number of ledger radii to telescope (default all)");
  double sum_delta = 1e-4;
  sum_cmd->add_option("--delta", sum_delta, "epsilon base for segment limits")->capture_default_str();

  // j-profile
  auto* jprof_cmd = app.add_subcommand("j-profile", "log-averaged index J(r)");
  FunctionOptions jprof_fn;
  add_function_options(jprof_cmd, jprof_fn);
  std::string jgrid_text = "geometric:1:0.0001:257";
  jprof_cmd->add_option("--grid", jgrid_text, "geometric:start:end:count; must start at 1")
      ->capture_default_str();
  std::vector<int> j_indices;
  jprof_cmd->add_option("--at-index", j_indices, "grid indices at which to report J (default all)");

  // blaschke-eval
  auto* beval_cmd = app.add_subcommand("blaschke-eval", "cusp-window Blaschke product on a grid");
  int window_m = 20, window_n = 20;
  beval_cmd->add_option("--M", window_m, "window bound on |m|")->capture_default_str();
  beval_cmd->add_option("--N", window_n, "window bound on n")->capture_default_str();
  std::vector<std::string> eval_points;
  beval_cmd->add_option("--z", eval_points, "evaluation points re[,im]")->required();
  double beval_eps = 1.0;
  beval_cmd->add_option("--eps", beval_eps, "required truncation error bound")->capture_default_str();

  // blaschke-cert
  auto* bcert_cmd = app.add_subcommand("blaschke-cert", "convergence certificate for the window");
  int cert_m = 20, cert_n = 20;
  bcert_cmd->add_option("--M", cert_m, "window bound on |m|")->capture_default_str();
  bcert_cmd->add_option("--N", cert_n, "window bound on n")->capture_default_str();

  // cusp-envelope
  auto* cusp_cmd = app.add_subcommand("cusp-envelope", "Warschawski envelope and exponent coefficients");
  int cusp_exponent = 2;
  cusp_cmd->add_option("--exponent", cusp_exponent, "leading exponent N")->capture_default_str();
  std::vector<double> cusp_coeffs{1.0};
  cusp_cmd->add_option("--coeffs", cusp_coeffs, "a_N, a_{N+1}, ...")->capture_default_str();
  double cusp_endpoint = 0.5;
  cusp_cmd->add_option("--endpoint", cusp_endpoint, "right endpoint a")->capture_default_str();
  std::vector<double> cusp_ts;
  cusp_cmd->add_option("--t", cusp_ts, "evaluation points")->required();

  // vanishing-order
  auto* vanish_cmd = app.add_subcommand("vanishing-order", "boundary vanishing classification");
  FunctionOptions vanish_fn;
  add_function_options(vanish_cmd, vanish_fn);
  std::string vanish_point = "0,0";
  vanish_cmd->add_option("--point", vanish_point, "boundary point re[,im]")->capture_default_str();
  std::string vanish_from = "0,0.5";
  vanish_cmd->add_option("--from", vanish_from, "start of the straight approach path")
      ->capture_default_str();
  int vanish_nmax = 40;
  vanish_cmd->add_option("--n-max", vanish_nmax, "largest order to resolve")->capture_default_str();
  double vanish_base = 2.0;
  vanish_cmd->add_option("--base", vanish_base, "geometric base for approach scales")
      ->capture_default_str();

  // cone-certify
  auto* cone_cmd = app.add_subcommand("cone-certify", "image-in-region certificate on an interval");
  FunctionOptions cone_fn;
  add_function_options(cone_cmd, cone_fn);
  double cone_lo = -1.0, cone_hi = 1.0;
  cone_cmd->add_option("--lo", cone_lo, "interval left endpoint")->capture_default_str();
  cone_cmd->add_option("--hi", cone_hi, "interval right endpoint")->capture_default_str();
  std::string region_text = "cone-infinity";
  cone_cmd->add_option("--region", region_text, "cone:C | cone-infinity | half-plane:re,im | slit-plane")
      ->capture_default_str();
  int cone_samples = 400;
  cone_cmd->add_option("--samples", cone_samples, "sample count")->capture_default_str();

  // verify-all
  auto* verify_cmd = app.add_subcommand("verify-all", "run every verification suite");
  std::string inject_failure;
  verify_cmd->add_option("--inject-failure", inject_failure,
                         "add a deliberately failing negative-control check (jump-law)");

  // Let --tolerance/--output/--format appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands().front()->get_name();

    if (profile_cmd->parsed()) {
      const FunctionHandle f = resolve_function(profile_fn);
      argus::IndexProfile prof = argus::profile(f, parse_grid(grid_text), tolerance);
      for (const auto& entry : argus::ledger_from_zeros(f.declared_zeros)) {
        if (entry.radius < prof.radii.back() || entry.radius > prof.radii.front()) continue;
        const argus::JumpResult jr = argus::jump_at(f, entry, 1e-4, tolerance);
        prof.jumps.push_back({entry.radius, jr.left, jr.right});
      }
      if (format == "csv")
        write_text(output_path, argus::profile_to_csv(prof));
      else
        write_json(output_path, argus::profile_to_json(prof));
      return 0;
    }

    if (jump_cmd->parsed()) {
      const FunctionHandle f = resolve_function(jump_fn);
      json rows = json::array();
      bool all = true;
      for (const auto& entry : argus::ledger_from_zeros(f.declared_zeros)) {
        const argus::JumpResult jr = argus::jump_at(f, entry, delta0, tolerance);
        const bool pass = std::abs(jr.residual) < 1e-3;
        all = all && pass;
        rows.push_back({{"radius", entry.radius},
                        {"left", jr.left},
                        {"right", jr.right},
                        {"jump", jr.jump},
                        {"predicted", entry.interior_mult + 0.5 * entry.boundary_mult},
                        {"residual", jr.residual},
                        {"pass", pass}});
      }
      write_json(output_path, {{"schema", 1}, {"command", command}, {"jumps", rows}, {"all_pass", all}});
      return all ? 0 : 1;
    }

    if (sum_cmd->parsed()) {
      const FunctionHandle f = resolve_function(sum_fn);
      const argus::ZeroLedger ledger = argus::ledger_from_zeros(f.declared_zeros);
      if (ledger.size() < 2)
        throw argus::invalid_argument("summation-check needs at least two zero radii");
      const int levels = sum_levels > 0 ? sum_levels : static_cast<int>(ledger.size()) - 1;
      const double residual = argus::summation_relation(f, ledger, levels, sum_delta, tolerance);
      const bool pass = std::abs(residual) < 1e-3;
      write_json(output_path, {{"schema", 1},
                               {"command", command},
                               {"levels", levels},
                               {"residual", residual},
                               {"pass", pass}});
      return pass ? 0 : 1;
    }

    if (jprof_cmd->parsed()) {
      const FunctionHandle f = resolve_function(jprof_fn);
      const std::vector<double> grid = parse_grid(jgrid_text);
      const argus::IndexProfile prof = argus::profile(f, grid, tolerance);
      std::vector<int> indices = j_indices;
      if (indices.empty())
        for (std::size_t i = 2; i < prof.radii.size(); ++i) indices.push_back(static_cast<int>(i));
      json rows = json::array();
      for (int i : indices) {
        if (i < 2 || static_cast<std::size_t>(i) >= prof.radii.size())
          throw argus::invalid_argument("--at-index out of range");
        double err = 0.0;
        const double jval = argus::J_profile(prof, prof.radii[i], &err);
        rows.push_back({{"r", prof.radii[i]}, {"J", jval}, {"err", err}});
      }
      if (format == "csv") {
        std::string csv = "r,J,err\n";
        for (const auto& row : rows) {
          csv += argus::format_double(row["r"].get<double>()) + "," +
                 argus::format_double(row["J"].get<double>()) + "," +
                 argus::format_double(row["err"].get<double>()) + "\n";
        }
        write_text(output_path, csv);
      } else {
        write_json(output_path, {{"schema", 1}, {"command", command}, {"values", rows}});
      }
      return 0;
    }

    if (beval_cmd->parsed()) {
      const argus::BlaschkeSpec spec = argus::BlaschkeSpec::cusp_example(window_m, window_n);
      json rows = json::array();
      for (const auto& text : eval_points) {
        const cplx z = parse_complex(text);
        const argus::ProductResult res = argus::blaschke_product(spec, z, beval_eps);
        rows.push_back({{"z", {z.real(), z.imag()}},
                        {"value", {res.value.real(), res.value.imag()}},
                        {"abs", std::abs(res.value)},
                        {"truncation_error_bound", res.truncation_error_bound}});
      }
      write_json(output_path, {{"schema", 1},
                               {"command", command},
                               {"window", {{"M", window_m}, {"N", window_n}}},
                               {"values", rows}});
      return 0;
    }

    if (bcert_cmd->parsed()) {
      const argus::ConvergenceCertificate cert = argus::convergence_certificate(cert_m, cert_n);
      write_json(output_path,
                 {{"schema", 1},
                  {"command", command},
                  {"window", {{"M", cert.window.M}, {"N", cert.window.N}}},
                  {"partial_sum", cert.partial_sum},
                  {"tail_bound", cert.tail_bound},
                  {"pointwise_bound_checked", cert.pointwise_bound_checked},
                  {"worst_pointwise_margin", cert.worst_pointwise_margin}});
      return 0;
    }

    if (cusp_cmd->parsed()) {
      const argus::CuspProfile prof(cusp_exponent, cusp_coeffs, cusp_endpoint);
      json rows = json::array();
      std::string csv = "t,F\n";
      for (double t : cusp_ts) {
        const double fval = argus::warschawski_envelope(prof, t);
        rows.push_back({{"t", t}, {"F", fval}});
        csv += argus::format_double(t) + "," + argus::format_double(fval) + "\n";
      }
      if (format == "csv") {
        write_text(output_path, csv);
      } else {
        write_json(output_path, {{"schema", 1},
                                 {"command", command},
                                 {"values", rows},
                                 {"exponent_coefficients", argus::kaiser_lehner_coeffs(prof)}});
      }
      return 0;
    }

    if (vanish_cmd->parsed()) {
      const FunctionHandle f = resolve_function(vanish_fn);
      const cplx a = parse_complex(vanish_point);
      const argus::PathSpec approach = argus::PathSpec::segment(parse_complex(vanish_from), a);
      const argus::VanishingReport rep =
          argus::vanishing_order(f, a, approach, vanish_nmax, vanish_base);
      std::string kind;
      switch (rep.kind) {
        case argus::VanishingReport::Kind::OrderK: kind = "order-k"; break;
        case argus::VanishingReport::Kind::InfiniteOrderUpTo: kind = "infinite-order-up-to"; break;
        case argus::VanishingReport::Kind::Nonvanishing: kind = "nonvanishing"; break;
      }
      json trace = json::array();
      for (const auto& [scale, slope] : rep.slope_trace)
        trace.push_back({{"scale", scale}, {"local_order", slope}});
      write_json(output_path, {{"schema", 1},
                               {"command", command},
                               {"point", {a.real(), a.imag()}},
                               {"kind", kind},
                               {"order", rep.order},
                               {"n_max", rep.n_max},
                               {"deepest_reliable_scale", rep.deepest_reliable_scale},
                               {"slope_trace", trace}});
      return 0;
    }

    if (cone_cmd->parsed()) {
      const FunctionHandle f = resolve_function(cone_fn);
      const argus::ConeCertificate cert =
          argus::cone_certify(f, cone_lo, cone_hi, parse_region(region_text), cone_samples);
      json j = {{"schema", 1},
                {"command", command},
                {"ok", cert.ok},
                {"worst_margin", cert.worst_margin}};
      if (cert.witness) j["witness"] = {cert.witness->real(), cert.witness->imag()};
      write_json(output_path, j);
      return cert.ok ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const std::vector<argus::CheckRecord> checks =
          argus::suites::run_all(tolerance, inject_failure);
      const int status = print_checks(checks);
      if (!output_path.empty())
        write_json(output_path, argus::report_json("verify-all", tolerance, checks));
      return status;
    }

    throw argus::invalid_argument("unknown command");
  } catch (const argus::error& e) {
    json err = {{"schema", 1}, {"error", e.what()}};
    std::cerr << err.dump(2) << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
