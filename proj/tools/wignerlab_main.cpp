#include <CLI11.hpp>
#include <json.hpp>

#include "wignerlab/wignerlab.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

struct CliError {
  int code;
  std::string message;
};

double quad_tolerance() {
  const char* env = std::getenv("WIGNERLAB_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw CliError{exit_usage, "WIGNERLAB_TOL must be a positive number"};
  return v;
}

void check(wl_status s, const std::string& what) {
  if (s == WL_OK) return;
  const int code = s == WL_ERR_INVALID ? exit_usage : exit_domain;
  throw CliError{code, what + " failed: " + wl_status_name(s)};
}

ordered_json moments_json(const wl_moment_report& r) {
  return ordered_json{{"eta", r.eta},
                      {"var_z", r.var_z},
                      {"var_t", r.var_t},
                      {"var_u", r.var_u},
                      {"var_v", r.var_v},
                      {"var_qz", r.var_qz},
                      {"var_q0", r.var_q0},
                      {"var_qu", r.var_qu},
                      {"var_qv", r.var_qv},
                      {"product_z_qz", r.product_z_qz},
                      {"product_u_qu", r.product_u_qu},
                      {"product_v_qv", r.product_v_qv}};
}

std::vector<double> parse_eta_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0')
      throw CliError{exit_usage, "bad rapidity value: '" + item + "'"};
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

void parse_grid(const std::string& text, int* rows, int* cols) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos)
    throw CliError{exit_usage, "--grid expects WIDTHxHEIGHT, e.g. 101x101"};
  char* end = nullptr;
  const long w = std::strtol(text.c_str(), &end, 10);
  if (end != text.c_str() + x)
    throw CliError{exit_usage, "--grid expects WIDTHxHEIGHT, e.g. 101x101"};
  const char* rest = text.c_str() + x + 1;
  const long h = std::strtol(rest, &end, 10);
  if (*rest == '\0' || *end != '\0')
    throw CliError{exit_usage, "--grid expects WIDTHxHEIGHT, e.g. 101x101"};
  if (w < 2 || h < 2 || w > 100000 || h > 100000)
    throw CliError{exit_usage, "grid sides must be between 2 and 100000"};
  *rows = static_cast<int>(w);
  *cols = static_cast<int>(h);
}

int run_verify(const std::string& suite, double tol) {
  wl_report* rep = nullptr;
  const wl_status s = wl_verify_run(suite.c_str(), tol, &rep);
  if (s == WL_ERR_INVALID)
    throw CliError{exit_usage,
                   "unknown suite '" + suite +
                       "' (choose from algebra, contraction, oscillator, "
                       "spectral, moments, all)"};
  check(s, "verification");
  for (int i = 0; i < wl_report_count(rep); ++i) {
    char* line = nullptr;
    if (wl_report_entry_json(rep, i, &line) == WL_OK) {
      std::cout << line << '\n';
      wl_string_free(line);
    }
  }
  const bool ok = wl_report_all_passed(rep) == 1;
  wl_report_free(rep);
  return ok ? exit_ok : exit_check_failed;
}

int run_wavefunction(int n, double eta, const std::string& grid_text,
                     double range, bool momentum, const std::string& out_path) {
  int rows = 101;
  int cols = 101;
  if (!grid_text.empty()) parse_grid(grid_text, &rows, &cols);
  if (range <= 0.0) check(wl_default_grid_range(eta, &range), "grid range");

  wl_field* field = nullptr;
  if (momentum) {
    if (n != 0)
      throw CliError{exit_domain,
                     "--momentum is closed-form for the ground state only"};
    check(wl_field_sample_phi(eta, -range, range, rows, -range, range, cols,
                              &field),
          "sampling");
  } else {
    check(wl_field_sample_psi(n, eta, -range, range, rows, -range, range, cols,
                              &field),
          "sampling");
  }

  char* csv = nullptr;
  const wl_status s = wl_field_to_csv(field, &csv);
  if (s != WL_OK) {
    wl_field_free(field);
    check(s, "serialization");
  }
  int code = exit_ok;
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << csv;
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      code = exit_domain;
    }
  }
  wl_string_free(csv);
  wl_field_free(field);
  return code;
}

int run_moments(const std::string& eta_text, double tol) {
  for (double eta : parse_eta_list(eta_text)) {
    wl_moment_report analytic;
    wl_moment_report quadrature;
    check(wl_second_moments(eta, &analytic), "moments");
    check(wl_moments_quadrature(eta, tol, &quadrature), "moments");
    const ordered_json line{{"analytic", moments_json(analytic)},
                            {"quadrature", moments_json(quadrature)}};
    std::cout << line.dump() << '\n';
  }
  return exit_ok;
}

int run_parton(std::optional<double> eta_opt, std::optional<double> mass,
               std::optional<double> energy) {
  double eta = 0.0;
  if (eta_opt.has_value()) {
    if (mass.has_value() || energy.has_value())
      throw CliError{exit_usage, "give either --eta or --mass with --energy"};
    eta = *eta_opt;
  } else {
    if (!mass.has_value() || !energy.has_value())
      throw CliError{exit_usage, "give either --eta or --mass with --energy"};
    check(wl_rapidity_from_energy(*mass, *energy, &eta), "rapidity");
  }
  double ratio = 0.0;
  check(wl_interaction_time_ratio(eta, &ratio), "time ratio");
  wl_moment_report moments;
  check(wl_second_moments(eta, &moments), "moments");
  const ordered_json j{{"eta", eta},
                       {"time_ratio", ratio},
                       {"var_z", moments.var_z},
                       {"var_qz", moments.var_qz}};
  std::cout << j.dump() << '\n';
  return exit_ok;
}

int run_dispersion(double mass, double momentum) {
  double exact = 0.0;
  double nonrel = 0.0;
  double ultra = 0.0;
  check(wl_dispersion_limits(mass, momentum, &exact, &nonrel, &ultra),
        "dispersion");
  ordered_json j;
  j["mass"] = mass;
  j["momentum"] = momentum;
  j["exact"] = exact;
  if (std::isinf(nonrel))
    j["nonrelativistic"] = nullptr;
  else
    j["nonrelativistic"] = nonrel;
  j["ultrarelativistic"] = ultra;
  std::cout << j.dump() << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner little groups and the covariant oscillator"};
  app.set_version_flag("--version", wl_version());
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run invariant checks");
  std::string pos_suite;
  std::string opt_suite;
  auto* pos_opt = verify->add_option(
      "SUITE", pos_suite, "algebra|contraction|oscillator|spectral|moments|all");
  auto* named_opt = verify->add_option("--suite", opt_suite, "suite to run");

  auto* wavefunction =
      app.add_subcommand("wavefunction", "sample an oscillator mode on a grid");
  int wf_n = 0;
  double wf_eta = 0.0;
  std::string wf_grid;
  double wf_range = 0.0;
  bool wf_momentum = false;
  std::string wf_out;
  wavefunction->add_option("--n", wf_n, "excitation number")
      ->check(CLI::NonNegativeNumber);
  wavefunction->add_option("--eta", wf_eta, "boost rapidity");
  wavefunction->add_option("--grid", wf_grid, "grid size as WIDTHxHEIGHT");
  wavefunction->add_option("--range", wf_range,
                           "half-width of the sampling box (default: adapted)");
  wavefunction->add_flag("--momentum", wf_momentum,
                         "sample the momentum-energy amplitude instead");
  wavefunction->add_option("--out", wf_out, "write CSV here instead of stdout");

  auto* moments = app.add_subcommand("moments", "second moments per rapidity");
  std::string mom_eta;
  moments->add_option("--eta", mom_eta, "comma-separated rapidities")
      ->required();

  auto* parton =
      app.add_subcommand("parton", "boosted-frame interaction picture");
  std::optional<double> pt_eta;
  std::optional<double> pt_mass;
  std::optional<double> pt_energy;
  parton->add_option("--eta", pt_eta, "boost rapidity");
  parton->add_option("--mass", pt_mass, "rest mass");
  parton->add_option("--energy", pt_energy, "lab energy");

  auto* dispersion =
      app.add_subcommand("dispersion", "energy-momentum relation and limits");
  double ds_mass = 0.0;
  double ds_momentum = 0.0;
  dispersion->add_option("mass", ds_mass, "rest mass")->required();
  dispersion->add_option("momentum", ds_momentum, "momentum magnitude")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (app.got_subcommand(verify)) {
      if (pos_opt->count() > 0 && named_opt->count() > 0)
        throw CliError{exit_usage, "give the suite once"};
      const std::string suite = named_opt->count() > 0 ? opt_suite
                                : pos_opt->count() > 0 ? pos_suite
                                                       : "all";
      return run_verify(suite, quad_tolerance());
    }
    if (app.got_subcommand(wavefunction))
      return run_wavefunction(wf_n, wf_eta, wf_grid, wf_range, wf_momentum,
                              wf_out);
    if (app.got_subcommand(moments))
      return run_moments(mom_eta, quad_tolerance());
    if (app.got_subcommand(parton)) return run_parton(pt_eta, pt_mass, pt_energy);
    if (app.got_subcommand(dispersion))
      return run_dispersion(ds_mass, ds_momentum);
  } catch (const CliError& e) {
    std::cerr << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return exit_domain;
  }
  return exit_usage;
}
