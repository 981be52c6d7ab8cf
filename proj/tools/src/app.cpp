#include "app.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "bcsreps/constants.hpp"
#include "bcsreps/errors.hpp"
#include "bcsreps/fock.hpp"
#include "bcsreps/gap.hpp"
#include "bcsreps/material.hpp"
#include "bcsreps/thermo.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "svg.hpp"

namespace bcsreps::cli {
namespace {

// --- config-file merging -----------------------------------------------------

// One settable parameter: its config-file key, the CLI option that may have
// set it already (flags always win), and how to assign a file value.
struct Binding {
  std::string key;
  CLI::Option* opt;
  std::function<void(const ConfigFile&, const ConfigEntry&)> assign;
};

// Keys any subcommand accepts.  A shared config file may carry keys for
// several subcommands; keys outside this registry are hard errors.
const std::set<std::string>& recognized_keys() {
  static const std::set<std::string> keys = {
      "tau_min", "tau_max", "n_points",  "gN0",      "T_D",
      "G",       "T_F",     "Tc",        "Tc_prime", "T",
      "standard_mode", "absolute_fields", "g",       "m",
      "epsilon_F",     "N0",              "pairs",   "seed",
      "k",       "q",       "L1",        "L2",       "L3",
      "lattice_budget"};
  return keys;
}

void apply_config_file(const std::string& path,
                       const std::vector<Binding>& bindings) {
  const ConfigFile file = parse_config_file(path);
  std::vector<std::string> unknown;
  for (const auto& entry : file.entries) {
    const Binding* bound = nullptr;
    for (const auto& b : bindings) {
      if (b.key == entry.key) {
        bound = &b;
        break;
      }
    }
    if (bound == nullptr) {
      if (recognized_keys().count(entry.key) == 0) {
        unknown.push_back(entry.key + " (line " + std::to_string(entry.line) +
                          ")");
      }
      continue;  // recognized elsewhere: ignored by this subcommand
    }
    if (bound->opt != nullptr && bound->opt->count() > 0) {
      continue;  // command line takes precedence
    }
    bound->assign(file, entry);
  }
  if (!unknown.empty()) {
    std::string msg = file.path + ": unknown keys:";
    for (std::size_t i = 0; i < unknown.size(); ++i) {
      msg += (i == 0 ? " " : ", ") + unknown[i];
    }
    throw DomainError(msg);
  }
}

Binding bind_key(std::string key, CLI::Option* opt, std::optional<double>* target) {
  return {std::move(key), opt,
          [target](const ConfigFile& f, const ConfigEntry& e) {
            *target = entry_as_double(f, e);
          }};
}

Binding bind_key(std::string key, CLI::Option* opt, double* target) {
  return {std::move(key), opt,
          [target](const ConfigFile& f, const ConfigEntry& e) {
            *target = entry_as_double(f, e);
          }};
}

Binding bind_key(std::string key, CLI::Option* opt, int* target) {
  return {std::move(key), opt,
          [target](const ConfigFile& f, const ConfigEntry& e) {
            *target = static_cast<int>(entry_as_int(f, e));
          }};
}

Binding bind_key(std::string key, CLI::Option* opt, unsigned* target) {
  return {std::move(key), opt,
          [target](const ConfigFile& f, const ConfigEntry& e) {
            const long v = entry_as_int(f, e);
            if (v < 0) {
              throw DomainError(f.path + ":" + std::to_string(e.line) +
                                ": value for '" + e.key +
                                "' must be non-negative");
            }
            *target = static_cast<unsigned>(v);
          }};
}

Binding bind_key(std::string key, CLI::Option* opt, bool* target) {
  return {std::move(key), opt,
          [target](const ConfigFile& f, const ConfigEntry& e) {
            *target = entry_as_bool(f, e);
          }};
}

Binding bind_key(std::string key, CLI::Option* opt, std::string* target) {
  return {std::move(key), opt,
          [target](const ConfigFile&, const ConfigEntry& e) {
            *target = e.value;
          }};
}

// --- shared helpers ------------------------------------------------------------

std::vector<double> linear_grid(double lo, double hi, int n,
                                const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError(std::string(what) + ": grid bounds must be finite");
  }
  if (n < 2) {
    throw DomainError(std::string(what) + ": n_points must be at least 2");
  }
  if (!(hi > lo)) {
    throw DomainError(std::string(what) +
                      ": the upper grid bound must exceed the lower one");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + step * i;
  }
  grid.back() = hi;  // land on the endpoint exactly
  return grid;
}

void require_all(const char* command,
                 std::initializer_list<
                     std::pair<const char*, const std::optional<double>*>>
                     params) {
  std::string missing;
  for (const auto& [flag, value] : params) {
    if (!value->has_value()) {
      missing += missing.empty() ? "" : ", ";
      missing += flag;
    }
  }
  if (!missing.empty()) {
    throw DomainError(std::string(command) + ": missing required " +
                      (missing.find(',') == std::string::npos ? "parameter "
                                                              : "parameters ") +
                      missing);
  }
}

void emit_curve(const CurveFile& curve, const std::string& out_path,
                const std::string& svg_path, const std::string& title) {
  const std::string csv = to_csv(curve);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  if (!svg_path.empty()) {
    write_file(svg_path, to_svg(curve, title));
  }
}

void emit_table(const std::vector<std::pair<std::string, double>>& rows,
                const std::string& out_path) {
  for (const auto& [name, value] : rows) {
    std::cout << name << " = " << format_value(value) << "\n";
  }
  if (!out_path.empty()) {
    write_file(out_path, to_csv(rows));
  }
}

// --- tc ------------------------------------------------------------------------

struct TcParams {
  std::optional<double> gN0, T_D, G, T_F;
  std::string out, config;
  std::vector<Binding> bindings;
};

void run_tc(const TcParams& p) {
  if (p.gN0.has_value() != p.T_D.has_value()) {
    throw DomainError("tc: --gN0 and --T-D must be given together");
  }
  if (p.G.has_value() != p.T_F.has_value()) {
    throw DomainError("tc: --G and --T-F must be given together");
  }
  if (!p.gN0 && !p.G) {
    throw DomainError(
        "tc: provide --gN0 with --T-D (standard phase) and/or --G with --T-F "
        "(film phase)");
  }
  std::vector<std::pair<std::string, double>> rows;
  if (p.gN0) {
    const gap::TcResult tc = gap::bcs_tc(*p.gN0, *p.T_D);
    rows.emplace_back("Tc_standard_closed_form", tc.closed_form);
    rows.emplace_back("Tc_standard_numeric", tc.numeric);
  }
  if (p.G) {
    rows.emplace_back("Tc_novel", gap::novel_tc(*p.G, *p.T_F));
  }
  emit_table(rows, p.out);
}

// --- gap-curve -------------------------------------------------------------------

struct GridParams {
  double tau_min = 0.001;
  double tau_max = 1.0;
  int n_points = 201;
  std::string out, svg, config;
  std::vector<Binding> bindings;
};

std::vector<double> tau_grid(const GridParams& p, const char* command) {
  if (p.tau_min < 0.0) {
    throw DomainError(std::string(command) + ": tau_min must be >= 0");
  }
  return linear_grid(p.tau_min, p.tau_max, p.n_points, command);
}

void run_gap_curve(const GridParams& p) {
  CurveFile curve;
  curve.header = {"tau", "eta"};
  for (const double t : tau_grid(p, "gap-curve")) {
    curve.rows.push_back({t, gap::eta(t)});
  }
  emit_curve(curve, p.out, p.svg, "Film-phase pairing amplitude eta(tau)");
}

// --- hc-curve -------------------------------------------------------------------

struct HcParams : GridParams {
  std::string standard_mode = "two_fluid";
  double gN0 = 0.2;
  bool absolute_fields = false;
  std::optional<double> g, m, epsilon_F, N0, Tc, Tc_prime;
};

void run_hc_curve(const HcParams& p) {
  thermo::StandardFieldMode mode;
  if (p.standard_mode == "two_fluid") {
    mode = thermo::StandardFieldMode::two_fluid;
  } else if (p.standard_mode == "coupling_integral") {
    mode = thermo::StandardFieldMode::coupling_integral;
  } else {
    throw DomainError(
        "hc-curve: --standard-mode must be 'two_fluid' or "
        "'coupling_integral', got '" +
        p.standard_mode + "'");
  }

  const std::vector<double> taus = tau_grid(p, "hc-curve");
  std::vector<double> rh_standard;
  if (mode == thermo::StandardFieldMode::coupling_integral) {
    rh_standard = thermo::hc_standard_curve(taus, p.gN0);
  } else {
    rh_standard.reserve(taus.size());
    for (const double t : taus) {
      rh_standard.push_back(thermo::hc_standard(t));
    }
  }

  CurveFile curve;
  curve.header = {"tau", "R_H_novel", "R_H_standard"};
  for (std::size_t i = 0; i < taus.size(); ++i) {
    curve.rows.push_back(
        {taus[i], thermo::hc_ratio_novel(taus[i]), rh_standard[i]});
  }

  if (p.absolute_fields) {
    require_all("hc-curve (--absolute-fields, Gaussian CGS)",
                {{"--g", &p.g},
                 {"--m", &p.m},
                 {"--epsilon-F", &p.epsilon_F},
                 {"--Tc", &p.Tc},
                 {"--Tc-prime", &p.Tc_prime}});
    const double hbar = constants::hbar_cgs;
    const double k_F = std::sqrt(2.0 * *p.m * *p.epsilon_F) / hbar;
    const double N0 = p.N0 ? *p.N0
                           : *p.m * k_F /
                                 (2.0 * constants::pi * constants::pi * hbar *
                                  hbar);
    const double h0_novel =
        thermo::hc0_novel(*p.g, *p.epsilon_F, *p.m, N0, *p.Tc);
    const double h0_standard = thermo::hc0_standard(N0, *p.Tc_prime);
    curve.header.push_back("H_novel_gauss");
    curve.header.push_back("H_standard_gauss");
    for (auto& row : curve.rows) {
      row.push_back(h0_novel * row[1]);
      row.push_back(h0_standard * row[2]);
    }
  }

  emit_curve(curve, p.out, p.svg, "Critical-field ratios H(T)/H(0)");
}

// --- cv-curve -------------------------------------------------------------------

void run_cv_curve(const GridParams& p) {
  CurveFile curve;
  curve.header = {"tau", "R_C"};
  for (const double t : tau_grid(p, "cv-curve")) {
    // The ratio is independent of the coupling; the raw excess (not emitted
    // here) would scale it by (3/8) gN0.
    curve.rows.push_back({t, thermo::specific_heat_ratio_novel(t, 0.2).ratio});
  }
  emit_curve(curve, p.out, p.svg, "Film-phase specific-heat excess");
}

// --- free-energy -----------------------------------------------------------------

struct FreeEnergyParams {
  std::optional<double> Tc, Tc_prime, gN0;
  int n_points = 201;
  std::string out, svg, config;
  std::vector<Binding> bindings;
};

void run_free_energy(const FreeEnergyParams& p) {
  require_all("free-energy", {{"--Tc", &p.Tc},
                              {"--Tc-prime", &p.Tc_prime},
                              {"--gN0", &p.gN0}});
  const double t_max = std::max(*p.Tc, *p.Tc_prime);
  const std::vector<double> T_grid =
      linear_grid(0.0, t_max, p.n_points, "free-energy");
  const thermo::FreeEnergyCurves fc =
      thermo::free_energy_curves(T_grid, *p.Tc, *p.Tc_prime, *p.gN0);

  CurveFile curve;
  curve.header = {"T", "df_novel", "df_standard"};
  for (std::size_t i = 0; i < fc.T.size(); ++i) {
    curve.rows.push_back({fc.T[i], fc.df_novel[i], fc.df_standard[i]});
  }
  emit_curve(curve, p.out, p.svg, "Condensation free energies");
}

// --- phase -----------------------------------------------------------------------

struct PhaseParams {
  std::optional<double> T, Tc, Tc_prime, gN0;
  std::string out, config;
  std::vector<Binding> bindings;
};

void run_phase(const PhaseParams& p) {
  require_all("phase", {{"--T", &p.T},
                        {"--Tc", &p.Tc},
                        {"--Tc-prime", &p.Tc_prime},
                        {"--gN0", &p.gN0}});
  const thermo::PhaseVerdict v =
      thermo::phase_select(*p.T, *p.Tc, *p.Tc_prime, *p.gN0);
  const char* winner = "normal";
  if (v.winner == thermo::Phase::standard_bcs) winner = "standard_bcs";
  if (v.winner == thermo::Phase::novel_film) winner = "novel_film";

  std::cout << "winner = " << winner << "\n";
  std::cout << "df_novel = " << format_value(v.df_novel) << "\n";
  std::cout << "df_standard = " << format_value(v.df_standard) << "\n";
  std::cout << "film_dominates_at_zero = "
            << (v.film_dominates_at_zero ? "true" : "false") << "\n";
  std::cout << "consistent = " << (v.consistent ? "true" : "false") << "\n";

  if (!p.out.empty()) {
    write_file(p.out,
               to_csv({{"winner_code", static_cast<double>(v.winner)},
                       {"df_novel", v.df_novel},
                       {"df_standard", v.df_standard},
                       {"film_dominates_at_zero",
                        v.film_dominates_at_zero ? 1.0 : 0.0},
                       {"consistent", v.consistent ? 1.0 : 0.0}}));
  }
}

// --- fock-verify -----------------------------------------------------------------

struct FockParams {
  int pairs = 3;
  unsigned seed = 12345;
  std::string out, config;
  std::vector<Binding> bindings;
};

void run_fock_verify(const FockParams& p) {
  if (p.pairs < 1 || p.pairs > 4) {
    throw DomainError("fock-verify: --pairs must be in [1, 4]");
  }
  std::mt19937 rng(p.seed);
  std::uniform_real_distribution<double> angle_dist(0.1, 1.2);
  std::uniform_real_distribution<double> xi_dist(-1.0, 1.0);

  const fock::OperatorSet ops = fock::build_mode_operators(p.pairs);
  fock::AlphaFamily family;
  std::vector<double> xi(static_cast<std::size_t>(p.pairs));
  for (int q = 0; q < p.pairs; ++q) {
    family.alpha.push_back(angle_dist(rng));
    xi[static_cast<std::size_t>(q)] = xi_dist(rng);
  }
  constexpr double delta = 0.7;
  constexpr double beta = 1.7;

  struct Check {
    std::string name;
    double deviation;
    double tol;
  };
  std::vector<Check> checks;

  checks.push_back(
      {"ring_original", fock::verify_ring(ops).max_abs_deviation, 1e-12});

  const fock::OperatorSet rotated = fock::bogoliubov_transform(ops, family);
  checks.push_back(
      {"ring_transformed", fock::verify_ring(rotated).max_abs_deviation,
       1e-12});

  const Eigen::MatrixXcd U = fock::exp_iQ(ops, family);
  double conj_dev = 0.0;
  for (int mode = 0; mode < 2 * p.pairs; ++mode) {
    const std::size_t j = static_cast<std::size_t>(mode);
    const Eigen::MatrixXcd lhs = U * ops.a[j] * U.adjoint();
    conj_dev =
        std::max(conj_dev, (lhs - rotated.a[j]).cwiseAbs().maxCoeff());
  }
  checks.push_back({"conjugation", conj_dev, 1e-10});

  const std::complex<double> overlap_matrix = U(0, 0);
  checks.push_back({"vacuum_overlap",
                    std::abs(overlap_matrix - fock::vacuum_overlap(family)),
                    1e-12});

  const Eigen::MatrixXcd h = fock::build_h02(ops, xi, delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const std::vector<double> closed =
      fock::h02_closed_form_spectrum(xi, delta);
  double spec_dev = 0.0;
  for (Eigen::Index i = 0; i < ops.dim; ++i) {
    spec_dev = std::max(spec_dev,
                        std::abs(solver.eigenvalues()[i] -
                                 closed[static_cast<std::size_t>(i)]));
  }
  checks.push_back({"spectrum", spec_dev, 1e-10});

  double thermal_dev = 0.0;
  for (int q = 0; q < p.pairs; ++q) {
    const double E = std::hypot(xi[static_cast<std::size_t>(q)], delta);
    const double expected = delta / (2.0 * E) * std::tanh(beta * E / 2.0);
    const std::complex<double> got =
        fock::thermal_anomalous_average(h, ops, beta, q);
    thermal_dev = std::max(thermal_dev, std::abs(got - expected));
  }
  checks.push_back({"thermal_average", thermal_dev, 1e-10});

  int failures = 0;
  std::vector<std::pair<std::string, double>> rows;
  for (const auto& c : checks) {
    const bool ok = c.deviation <= c.tol;
    failures += ok ? 0 : 1;
    char line[160];
    std::snprintf(line, sizeof line, "%s deviation=%.3e tol=%.0e %s",
                  c.name.c_str(), c.deviation, c.tol, ok ? "pass" : "FAIL");
    std::cout << line << "\n";
    rows.emplace_back(c.name, c.deviation);
  }
  std::cout << (failures == 0 ? "overall pass" : "overall FAIL") << "\n";
  if (!p.out.empty()) {
    write_file(p.out, to_csv(rows));
  }
  if (failures > 0) {
    throw NumericError("fock-verify: " + std::to_string(failures) +
                       " check(s) exceeded tolerance");
  }
}

// --- nu-count --------------------------------------------------------------------

struct NuParams {
  std::optional<double> k, q, L1, L2, L3;
  double lattice_budget = 1e8;
  std::string out, config;
  std::vector<Binding> bindings;
};

void run_nu_count(const NuParams& p) {
  require_all("nu-count", {{"--k", &p.k},
                           {"--q", &p.q},
                           {"--L1", &p.L1},
                           {"--L2", &p.L2},
                           {"--L3", &p.L3}});
  if (!gap::thin_shell_valid(*p.k, *p.q)) {
    char warn[160];
    std::snprintf(warn, sizeof warn,
                  "warning: q/k = %.3g is outside the thin-shell window "
                  "(q/k < 0.01); the continuum estimate may be biased",
                  *p.q / *p.k);
    std::cerr << warn << "\n";
  }
  const gap::LatticeCount r =
      gap::nu_count_lattice(*p.k, *p.q, *p.L1, *p.L2, *p.L3, p.lattice_budget);
  emit_table({{"count", r.count}, {"analytic", r.analytic}, {"ratio", r.ratio}},
             p.out);
}

// --- wiring ---------------------------------------------------------------------

void add_grid_options(CLI::App* sub, GridParams& p) {
  auto* tau_min =
      sub->add_option("--tau-min", p.tau_min,
                      "Lower end of the reduced-temperature grid (default "
                      "0.001)");
  auto* tau_max = sub->add_option("--tau-max", p.tau_max,
                                  "Upper end of the grid (default 1.0)");
  auto* n = sub->add_option("--n-points", p.n_points,
                            "Number of grid points (default 201)");
  p.bindings.push_back(bind_key("tau_min", tau_min, &p.tau_min));
  p.bindings.push_back(bind_key("tau_max", tau_max, &p.tau_max));
  p.bindings.push_back(bind_key("n_points", n, &p.n_points));
}

void add_io_options(CLI::App* sub, std::string* out, std::string* svg,
                    std::string* config) {
  sub->add_option("--out", *out, "Write the CSV to this file instead of stdout");
  if (svg != nullptr) {
    sub->add_option("--svg", *svg, "Also render the curve to this SVG file");
  }
  sub->add_option("--config", *config,
                  "Read 'key = value' defaults from this file (flags win)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Gap, critical-field, specific-heat and free-energy solvers for bulk "
      "and confined superconductors, with an exact finite-dimensional "
      "operator-algebra verifier."};
  app.set_version_flag("--version", "bcsreps 1.0.0");
  app.require_subcommand(1);

  // tc
  auto tc = std::make_shared<TcParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "tc", "Critical temperatures of the standard and film phases");
    auto* o1 = sub->add_option("--gN0", tc->gN0,
                               "Dimensionless coupling of the standard phase");
    auto* o2 = sub->add_option("--T-D", tc->T_D, "Debye temperature (K)");
    auto* o3 = sub->add_option("--G", tc->G,
                               "Effective film-phase coupling (dimensionless)");
    auto* o4 = sub->add_option("--T-F", tc->T_F, "Fermi temperature (K)");
    tc->bindings.push_back(bind_key("gN0", o1, &tc->gN0));
    tc->bindings.push_back(bind_key("T_D", o2, &tc->T_D));
    tc->bindings.push_back(bind_key("G", o3, &tc->G));
    tc->bindings.push_back(bind_key("T_F", o4, &tc->T_F));
    add_io_options(sub, &tc->out, nullptr, &tc->config);
    sub->callback([tc] {
      if (!tc->config.empty()) apply_config_file(tc->config, tc->bindings);
      run_tc(*tc);
    });
  }

  // gap-curve
  auto gapc = std::make_shared<GridParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "gap-curve", "Film-phase pairing amplitude eta over a tau grid");
    add_grid_options(sub, *gapc);
    add_io_options(sub, &gapc->out, &gapc->svg, &gapc->config);
    sub->callback([gapc] {
      if (!gapc->config.empty())
        apply_config_file(gapc->config, gapc->bindings);
      run_gap_curve(*gapc);
    });
  }

  // hc-curve
  auto hc = std::make_shared<HcParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "hc-curve",
        "Critical-field ratios of the film and standard phases over a tau "
        "grid");
    add_grid_options(sub, *hc);
    auto* om = sub->add_option(
        "--standard-mode", hc->standard_mode,
        "Standard-phase ratio model: two_fluid (default) or "
        "coupling_integral");
    auto* og = sub->add_option(
        "--gN0", hc->gN0,
        "Coupling for the coupling_integral mode (default 0.2)");
    auto* of = sub->add_flag(
        "--absolute-fields", hc->absolute_fields,
        "Append absolute fields in gauss (requires the CGS inputs below)");
    auto* o_g = sub->add_option("--g", hc->g, "Pairing coupling (erg cm^3)");
    auto* o_m = sub->add_option("--m", hc->m, "Carrier mass (g)");
    auto* o_e =
        sub->add_option("--epsilon-F", hc->epsilon_F, "Fermi energy (erg)");
    auto* o_n = sub->add_option(
        "--N0", hc->N0,
        "Density of states (1/(erg cm^3)); derived from m and epsilon-F "
        "when omitted");
    auto* o_tc =
        sub->add_option("--Tc", hc->Tc, "Film-phase critical temperature (K)");
    auto* o_tp = sub->add_option("--Tc-prime", hc->Tc_prime,
                                 "Standard-phase critical temperature (K)");
    hc->bindings.push_back(bind_key("standard_mode", om, &hc->standard_mode));
    hc->bindings.push_back(bind_key("gN0", og, &hc->gN0));
    hc->bindings.push_back(bind_key("absolute_fields", of, &hc->absolute_fields));
    hc->bindings.push_back(bind_key("g", o_g, &hc->g));
    hc->bindings.push_back(bind_key("m", o_m, &hc->m));
    hc->bindings.push_back(bind_key("epsilon_F", o_e, &hc->epsilon_F));
    hc->bindings.push_back(bind_key("N0", o_n, &hc->N0));
    hc->bindings.push_back(bind_key("Tc", o_tc, &hc->Tc));
    hc->bindings.push_back(bind_key("Tc_prime", o_tp, &hc->Tc_prime));
    add_io_options(sub, &hc->out, &hc->svg, &hc->config);
    sub->callback([hc] {
      if (!hc->config.empty()) apply_config_file(hc->config, hc->bindings);
      run_hc_curve(*hc);
    });
  }

  // cv-curve
  auto cv = std::make_shared<GridParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "cv-curve", "Film-phase specific-heat excess over a tau grid");
    add_grid_options(sub, *cv);
    add_io_options(sub, &cv->out, &cv->svg, &cv->config);
    sub->callback([cv] {
      if (!cv->config.empty()) apply_config_file(cv->config, cv->bindings);
      run_cv_curve(*cv);
    });
  }

  // free-energy
  auto fe = std::make_shared<FreeEnergyParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "free-energy",
        "Condensation free energies of both phases on a shared scale");
    auto* o1 = sub->add_option("--Tc", fe->Tc,
                               "Film-phase critical temperature (K)");
    auto* o2 = sub->add_option("--Tc-prime", fe->Tc_prime,
                               "Standard-phase critical temperature (K)");
    auto* o3 = sub->add_option("--gN0", fe->gN0,
                               "Dimensionless coupling of the standard phase");
    auto* o4 = sub->add_option("--n-points", fe->n_points,
                               "Number of temperature points (default 201)");
    fe->bindings.push_back(bind_key("Tc", o1, &fe->Tc));
    fe->bindings.push_back(bind_key("Tc_prime", o2, &fe->Tc_prime));
    fe->bindings.push_back(bind_key("gN0", o3, &fe->gN0));
    fe->bindings.push_back(bind_key("n_points", o4, &fe->n_points));
    add_io_options(sub, &fe->out, &fe->svg, &fe->config);
    sub->callback([fe] {
      if (!fe->config.empty()) apply_config_file(fe->config, fe->bindings);
      run_free_energy(*fe);
    });
  }

  // phase
  auto ph = std::make_shared<PhaseParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "phase", "Select the phase of least free energy at a temperature");
    auto* o1 = sub->add_option("--T", ph->T, "Temperature (K)");
    auto* o2 = sub->add_option("--Tc", ph->Tc,
                               "Film-phase critical temperature (K)");
    auto* o3 = sub->add_option("--Tc-prime", ph->Tc_prime,
                               "Standard-phase critical temperature (K)");
    auto* o4 = sub->add_option("--gN0", ph->gN0,
                               "Dimensionless coupling of the standard phase");
    ph->bindings.push_back(bind_key("T", o1, &ph->T));
    ph->bindings.push_back(bind_key("Tc", o2, &ph->Tc));
    ph->bindings.push_back(bind_key("Tc_prime", o3, &ph->Tc_prime));
    ph->bindings.push_back(bind_key("gN0", o4, &ph->gN0));
    add_io_options(sub, &ph->out, nullptr, &ph->config);
    sub->callback([ph] {
      if (!ph->config.empty()) apply_config_file(ph->config, ph->bindings);
      run_phase(*ph);
    });
  }

  // fock-verify
  auto fv = std::make_shared<FockParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "fock-verify",
        "Exact operator-algebra checks on the finite pairing model");
    auto* o1 = sub->add_option("--pairs", fv->pairs,
                               "Number of momentum pairs, 1..4 (default 3)");
    auto* o2 = sub->add_option("--seed", fv->seed,
                               "Seed for the random angles and level offsets");
    fv->bindings.push_back(bind_key("pairs", o1, &fv->pairs));
    fv->bindings.push_back(bind_key("seed", o2, &fv->seed));
    add_io_options(sub, &fv->out, nullptr, &fv->config);
    sub->callback([fv] {
      if (!fv->config.empty()) apply_config_file(fv->config, fv->bindings);
      run_fock_verify(*fv);
    });
  }

  // nu-count
  auto nu = std::make_shared<NuParams>();
  {
    CLI::App* sub = app.add_subcommand(
        "nu-count",
        "Exact standing-wave state count in a momentum shell vs the "
        "continuum estimate");
    auto* o1 = sub->add_option("--k", nu->k, "Shell center wavevector (1/m)");
    auto* o2 = sub->add_option("--q", nu->q, "Shell width (1/m)");
    auto* o3 = sub->add_option("--L1", nu->L1, "Box side 1 (m)");
    auto* o4 = sub->add_option("--L2", nu->L2, "Box side 2 (m)");
    auto* o5 = sub->add_option("--L3", nu->L3, "Box side 3 (m)");
    auto* o6 = sub->add_option(
        "--lattice-budget", nu->lattice_budget,
        "Abort if the bounding box holds more lattice points than this "
        "(default 1e8)");
    nu->bindings.push_back(bind_key("k", o1, &nu->k));
    nu->bindings.push_back(bind_key("q", o2, &nu->q));
    nu->bindings.push_back(bind_key("L1", o3, &nu->L1));
    nu->bindings.push_back(bind_key("L2", o4, &nu->L2));
    nu->bindings.push_back(bind_key("L3", o5, &nu->L3));
    nu->bindings.push_back(bind_key("lattice_budget", o6, &nu->lattice_budget));
    add_io_options(sub, &nu->out, nullptr, &nu->config);
    sub->callback([nu] {
      if (!nu->config.empty()) apply_config_file(nu->config, nu->bindings);
      run_nu_count(*nu);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace bcsreps::cli
