#include "bcsreps/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcsreps/constants.hpp"
#include "bcsreps/gap.hpp"
#include "bcsreps/quadrature.hpp"
#include "bcsreps/roots.hpp"

namespace bcsreps::thermo {

namespace {

namespace cn = bcsreps::constants;
namespace nm = bcsreps::numerics;

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError("thermo: " + msg);
}

}  // namespace

double phi(double eta) {
  require(eta >= 0.0 && eta <= 1.0,
          "phi: eta must lie in [0, 1], got " + std::to_string(eta));
  if (eta == 0.0) return 0.0;
  // x = tanh u maps the logarithmic integrand onto 8 u^3 sech^2 u; the u_max
  // clamp keeps atanh finite at eta = 1 and truncates only an exponentially
  // small tail (~5e-12 at u_max ~ 18.8).
  const double u_max = std::atanh(std::min(eta, 1.0 - 1e-16));
  return nm::integral(
      [](double u) {
        const double s = 1.0 / std::cosh(u);
        return 8.0 * u * u * u * s * s;
      },
      0.0, u_max, 1e-12, 1e-12);
}

InteractionAverage hi_average_rep1(double T, double gN0, double T_D) {
  require(T > 0.0, "hi_average_rep1: T must be positive");
  require(gN0 > 0.0, "hi_average_rep1: gN0 must be positive");
  require(T_D > 0.0, "hi_average_rep1: T_D must be positive");
  const double u = T_D / (2.0 * T);
  // 2u - tanh(u) is the overflow-safe reduction of the textbook bracket
  // ln[(1 + tanh u)/(1 - tanh u)] - tanh u: the log term is 2 artanh(tanh u),
  // which loses all precision (and finally divides by zero) once tanh u
  // rounds to 1, i.e. for T well below the Debye temperature.
  InteractionAverage out{};
  out.value_over_kBT = -gN0 * (2.0 * u - std::tanh(u));
  out.volume_independent = true;
  return out;
}

double condensation_function(double tau) {
  require(tau >= 0.0, "condensation_function: tau must be non-negative");
  if (tau >= 1.0) return 0.0;
  const double e = gap::eta(tau);
  return e * e * e * e - 0.5 * tau * tau * tau * phi(e);
}

double hc_ratio_novel(double tau) {
  const double w = condensation_function(tau);
  if (w < 0.0) {
    if (w < -1e-9) {
      throw NumericError(
          "hc_ratio_novel: condensation function significantly negative (" +
          std::to_string(w) + ") — inconsistent eta/phi evaluation");
    }
    return 0.0;  // clamp floating-point dust near tau = 1
  }
  return std::sqrt(w);
}

double hc0_novel(double g, double epsilon_F, double m, double N0, double T_c) {
  require(g > 0.0 && epsilon_F > 0.0 && m > 0.0 && N0 > 0.0 && T_c > 0.0,
          "hc0_novel: all inputs must be positive");
  const double kT = cn::k_B_cgs * T_c;
  const double form_a =
      2.0 * cn::pi * cn::pi * std::sqrt(g / (6.0 * cn::pi)) * N0 * kT;
  const double m_over_hbar2 = m / (cn::hbar_cgs * cn::hbar_cgs);
  const double form_b = std::sqrt(g * epsilon_F / (3.0 * cn::pi)) *
                        std::pow(m_over_hbar2, 1.5) * kT;
  const double rel = std::abs(form_b / form_a - 1.0);
  if (rel > 1e-8) {
    throw NumericError(
        "hc0_novel: the two equivalent field forms disagree by relative " +
        std::to_string(rel) + " — (m, epsilon_F, N0) are not consistent");
  }
  return form_a;
}

double hc0_standard(double N0, double T_c_prime) {
  require(N0 > 0.0 && T_c_prime > 0.0, "hc0_standard: inputs must be positive");
  return cn::pi / cn::exp_euler_gamma * std::sqrt(4.0 * cn::pi * N0) *
         cn::k_B_cgs * T_c_prime;
}

namespace {

// Linearized pairing integral Integral_0^1 tanh(u/2t)/u du; the inverse of
// the coupling at which the gap closes at reduced temperature t = T/T_D.
double linearized_pairing_integral(double t) {
  return nm::integral(
      [t](double u) {
        if (u < 1e-300) return 1.0 / (2.0 * t);
        return std::tanh(u / (2.0 * t)) / u;
      },
      0.0, 1.0, 1e-12);
}

// Squared-field coupling integral of the standard phase at reduced
// temperature t = T/T_D (in units of 8 pi N0 (hbar omega_D)^2):
//   I(t) = Integral_{1/gN0}^{s_up(t)} ds Delta^2(coupling 1/s, t).
// At t = 0 it is closed-form: Integral 1/sinh^2(s) ds = coth(1/gN0) - 1.
double field_coupling_integral(double t, double gN0) {
  const double s0 = 1.0 / gN0;
  if (t == 0.0) return 1.0 / std::tanh(s0) - 1.0;
  const double s_up = linearized_pairing_integral(t);
  if (s_up <= s0) return 0.0;  // above the critical temperature
  return nm::integral(
      [t](double s) {
        const double d = gap::bcs_gap_at(t, 1.0 / s, 1.0);
        return d * d;
      },
      s0, s_up, 1e-9, 1e-14);
}

}  // namespace

double hc_standard(double tau_prime, StandardFieldMode mode, double gN0) {
  require(tau_prime >= 0.0, "hc_standard: tau_prime must be non-negative");
  if (mode == StandardFieldMode::two_fluid) {
    return tau_prime >= 1.0 ? 0.0 : 1.0 - tau_prime * tau_prime;
  }
  require(gN0 > 0.0 && gN0 <= 0.5,
          "hc_standard: coupling-integral mode needs gN0 in (0, 0.5]");
  const double t_c = gap::bcs_tc(gN0, 1.0).numeric;
  const double i0 = field_coupling_integral(0.0, gN0);
  const double it = field_coupling_integral(tau_prime * t_c, gN0);
  return std::sqrt(std::max(0.0, it / i0));
}

std::vector<double> hc_standard_curve(const std::vector<double>& tau_primes,
                                      double gN0) {
  require(gN0 > 0.0 && gN0 <= 0.5,
          "hc_standard_curve: gN0 must lie in (0, 0.5]");
  const double t_c = gap::bcs_tc(gN0, 1.0).numeric;
  const double i0 = field_coupling_integral(0.0, gN0);
  std::vector<double> out;
  out.reserve(tau_primes.size());
  for (double tp : tau_primes) {
    require(tp >= 0.0, "hc_standard_curve: tau_prime must be non-negative");
    const double it = field_coupling_integral(tp * t_c, gN0);
    out.push_back(std::sqrt(std::max(0.0, it / i0)));
  }
  return out;
}

SpecificHeatNovel specific_heat_ratio_novel(double tau, double gN0) {
  require(tau >= 0.0, "specific_heat_ratio_novel: tau must be non-negative");
  require(gN0 > 0.0, "specific_heat_ratio_novel: gN0 must be positive");

  SpecificHeatNovel out{};
  if (tau > 1.0) {
    return out;  // both phases normal: no excess
  }
  if (tau == 0.0) {
    return out;  // exact limit of -(9 zeta3 / 2) tau at tau -> 0
  }
  double ratio;
  if (tau > 1.0 - 1e-6) {
    // Exact tau -> 1 limit of the direct formula (0/0 there).
    ratio = 9.0 * (1.0 - tau);
  } else {
    const double e = gap::eta(tau);
    const double e2 = e * e;
    const double denom = e2 + tau - 1.0;
    if (denom <= 0.0) {
      throw NumericError(
          "specific_heat_ratio_novel: non-positive denominator eta^2+tau-1 = " +
          std::to_string(denom) + " at tau = " + std::to_string(tau) +
          " — eta solver inconsistency");
    }
    ratio = 2.0 / (tau * tau) * e2 * e2 * (1.0 - e2) / denom -
            0.5 * tau * phi(e);
  }
  out.ratio = ratio;
  out.raw = 0.375 * gN0 * ratio;
  return out;
}

double specific_heat_standard(double tau_prime) {
  require(tau_prime >= 0.0, "specific_heat_standard: tau_prime must be >= 0");
  const double jump = 12.0 / (7.0 * cn::zeta3);
  if (tau_prime >= 0.9) return jump;
  if (tau_prime <= 0.2) return -1.0;
  // Linear bridge between the two asymptotic branches; visual guide only.
  return -1.0 + (tau_prime - 0.2) / 0.7 * (jump + 1.0);
}

double free_energy_ratio_sq(double T_c, double T_c_prime, double gN0) {
  require(T_c > 0.0 && T_c_prime > 0.0 && gN0 > 0.0,
          "free_energy_ratio_sq: inputs must be positive");
  const double r = T_c / T_c_prime;
  return cn::exp_euler_gamma * cn::exp_euler_gamma * gN0 * r * r / 6.0;
}

FreeEnergyCurves free_energy_curves(const std::vector<double>& T_grid,
                                    double T_c, double T_c_prime, double gN0) {
  const double scale = free_energy_ratio_sq(T_c, T_c_prime, gN0);
  FreeEnergyCurves out;
  out.T = T_grid;
  out.df_novel.reserve(T_grid.size());
  out.df_standard.reserve(T_grid.size());
  for (double T : T_grid) {
    require(T >= 0.0, "free_energy_curves: temperatures must be non-negative");
    out.df_novel.push_back(-scale * condensation_function(T / T_c));
    const double tp = T / T_c_prime;
    const double h = tp >= 1.0 ? 0.0 : 1.0 - tp * tp;
    out.df_standard.push_back(-h * h);
  }
  return out;
}

PhaseVerdict phase_select(double T, double T_c, double T_c_prime, double gN0) {
  require(T >= 0.0, "phase_select: T must be non-negative");
  PhaseVerdict v{};
  const double scale = free_energy_ratio_sq(T_c, T_c_prime, gN0);
  v.df_novel = -scale * condensation_function(T / T_c);
  const double tp = T / T_c_prime;
  const double h = tp >= 1.0 ? 0.0 : 1.0 - tp * tp;
  v.df_standard = -h * h;

  v.winner = Phase::normal;
  double best = 0.0;
  if (v.df_standard < best) {
    best = v.df_standard;
    v.winner = Phase::standard_bcs;
  }
  if (v.df_novel < best) {
    best = v.df_novel;
    v.winner = Phase::novel_film;
  }

  v.film_dominates_at_zero =
      T_c > std::sqrt(6.0 / gN0) / cn::exp_euler_gamma * T_c_prime;
  // At T = 0 the normalized free energies are -scale and -1, so the closed
  // form must match the direct ordering scale > 1.
  v.consistent = v.film_dominates_at_zero == (scale > 1.0);
  return v;
}

OmegaCheck omega_difference_check(double tau) {
  require(tau > 0.0 && tau < 1.0,
          "omega_difference_check: tau must lie in (0, 1)");
  OmegaCheck out{};
  out.closed_form = condensation_function(tau);
  if (out.closed_form < 1e-12) {
    throw NumericError(
        "omega_difference_check: condensation function too small at tau = " +
        std::to_string(tau) + " for a relative comparison");
  }

  // e(x) solves 1 = (2x/e) tanh(e / 2 tau); the left side decreases in e from
  // x/tau > 1 (x > tau inside the integration range) to below 1 at e = 2.
  auto pairing_energy = [tau](double x) {
    auto f = [tau, x](double e) {
      return 2.0 * x / e * std::tanh(e / (2.0 * tau)) - 1.0;
    };
    return nm::find_root_bracketed(f, 1e-12, 2.0, 0.0, 1e-15).root;
  };

  out.numeric = 3.0 / 16.0 *
                nm::integral(
                    [&](double x) {
                      const double e = pairing_energy(x);
                      const double e2 = e * e;
                      return e2 * e2 / (x * x);
                    },
                    tau, 1.0, 1e-9, 1e-14);
  out.residual = std::abs(out.numeric / out.closed_form - 1.0);
  return out;
}

OmegaCheck omega_difference_check(double T, double G_max, double T_F) {
  require(G_max > 0.0 && T_F > 0.0,
          "omega_difference_check: G_max and T_F must be positive");
  return omega_difference_check(T / (G_max * T_F));
}

}  // namespace bcsreps::thermo
