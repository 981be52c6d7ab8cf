#include "bcsreps/gap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcsreps/constants.hpp"
#include "bcsreps/quadrature.hpp"
#include "bcsreps/roots.hpp"

namespace bcsreps::gap {

namespace {

namespace cn = bcsreps::constants;
namespace nm = bcsreps::numerics;

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError("gap: " + msg);
}

// Integral_0^1 du tanh(u / (2t)) / u — the linearized (zero-gap) pairing
// integral; 1/gN0 at the critical temperature.
double linearized_pairing_integral(double t) {
  return nm::integral(
      [t](double u) {
        if (u < 1e-300) return 1.0 / (2.0 * t);
        return std::tanh(u / (2.0 * t)) / u;
      },
      0.0, 1.0, 1e-12);
}

}  // namespace

double bcs_delta0(double gN0) {
  require(gN0 > 0.0 && gN0 <= 1.0, "gN0 must lie in (0, 1], got " +
                                       std::to_string(gN0));
  return 1.0 / std::sinh(1.0 / gN0);
}

double bcs_gap_at(double T, double gN0, double T_D) {
  require(gN0 > 0.0 && gN0 <= 1.0, "gN0 must lie in (0, 1], got " +
                                       std::to_string(gN0));
  require(T >= 0.0, "T must be non-negative");
  require(T_D > 0.0, "T_D must be positive");

  if (T == 0.0) return bcs_delta0(gN0);
  const double t = T / T_D;

  // Above (or at) the critical temperature the only solution is D = 0.
  if (gN0 * linearized_pairing_integral(t) <= 1.0) return 0.0;

  auto resid = [gN0, t](double D) {
    const double I = nm::integral(
        [D, t](double u) {
          const double e = std::sqrt(u * u + D * D);
          return std::tanh(e / (2.0 * t)) / e;
        },
        0.0, 1.0, 1e-12);
    return gN0 * I - 1.0;
  };

  // resid is strictly decreasing in D; positive at the lower end below T_c,
  // and for gN0 <= 1 necessarily negative at D = 1 (the integral is at most
  // asinh(1) < 1 there).
  const auto r = nm::find_root_bracketed(resid, 1e-12, 1.0, 0.0, 1e-14);
  return r.root;
}

TcResult bcs_tc(double gN0, double T_D) {
  require(gN0 > 0.0 && gN0 <= 0.5, "gN0 must lie in (0, 0.5], got " +
                                       std::to_string(gN0));
  require(T_D > 0.0, "T_D must be positive");

  TcResult out{};
  out.closed_form = 2.0 * cn::exp_euler_gamma / cn::pi * T_D *
                    std::exp(-1.0 / gN0);

  auto f = [gN0](double t) {
    return gN0 * linearized_pairing_integral(t) - 1.0;
  };
  const double t_cf = out.closed_form / T_D;
  const auto r = nm::find_root_bracketed(f, 1e-6 * t_cf, 4.0 * t_cf, 0.0, 1e-14);
  out.numeric = r.root * T_D;
  return out;
}

double eta(double tau) {
  require(tau >= 0.0, "tau must be non-negative");
  if (tau >= 1.0) return 0.0;
  if (tau == 0.0) return 1.0;

  auto f = [tau](double e) { return e - std::tanh(e / tau); };
  // f(1e-12) < 0 for tau < 1 and f(1) >= 0, so [1e-12, 1] brackets the
  // largest (nontrivial) root; the trivial root at 0 lies outside.
  const auto r = nm::find_root_bracketed(f, 1e-12, 1.0, 0.0, 4e-16);
  return r.root;
}

double novel_tc(double G, double T_F) {
  require(G > 0.0 && std::isfinite(G), "G must be positive and finite");
  require(T_F > 0.0 && std::isfinite(T_F), "T_F must be positive and finite");
  return G * T_F;
}

double SpectrumDescriptor::excitation(double xi) const {
  const double axi = std::abs(xi);
  return axi <= epsilon ? epsilon : axi;
}

SpectrumDescriptor epsilon_of_t(double T, double G, double T_F,
                                double hbar_omega_D) {
  require(T >= 0.0, "T must be non-negative");
  SpectrumDescriptor d{};
  d.T_c = novel_tc(G, T_F);
  d.tau = T / d.T_c;
  d.eta = eta(d.tau);
  const double epsilon_F = cn::k_B_si * T_F;
  d.epsilon0 = 2.0 * G * epsilon_F;  // equals 2 k_B T_c
  d.epsilon = d.epsilon0 * d.eta;
  d.model_violation = d.epsilon > hbar_omega_D;
  return d;
}

double anomalous_average_novel(double xi, double T, double G, double T_F) {
  const SpectrumDescriptor d = epsilon_of_t(T, G, T_F);
  if (d.tau >= 1.0) return 0.0;
  const double axi = std::abs(xi);
  if (axi > d.epsilon) return 0.0;
  const double epsilon_F = cn::k_B_si * T_F;
  return std::sqrt(d.epsilon * d.epsilon - xi * xi) / (4.0 * G * epsilon_F);
}

double nu_count_analytic(double k, double q,
                         const material::Geometry& geometry) {
  require(k > 0.0 && q > 0.0, "k and q must be positive");
  const double pref = q * k * k / (cn::pi * cn::pi);
  if (const auto* box = std::get_if<material::Box>(&geometry)) {
    return pref * box->L1 * box->L2 * box->L3;
  }
  if (const auto* film = std::get_if<material::Film>(&geometry)) {
    return pref * film->d;  // per unit lateral area
  }
  const auto& bulk = std::get<material::IsotropicBulk>(geometry);
  return pref * bulk.L * bulk.L * bulk.L;
}

double nu_count_cube_convention(double k, double L) {
  return 2.0 * std::sqrt(3.0) / cn::pi * k * k * L * L;
}

bool thin_shell_valid(double k, double q) { return q / k < 0.01; }

LatticeCount nu_count_lattice(double k, double q, double L1, double L2,
                              double L3, double budget) {
  require(k > 0.0 && q > 0.0, "k and q must be positive");
  require(L1 > 0.0 && L2 > 0.0 && L3 > 0.0, "box sides must be positive");
  require(q < 2.0 * k, "shell must not reach k = 0 (q < 2k)");

  // Canonical axis order makes the enumeration bitwise identical under
  // permutations of the input sides.
  double L[3] = {L1, L2, L3};
  std::sort(L, L + 3);

  const double k_hi = k + 0.5 * q;
  const double k_lo = k - 0.5 * q;
  const double n_max_1 = std::floor(k_hi * L[0] / cn::pi);
  const double n_max_2 = std::floor(k_hi * L[1] / cn::pi);
  const double n_max_3 = std::floor(k_hi * L[2] / cn::pi);
  if (n_max_1 * n_max_2 * n_max_3 > budget) {
    throw DomainError(
        "nu_count_lattice: candidate box of " +
        std::to_string(n_max_1 * n_max_2 * n_max_3) +
        " lattice points exceeds the enumeration budget of " +
        std::to_string(budget));
  }

  const double hi2 = k_hi * k_hi;
  const double lo2 = k_lo * k_lo;
  long long sites = 0;
  const long long n1_end = static_cast<long long>(n_max_1);
  const long long n2_end = static_cast<long long>(n_max_2);
  for (long long n1 = 1; n1 <= n1_end; ++n1) {
    const double k1 = cn::pi * static_cast<double>(n1) / L[0];
    const double k1sq = k1 * k1;
    if (k1sq > hi2) break;
    for (long long n2 = 1; n2 <= n2_end; ++n2) {
      const double k2 = cn::pi * static_cast<double>(n2) / L[1];
      const double perp2 = k1sq + k2 * k2;
      if (perp2 > hi2) break;
      // n3 range with k3^2 in [max(0, lo2 - perp2), hi2 - perp2].
      const double top = std::sqrt(hi2 - perp2) * L[2] / cn::pi;
      long long n3_hi = static_cast<long long>(std::floor(top));
      long long n3_lo = 1;
      if (perp2 < lo2) {
        n3_lo = static_cast<long long>(
            std::ceil(std::sqrt(lo2 - perp2) * L[2] / cn::pi));
        if (n3_lo < 1) n3_lo = 1;
      }
      if (n3_hi >= n3_lo) sites += n3_hi - n3_lo + 1;
    }
  }

  LatticeCount out{};
  out.count = 2.0 * static_cast<double>(sites);  // 2 spins per lattice site
  out.analytic = nu_count_analytic(k, q, material::Box{L1, L2, L3});
  out.ratio = out.analytic != 0.0 ? out.count / out.analytic : 0.0;
  return out;
}

GapCollapseReport bulk_gap_collapse_check(double g, double m, double epsilon_F,
                                          double d, double T,
                                          const std::vector<double>& L_values) {
  require(g > 0.0 && m > 0.0 && epsilon_F > 0.0 && d > 0.0 && T > 0.0,
          "g, m, epsilon_F, d, T must be positive");
  require(!L_values.empty(), "need at least one cube side");

  const double T_F = epsilon_F / cn::k_B_si;
  GapCollapseReport rep{};
  rep.L = L_values;
  for (double L : L_values) {
    require(L > 0.0 && std::isfinite(L), "cube sides must be positive finite");
    const auto c = material::confinement(material::IsotropicBulk{L}, m);
    const double G = material::effective_coupling(g, m, c.epsilon1);
    rep.coupling_cube.push_back(G);
    rep.tc_cube.push_back(G * T_F);
  }

  // The cube coupling is A / L for a geometry-independent A; the pairing
  // survives while G * T_F > T, i.e. below L_star = A * T_F / T.
  const double A = rep.coupling_cube.front() * L_values.front();
  rep.L_star = A * T_F / T;

  const auto cf = material::confinement(material::Film{d}, m);
  rep.coupling_film = material::effective_coupling(g, m, cf.epsilon1);
  rep.tc_film = rep.coupling_film * T_F;
  rep.film_persists = rep.tc_film > T;
  return rep;
}

}  // namespace bcsreps::gap
