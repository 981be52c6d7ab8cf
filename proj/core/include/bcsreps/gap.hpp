#pragma once

// Self-consistent pairing solutions for the standard BCS phase and the
// confined thin-film phase, plus exact shell-counting utilities for discrete
// geometries.  Energies are dimensionless where possible: the standard-phase
// gap is returned in units of the Debye energy, the film-phase spectrum in
// units of its own zero-temperature pairing energy.

#include <limits>
#include <vector>

#include "bcsreps/material.hpp"

namespace bcsreps::gap {

// --- standard BCS phase -------------------------------------------------------

// Zero-temperature gap in Debye-energy units: 1 / sinh(1 / gN0).
// Requires gN0 in (0, 1].
double bcs_delta0(double gN0);

// Gap at temperature T (K) in Debye-energy units: the positive root of
//   1 = gN0 * Integral_0^1 du tanh(sqrt(u^2 + D^2) / (2 t)) / sqrt(u^2 + D^2),
// t = T / T_D.  Returns 0 at or above the critical temperature.
double bcs_gap_at(double T, double gN0, double T_D);

struct TcResult {
  double closed_form;  // (2 e^gamma / pi) T_D exp(-1 / gN0)
  double numeric;      // root of the linearized gap condition
};

// Standard-phase critical temperature; requires gN0 in (0, 0.5] so the weak
// coupling premise behind the closed form stays meaningful.
TcResult bcs_tc(double gN0, double T_D);

// --- thin-film phase ------------------------------------------------------------

// Largest root of eta = tanh(eta / tau) on [0, 1]; returns 0 for tau >= 1.
// The solver residual |eta - tanh(eta/tau)| is at most 1e-12.
double eta(double tau);

// Critical temperature of the film phase, G * T_F (K).
double novel_tc(double G, double T_F);

// Flat quasiparticle spectrum of the film phase at temperature T.
struct SpectrumDescriptor {
  double T_c;            // K
  double tau;            // T / T_c
  double eta;            // epsilon / epsilon0
  double epsilon0;       // pairing energy at T = 0, J (equals 2 k_B T_c)
  double epsilon;        // pairing energy at T, J
  bool model_violation;  // pairing energy exceeds the Debye window (warning only)

  // Excitation energy at offset xi (J) from the Fermi level: the spectrum is
  // flat (= epsilon) inside the pairing window |xi| <= epsilon and free
  // (= |xi|) outside.
  double excitation(double xi) const;
};

// epsilon_F is taken as k_B * T_F.  hbar_omega_D (J) feeds the
// model-consistency check only and may be +infinity to skip it.
SpectrumDescriptor epsilon_of_t(
    double T, double G, double T_F,
    double hbar_omega_D = std::numeric_limits<double>::infinity());

// Anomalous pair average of the film phase at offset xi (J) from the Fermi
// level: (1 / (4 G epsilon_F)) sqrt(epsilon^2 - xi^2) inside the pairing
// window, 0 outside and 0 at or above T_c.  At xi = 0, T = 0 this is exactly
// 1/2 for every admissible (G, T_F).
double anomalous_average_novel(double xi, double T, double G, double T_F);

// --- shell counting --------------------------------------------------------------

// Continuum estimate of the number of single-particle states (2 spins per
// lattice site) in the shell |k' - k| <= q/2:
//   Box{L1,L2,L3}:    q L1 L2 L3 k^2 / pi^2
//   Film{d}:          q d k^2 / pi^2 per unit lateral area (k^2/pi at q = pi/d)
//   IsotropicBulk{L}: q L^3 k^2 / pi^2
double nu_count_analytic(double k, double q, const material::Geometry& geometry);

// Bulk-limit cube convention (2 sqrt(3) / pi) k^2 L^2: the isotropic value
// evaluated at the effective shell width q_eff = 2 sqrt(3) pi / L.
double nu_count_cube_convention(double k, double L);

// Thin-shell validity predicate for the continuum estimate (q / k < 0.01).
bool thin_shell_valid(double k, double q);

struct LatticeCount {
  double count;     // exact enumeration (2 spins per site)
  double analytic;  // continuum estimate for the same box and q
  double ratio;     // count / analytic
};

// Exact enumeration of hard-wall standing-wave modes
// k' = (pi n1/L1, pi n2/L2, pi n3/L3), n_i >= 1, with |k'| inside the closed
// shell [k - q/2, k + q/2], times 2 spins.  Axis order is canonicalized
// internally, so the count is exactly invariant under permutations of
// (L1, L2, L3).  Throws DomainError when the candidate bounding box holds
// more than budget lattice points.
LatticeCount nu_count_lattice(double k, double q, double L1, double L2,
                              double L3, double budget = 1e8);

// --- confinement-collapse diagnostic ---------------------------------------------

struct GapCollapseReport {
  std::vector<double> L;              // cube sides scanned, m
  std::vector<double> coupling_cube;  // effective coupling G for each cube
  std::vector<double> tc_cube;        // film-phase Tc for each cube, K
  double L_star;                      // side at which the cube Tc crosses T, m
  double coupling_film;               // G of the film (lateral-size independent)
  double tc_film;                     // K
  bool film_persists;                 // film Tc stays above T
};

// At fixed (g, m, epsilon_F), the cube coupling scales as 1/L (doubling L
// halves it) so its pairing collapses for L > L_star; a film of thickness d
// keeps a size-independent coupling.  T is the observation temperature (K).
GapCollapseReport bulk_gap_collapse_check(double g, double m, double epsilon_F,
                                          double d, double T,
                                          const std::vector<double>& L_values);

}  // namespace bcsreps::gap
