#pragma once

// Laboratory-facing parameter handling.  All inputs are SI; reduce() converts
// them once into the dimensionless/reduced quantities every solver consumes,
// so no downstream code touches unit constants again.

#include <variant>

#include "bcsreps/errors.hpp"

namespace bcsreps::material {

// --- geometry ----------------------------------------------------------------

// Rectangular box with hard walls; lengths in meters.
struct Box {
  double L1, L2, L3;
};

// Planar film: confined to thickness d (meters) in one direction, effectively
// unbounded laterally.
struct Film {
  double d;
};

// Cube of side L (meters); L may be +infinity to request the thermodynamic
// limit, which is reported via Confinement::thermodynamic_limit.
struct IsotropicBulk {
  double L;
};

using Geometry = std::variant<Box, Film, IsotropicBulk>;

// --- parameter sets -----------------------------------------------------------

struct MaterialParams {
  double g;          // pairing coupling, J * m^3
  double m;          // carrier mass, kg
  double epsilon_F;  // Fermi energy, J
  double omega_D;    // Debye angular frequency, rad / s
  Geometry geometry;
};

// Ground-state confinement data for a geometry.
struct Confinement {
  double q;                  // smallest confinement wavevector, 1 / m
  double epsilon1;           // ground-state kinetic energy hbar^2 q^2 / 2m, J
  bool thermodynamic_limit;  // true when an infinite size was requested (q -> 0)
};

struct ReducedParams {
  double gN0;                // dimensionless coupling g * N(0)
  double T_D;                // Debye temperature, K
  double T_F;                // Fermi temperature, K
  double epsilon1;           // confinement energy, J
  double G;                  // film-phase effective coupling (dimensionless)
  double q;                  // confinement wavevector, 1 / m
  double k_F;                // Fermi wavevector, 1 / m
  double N0;                 // single-spin density of states at the Fermi level, 1 / (J m^3)
  bool thermodynamic_limit;  // propagated from Confinement
};

// --- operations ----------------------------------------------------------------

// Throws DomainError unless every parameter is positive and finite, geometry
// lengths are positive (IsotropicBulk::L may be +infinity), and the Debye
// window fits under the Fermi energy (hbar * omega_D < epsilon_F).
void validate(const MaterialParams& p);

// Fermi wavevector sqrt(2 m epsilon_F) / hbar.
double fermi_wavevector(double m, double epsilon_F);

// Density of states per spin at the Fermi surface, m k_F / (2 pi^2 hbar^2).
// Equals d/d(epsilon) of the k-space state count evaluated at epsilon_F.
double density_of_states(double m, double k_F);

// Smallest confinement wavevector and ground-state energy for a geometry.
//   Box:  q^2 = sum_i (pi / L_i)^2
//   Film: q = pi / d
//   IsotropicBulk: q = sqrt(3) pi / L (0 with thermodynamic_limit set when L = inf)
Confinement confinement(const Geometry& geometry, double m);

// Effective film-phase coupling G = (g / 4 pi^2) (2m / hbar^2)^{3/2} sqrt(epsilon1).
double effective_coupling(double g, double m, double epsilon1);

// Convert laboratory parameters into reduced form (validates first).
ReducedParams reduce(const MaterialParams& p);

// Build a film material with a prescribed effective coupling G and Fermi
// temperature T_F (K): solves effective_coupling for g.  d in meters; the
// Debye temperature defaults to 300 K (any value with hbar*omega_D < epsilon_F
// is accepted).  Useful for constructing reference scenarios such as
// G = 0.01, T_F = 1e4 K, which places the film critical temperature at 100 K.
MaterialParams film_scenario(double G, double T_F, double d, double T_D = 300.0);

}  // namespace bcsreps::material
