#pragma once

// Physical and mathematical constants shared by every module.
//
// All solver internals work in dimensionless reduced units; SI values appear
// only where laboratory inputs are converted (material module) and Gaussian
// CGS values only where absolute critical fields are requested.

namespace bcsreps::constants {

// --- mathematical -----------------------------------------------------------

inline constexpr double pi = 3.14159265358979323846;

// Euler-Mascheroni constant and its exponential.  Frozen at these decimal
// values so every formula that carries e^gamma (critical-temperature
// prefactors, field asymptotics, phase-boundary conditions) uses one shared
// number; expressions use exp_euler_gamma rather than re-exponentiating.
inline constexpr double euler_gamma = 0.5772156649;
inline constexpr double exp_euler_gamma = 1.7810724180;

// Riemann zeta(3), entering low-temperature expansions of the critical-field
// and specific-heat ratios.
inline constexpr double zeta3 = 1.2020569032;

// --- SI ----------------------------------------------------------------------

inline constexpr double hbar_si = 1.054571817e-34;   // J s
inline constexpr double k_B_si = 1.380649e-23;       // J / K
inline constexpr double m_e_si = 9.1093837015e-31;   // kg
inline constexpr double eV_si = 1.602176634e-19;     // J

// --- Gaussian CGS (absolute critical fields only) ---------------------------

inline constexpr double hbar_cgs = 1.054571817e-27;  // erg s
inline constexpr double k_B_cgs = 1.380649e-16;      // erg / K

}  // namespace bcsreps::constants
