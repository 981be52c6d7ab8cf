#include "bcsreps/material.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bcsreps/constants.hpp"

namespace bcsreps::material {

namespace {

namespace cn = bcsreps::constants;

void require_positive_finite(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string("material: ") + name +
                      " must be positive and finite, got " + std::to_string(v));
  }
}

}  // namespace

void validate(const MaterialParams& p) {
  require_positive_finite(p.g, "g");
  require_positive_finite(p.m, "m");
  require_positive_finite(p.epsilon_F, "epsilon_F");
  require_positive_finite(p.omega_D, "omega_D");

  if (const auto* box = std::get_if<Box>(&p.geometry)) {
    require_positive_finite(box->L1, "Box.L1");
    require_positive_finite(box->L2, "Box.L2");
    require_positive_finite(box->L3, "Box.L3");
  } else if (const auto* film = std::get_if<Film>(&p.geometry)) {
    require_positive_finite(film->d, "Film.d");
  } else {
    const auto& bulk = std::get<IsotropicBulk>(p.geometry);
    if (!(bulk.L > 0.0)) {  // +infinity allowed: thermodynamic limit request
      throw DomainError("material: IsotropicBulk.L must be positive, got " +
                        std::to_string(bulk.L));
    }
  }

  const double hbar_omega_D = cn::hbar_si * p.omega_D;
  if (!(hbar_omega_D < p.epsilon_F)) {
    throw DomainError(
        "material: Debye window must fit under the Fermi energy "
        "(hbar*omega_D = " +
        std::to_string(hbar_omega_D) + " J >= epsilon_F = " +
        std::to_string(p.epsilon_F) + " J)");
  }
}

double fermi_wavevector(double m, double epsilon_F) {
  return std::sqrt(2.0 * m * epsilon_F) / cn::hbar_si;
}

double density_of_states(double m, double k_F) {
  return m * k_F / (2.0 * cn::pi * cn::pi * cn::hbar_si * cn::hbar_si);
}

Confinement confinement(const Geometry& geometry, double m) {
  Confinement c{};
  if (const auto* box = std::get_if<Box>(&geometry)) {
    const double q1 = cn::pi / box->L1;
    const double q2 = cn::pi / box->L2;
    const double q3 = cn::pi / box->L3;
    c.q = std::sqrt(q1 * q1 + q2 * q2 + q3 * q3);
  } else if (const auto* film = std::get_if<Film>(&geometry)) {
    c.q = cn::pi / film->d;
  } else {
    const auto& bulk = std::get<IsotropicBulk>(geometry);
    if (std::isinf(bulk.L)) {
      c.q = 0.0;
      c.thermodynamic_limit = true;
    } else {
      c.q = std::sqrt(3.0) * cn::pi / bulk.L;
    }
  }
  c.epsilon1 = cn::hbar_si * cn::hbar_si * c.q * c.q / (2.0 * m);
  return c;
}

double effective_coupling(double g, double m, double epsilon1) {
  if (epsilon1 == 0.0) return 0.0;
  const double two_m_over_hbar2 = 2.0 * m / (cn::hbar_si * cn::hbar_si);
  return g / (4.0 * cn::pi * cn::pi) * std::pow(two_m_over_hbar2, 1.5) *
         std::sqrt(epsilon1);
}

ReducedParams reduce(const MaterialParams& p) {
  validate(p);
  ReducedParams r{};
  r.k_F = fermi_wavevector(p.m, p.epsilon_F);
  r.N0 = density_of_states(p.m, r.k_F);
  r.gN0 = p.g * r.N0;
  r.T_D = cn::hbar_si * p.omega_D / cn::k_B_si;
  r.T_F = p.epsilon_F / cn::k_B_si;
  const Confinement c = confinement(p.geometry, p.m);
  r.q = c.q;
  r.epsilon1 = c.epsilon1;
  r.thermodynamic_limit = c.thermodynamic_limit;
  r.G = effective_coupling(p.g, p.m, c.epsilon1);
  return r;
}

MaterialParams film_scenario(double G, double T_F, double d, double T_D) {
  if (!(G > 0.0) || !(T_F > 0.0) || !(d > 0.0) || !(T_D > 0.0)) {
    throw DomainError("film_scenario: G, T_F, d, T_D must all be positive");
  }
  MaterialParams p{};
  p.m = cn::m_e_si;
  p.epsilon_F = cn::k_B_si * T_F;
  p.omega_D = cn::k_B_si * T_D / cn::hbar_si;
  p.geometry = Film{d};
  const Confinement c = confinement(p.geometry, p.m);
  // Invert effective_coupling for g at the requested G.
  const double two_m_over_hbar2 = 2.0 * p.m / (cn::hbar_si * cn::hbar_si);
  p.g = G * 4.0 * cn::pi * cn::pi /
        (std::pow(two_m_over_hbar2, 1.5) * std::sqrt(c.epsilon1));
  validate(p);
  return p;
}

}  // namespace bcsreps::material
