#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "bcsreps/constants.hpp"
#include "bcsreps/errors.hpp"
#include "bcsreps/gap.hpp"
#include "bcsreps/material.hpp"

using bcsreps::DomainError;
namespace gp = bcsreps::gap;
namespace mat = bcsreps::material;
namespace con = bcsreps::constants;

TEST_CASE("zero-temperature gap") {
  CHECK(std::abs(gp::bcs_delta0(0.3) - 1.0 / std::sinh(1.0 / 0.3)) < 1e-14);
  CHECK(std::abs(gp::bcs_delta0(0.3) - 0.071438902256) < 1e-9);
  CHECK_THROWS_AS(gp::bcs_delta0(0.0), DomainError);
  CHECK_THROWS_AS(gp::bcs_delta0(-0.1), DomainError);
  CHECK_THROWS_AS(gp::bcs_delta0(1.5), DomainError);
}

TEST_CASE("finite-temperature gap") {
  const double gN0 = 0.3;
  const double T_D = 300.0;
  const double tc = gp::bcs_tc(gN0, T_D).numeric;
  SUBCASE("approaches the zero-temperature value as T -> 0") {
    CHECK(std::abs(gp::bcs_gap_at(1e-2 * tc, gN0, T_D) /
                       gp::bcs_delta0(gN0) -
                   1.0) < 1e-6);
  }
  SUBCASE("vanishes at and above the critical temperature") {
    CHECK(gp::bcs_gap_at(tc * 1.0001, gN0, T_D) == 0.0);
    CHECK(gp::bcs_gap_at(2.0 * tc, gN0, T_D) == 0.0);
  }
  SUBCASE("decreases monotonically in temperature") {
    double previous = gp::bcs_delta0(gN0) * 1.0000001;
    for (const double frac : {0.2, 0.4, 0.6, 0.8, 0.95}) {
      const double d = gp::bcs_gap_at(frac * tc, gN0, T_D);
      CHECK(d < previous);
      CHECK(d > 0.0);
      previous = d;
    }
  }
  SUBCASE("satisfies its own defining equation") {
    const double T = 0.5 * tc;
    const double D = gp::bcs_gap_at(T, gN0, T_D);
    const double t = T / T_D;
    // Re-evaluate the gap condition with an independent trapezoid sum.
    const int n = 200000;
    double integral = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double u = static_cast<double>(i) / n;
      const double e = std::hypot(u, D);
      const double f = std::tanh(e / (2.0 * t)) / e;
      integral += (i == 0 || i == n) ? 0.5 * f : f;
    }
    integral /= n;
    CHECK(std::abs(gN0 * integral - 1.0) < 1e-6);
  }
}

TEST_CASE("critical temperature of the standard phase") {
  SUBCASE("numeric root matches the closed form at moderate coupling") {
    for (const double gN0 : {0.2, 0.3}) {
      const auto tc = gp::bcs_tc(gN0, 300.0);
      CHECK(tc.numeric / tc.closed_form > 0.995);
      CHECK(tc.numeric / tc.closed_form < 1.005);
    }
  }
  SUBCASE("closed form carries the essential singularity in the coupling") {
    const double T_D = 300.0;
    for (int n = 1; n <= 5; ++n) {
      const double gN0 = 0.3 / n;
      const auto tc = gp::bcs_tc(gN0, T_D);
      const double expected = (2.0 * con::exp_euler_gamma / con::pi) * T_D *
                              std::exp(-1.0 / gN0);
      CHECK(std::abs(tc.closed_form / expected - 1.0) < 1e-12);
      CHECK(std::abs(tc.numeric / tc.closed_form - 1.0) < 0.01);
    }
  }
  SUBCASE("domain limits") {
    CHECK_THROWS_AS(gp::bcs_tc(0.0, 300.0), DomainError);
    CHECK_THROWS_AS(gp::bcs_tc(0.7, 300.0), DomainError);
    CHECK_THROWS_AS(gp::bcs_tc(0.2, -5.0), DomainError);
  }
}

TEST_CASE("film-phase pairing amplitude") {
  SUBCASE("fixed-point residual stays below 1e-12") {
    for (double tau = 0.05; tau < 1.0; tau += 0.05) {
      const double e = gp::eta(tau);
      CHECK(std::abs(e - std::tanh(e / tau)) <= 1e-12);
    }
  }
  SUBCASE("reference values") {
    CHECK(gp::eta(0.0) == 1.0);
    CHECK(gp::eta(1.0) == 0.0);
    CHECK(gp::eta(1.2) == 0.0);
    CHECK(std::abs(gp::eta(0.5) - 0.957504024077) < 1e-9);
  }
  SUBCASE("monotone decreasing") {
    double previous = 1.1;
    for (double tau = 0.1; tau <= 0.95; tau += 0.05) {
      const double e = gp::eta(tau);
      CHECK(e < previous);
      previous = e;
    }
  }
  SUBCASE("rejects negative reduced temperature") {
    CHECK_THROWS_AS(gp::eta(-0.1), DomainError);
  }
}

TEST_CASE("film-phase spectrum descriptor") {
  const double G = 0.01;
  const double T_F = 1e4;
  SUBCASE("zero temperature pins the full pairing energy") {
    const auto s = gp::epsilon_of_t(0.0, G, T_F);
    CHECK(std::abs(s.T_c - 100.0) < 1e-9);
    CHECK(s.eta == 1.0);
    CHECK(std::abs(s.epsilon - s.epsilon0) < 1e-15);
    CHECK(std::abs(s.epsilon0 / (con::k_B_si * s.T_c) - 2.0) < 1e-10);
    CHECK_FALSE(s.model_violation);
  }
  SUBCASE("mid-range temperature scales by eta") {
    const auto s = gp::epsilon_of_t(50.0, G, T_F);
    CHECK(std::abs(s.tau - 0.5) < 1e-12);
    CHECK(std::abs(s.epsilon / s.epsilon0 - gp::eta(0.5)) < 1e-12);
  }
  SUBCASE("flat inside the window, free outside") {
    const auto s = gp::epsilon_of_t(50.0, G, T_F);
    CHECK(s.excitation(0.0) == s.epsilon);
    CHECK(s.excitation(0.5 * s.epsilon) == s.epsilon);
    CHECK(s.excitation(3.0 * s.epsilon) == 3.0 * s.epsilon);
    CHECK(s.excitation(-2.0 * s.epsilon) == 2.0 * s.epsilon);
  }
  SUBCASE("pairing energy above the Debye window raises the flag") {
    const double tiny_window = 0.5 * 2.0 * con::k_B_si * 100.0;
    CHECK(gp::epsilon_of_t(0.0, G, T_F, tiny_window).model_violation);
    CHECK_FALSE(gp::epsilon_of_t(0.0, G, T_F).model_violation);
  }
}

TEST_CASE("film-phase anomalous average") {
  const double G = 0.01;
  const double T_F = 1e4;
  const double eps_F = con::k_B_si * T_F;
  SUBCASE("equals one half at the Fermi level at zero temperature") {
    CHECK(std::abs(gp::anomalous_average_novel(0.0, 0.0, G, T_F) - 0.5) <
          1e-12);
    CHECK(std::abs(gp::anomalous_average_novel(0.0, 0.0, 0.03, 2e4) - 0.5) <
          1e-12);
  }
  SUBCASE("vanishes outside the pairing window and above T_c") {
    const auto s = gp::epsilon_of_t(0.0, G, T_F);
    CHECK(gp::anomalous_average_novel(1.5 * s.epsilon0, 0.0, G, T_F) == 0.0);
    CHECK(gp::anomalous_average_novel(0.0, 150.0, G, T_F) == 0.0);
  }
  SUBCASE("semicircular profile in the offset") {
    const auto s = gp::epsilon_of_t(0.0, G, T_F);
    const double xi = 0.6 * s.epsilon0;
    const double expected =
        std::sqrt(s.epsilon0 * s.epsilon0 - xi * xi) / (4.0 * G * eps_F);
    CHECK(std::abs(gp::anomalous_average_novel(xi, 0.0, G, T_F) - expected) <
          1e-12);
  }
}

TEST_CASE("continuum shell-count estimates") {
  const double k = 2e9;
  const double q = 1e7;
  SUBCASE("box value and unit scaling") {
    const double L1 = 3e-8, L2 = 4e-8, L3 = 5e-8;
    const double expected = q * L1 * L2 * L3 * k * k / (con::pi * con::pi);
    CHECK(std::abs(gp::nu_count_analytic(k, q, mat::Box{L1, L2, L3}) -
                   expected) < 1e-6 * expected);
  }
  SUBCASE("cube convention equals the isotropic formula at its shell width") {
    const double L = 1e-7;
    const double q_eff = 2.0 * std::sqrt(3.0) * con::pi / L;
    CHECK(std::abs(gp::nu_count_cube_convention(k, L) -
                   gp::nu_count_analytic(k, q_eff, mat::IsotropicBulk{L})) <
          1e-6);
  }
  SUBCASE("film count per unit area at the confinement width") {
    const double d = 2e-9;
    const double q_film = con::pi / d;
    const double expected = k * k / con::pi;  // q d k^2 / pi^2 at q = pi/d
    CHECK(std::abs(gp::nu_count_analytic(k, q_film, mat::Film{d}) - expected) <
          1e-6 * expected);
  }
  SUBCASE("thin-shell predicate") {
    CHECK(gp::thin_shell_valid(1.0, 0.005));
    CHECK_FALSE(gp::thin_shell_valid(1.0, 0.02));
  }
}

TEST_CASE("exact lattice count") {
  SUBCASE("large cube approaches the continuum estimate") {
    const double k = 1.0;
    const double q = 0.005;
    const double L = 400.0 * con::pi;
    const auto r = gp::nu_count_lattice(k, q, L, L, L);
    CHECK(r.count == 1000374.0);  // regression-pinned exact enumeration
    CHECK(std::abs(r.ratio - 1.0) < 0.02);
  }
  SUBCASE("count is exactly invariant under axis permutations") {
    const double k = 1.0;
    const double q = 0.05;
    const std::array<double, 3> L = {110.3, 151.7, 89.9};
    const double reference = gp::nu_count_lattice(k, q, L[0], L[1], L[2]).count;
    CHECK(gp::nu_count_lattice(k, q, L[0], L[2], L[1]).count == reference);
    CHECK(gp::nu_count_lattice(k, q, L[1], L[0], L[2]).count == reference);
    CHECK(gp::nu_count_lattice(k, q, L[1], L[2], L[0]).count == reference);
    CHECK(gp::nu_count_lattice(k, q, L[2], L[0], L[1]).count == reference);
    CHECK(gp::nu_count_lattice(k, q, L[2], L[1], L[0]).count == reference);
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(gp::nu_count_lattice(1.0, 0.005, 1e4, 1e4, 1e4, 1e6),
                    DomainError);
  }
  SUBCASE("shell must fit around the sphere") {
    CHECK_THROWS_AS(gp::nu_count_lattice(1.0, 2.5, 50.0, 50.0, 50.0),
                    DomainError);
  }
  SUBCASE("empty shell in a tiny box") {
    // Smallest mode of the box lies far above the shell.
    const auto r = gp::nu_count_lattice(1.0, 0.01, 1.0, 1.0, 1.0);
    CHECK(r.count == 0.0);
  }
}

TEST_CASE("confinement collapse of the cube phase") {
  // SI inputs chosen near the film scenario so the film persists at 50 K.
  const auto params = mat::film_scenario(0.01, 1e4, 1e-9);
  const std::vector<double> L_values = {1e-9, 2e-9, 4e-9, 8e-9, 16e-9};
  const auto report = gp::bulk_gap_collapse_check(
      params.g, params.m, params.epsilon_F, 1e-9, 50.0, L_values);

  REQUIRE(report.L.size() == L_values.size());
  SUBCASE("doubling the cube side halves its coupling") {
    for (std::size_t i = 0; i + 1 < report.coupling_cube.size(); ++i) {
      CHECK(std::abs(report.coupling_cube[i] / report.coupling_cube[i + 1] -
                     2.0) < 1e-9);
    }
  }
  SUBCASE("cube critical temperature falls with size, film persists") {
    for (std::size_t i = 0; i + 1 < report.tc_cube.size(); ++i) {
      CHECK(report.tc_cube[i] > report.tc_cube[i + 1]);
    }
    CHECK(report.film_persists);
    CHECK(report.tc_film > 50.0);
    CHECK(report.L_star > 0.0);
  }
  SUBCASE("crossing size separates surviving from collapsed cubes") {
    for (std::size_t i = 0; i < report.L.size(); ++i) {
      if (report.L[i] < report.L_star) {
        CHECK(report.tc_cube[i] > 50.0);
      } else {
        CHECK(report.tc_cube[i] < 50.0 * (1.0 + 1e-9));
      }
    }
  }
}
