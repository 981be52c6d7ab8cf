#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bcsreps/errors.hpp"
#include "bcsreps/quadrature.hpp"
#include "bcsreps/roots.hpp"

using bcsreps::DomainError;
using bcsreps::NumericError;
namespace num = bcsreps::numerics;

TEST_CASE("quadrature reproduces closed-form integrals") {
  SUBCASE("polynomial") {
    const auto r = num::integrate_adaptive([](double x) { return x * x; },
                                           0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-13);
  }
  SUBCASE("sine over a half period") {
    const auto r = num::integrate_adaptive([](double x) { return std::sin(x); },
                                           0.0, M_PI, 1e-12);
    CHECK(std::abs(r.value - 2.0) < 1e-12);
  }
  SUBCASE("sharp peak needs adaptivity") {
    // Lorentzian of width 1e-3 centred mid-interval.
    const double w = 1e-3;
    const auto r = num::integrate_adaptive(
        [w](double x) {
          const double d = x - 0.5;
          return w / (d * d + w * w);
        },
        0.0, 1.0, 1e-10);
    const double exact = std::atan(0.5 / w) - std::atan(-0.5 / w);
    CHECK(std::abs(r.value / exact - 1.0) < 1e-9);
    CHECK(r.intervals > 1);
  }
  SUBCASE("integrable endpoint singularity") {
    const auto r = num::integrate_adaptive([](double x) { return std::log(x); },
                                           0.0, 1.0, 1e-9);
    CHECK(std::abs(r.value + 1.0) < 1e-7);
  }
  SUBCASE("reversed bounds flip the sign") {
    const auto a = num::integral([](double x) { return x; }, 0.0, 2.0);
    const auto b = num::integral([](double x) { return x; }, 2.0, 0.0);
    CHECK(std::abs(a + b) < 1e-13);
  }
  SUBCASE("divergent integrand exhausts the interval budget") {
    CHECK_THROWS_AS(num::integrate_adaptive(
                        [](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10,
                        0.0, 200),
                    NumericError);
  }
}

TEST_CASE("bracketed root finder") {
  SUBCASE("cosine root at pi/2") {
    const auto r = bcsreps::numerics::find_root_bracketed(
        [](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(r.converged);
    CHECK(std::abs(r.root - M_PI_2) < 1e-14);
  }
  SUBCASE("root already at an endpoint") {
    const auto r = bcsreps::numerics::find_root_bracketed(
        [](double x) { return x; }, 0.0, 1.0);
    CHECK(r.root == 0.0);
  }
  SUBCASE("steep transition does not stall") {
    const auto r = bcsreps::numerics::find_root_bracketed(
        [](double x) { return std::tanh(50.0 * (x - 0.3)); }, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.root - 0.3) < 1e-12);
    CHECK(r.iterations < 300);
  }
  SUBCASE("non-bracketing interval is rejected") {
    CHECK_THROWS_AS(bcsreps::numerics::find_root_bracketed(
                        [](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    NumericError);
  }
  SUBCASE("tight relative tolerance on a transcendental equation") {
    // Same fixed-point structure as the pairing-amplitude equation.
    const double tau = 0.5;
    const auto r = bcsreps::numerics::find_root_bracketed(
        [tau](double e) { return e - std::tanh(e / tau); }, 1e-12, 1.0);
    CHECK(std::abs(r.root - std::tanh(r.root / tau)) < 1e-12);
  }
}
