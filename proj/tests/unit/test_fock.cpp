#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "bcsreps/errors.hpp"
#include "bcsreps/fock.hpp"

using bcsreps::DomainError;
using bcsreps::NumericError;
namespace fk = bcsreps::fock;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

fk::AlphaFamily angles(int n_pairs, unsigned seed = 99) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, 1.2);
  fk::AlphaFamily f;
  for (int p = 0; p < n_pairs; ++p) f.alpha.push_back(dist(rng));
  return f;
}

}  // namespace

TEST_CASE("single-pair annihilators have the textbook matrix elements") {
  const auto ops = fk::build_mode_operators(1);
  REQUIRE(ops.dim == 4);
  // Mode 0 removes bit 0 with no sign string below it.
  CHECK(ops.a[0](0, 1) == std::complex<double>(1.0, 0.0));
  CHECK(ops.a[0](2, 3) == std::complex<double>(1.0, 0.0));
  CHECK(ops.a[0](0, 0) == std::complex<double>(0.0, 0.0));
  // Mode 1 picks up a sign when bit 0 is occupied.
  CHECK(ops.a[1](0, 2) == std::complex<double>(1.0, 0.0));
  CHECK(ops.a[1](1, 3) == std::complex<double>(-1.0, 0.0));
  // Each annihilator has exactly dim/2 nonzero entries.
  CHECK((ops.a[0].cwiseAbs().array() > 0.0).count() == 2);
  CHECK((ops.a[1].cwiseAbs().array() > 0.0).count() == 2);
}

TEST_CASE("anticommutation relations hold exactly for two pairs") {
  const auto ops = fk::build_mode_operators(2);
  const auto report = fk::verify_ring(ops);
  CHECK(report.pass);
  CHECK(report.max_abs_deviation <= 1e-14);
}

TEST_CASE("number operator counts occupied modes") {
  const auto ops = fk::build_mode_operators(2);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(ops.dim, ops.dim);
  for (const auto& a : ops.a) n += a.adjoint() * a;
  for (Eigen::Index s = 0; s < ops.dim; ++s) {
    const int bits = __builtin_popcount(static_cast<unsigned>(s));
    CHECK(std::abs(n(s, s).real() - bits) < 1e-14);
  }
  CHECK(std::abs(n.imag().cwiseAbs().maxCoeff()) < 1e-14);
}

TEST_CASE("a corrupted matrix entry is detected") {
  auto ops = fk::build_mode_operators(2);
  ops.a[0](0, 1) += 1e-6;
  const auto report = fk::verify_ring(ops);
  CHECK_FALSE(report.pass);
  CHECK(report.max_abs_deviation >= 5e-7);
}

TEST_CASE("rotation endpoints") {
  const auto ops = fk::build_mode_operators(1);
  SUBCASE("zero angle is the identity map") {
    const auto rot = fk::bogoliubov_transform(ops, {{0.0}});
    CHECK(max_abs(rot.a[0] - ops.a[0]) < 1e-15);
    CHECK(max_abs(rot.a[1] - ops.a[1]) < 1e-15);
  }
  SUBCASE("quarter turn swaps annihilators into partner creators") {
    const auto rot = fk::bogoliubov_transform(ops, {{M_PI_2}});
    CHECK(max_abs(rot.a[0] - ops.a[1].adjoint()) < 1e-15);
    CHECK(max_abs(rot.a[1] + ops.a[0].adjoint()) < 1e-15);
  }
}

TEST_CASE("exp_iQ is unitary and matches a dense matrix exponential") {
  const auto ops = fk::build_mode_operators(2);
  const auto f = angles(2);
  const Eigen::MatrixXcd U = fk::exp_iQ(ops, f);

  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(ops.dim, ops.dim);
  CHECK(max_abs(U * U.adjoint() - I) < 1e-12);

  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(ops.dim, ops.dim);
  for (int p = 0; p < 2; ++p) {
    Q += f.alpha[static_cast<std::size_t>(p)] * fk::pair_generator(ops, p);
  }
  const Eigen::MatrixXcd U_ref =
      (std::complex<double>(0.0, 1.0) * Q).exp();
  CHECK(max_abs(U - U_ref) < 1e-10);
}

TEST_CASE("conjugation by exp_iQ reproduces the closed-form rotation") {
  const auto ops = fk::build_mode_operators(2);
  const auto f = angles(2, 7);
  const Eigen::MatrixXcd U = fk::exp_iQ(ops, f);
  const auto rot = fk::bogoliubov_transform(ops, f);
  for (std::size_t m = 0; m < ops.a.size(); ++m) {
    CHECK(max_abs(U * ops.a[m] * U.adjoint() - rot.a[m]) < 1e-10);
  }
  // The rotated set satisfies the same algebra.
  CHECK(fk::verify_ring(rot).pass);
}

TEST_CASE("vacuum overlap follows the product law and decays with pair count") {
  const double alpha = M_PI / 4.0;
  double previous = 1.0;
  for (int n = 1; n <= 4; ++n) {
    fk::AlphaFamily f;
    f.alpha.assign(static_cast<std::size_t>(n), alpha);
    const auto ops = fk::build_mode_operators(n);
    const std::complex<double> matrix_overlap = fk::exp_iQ(ops, f)(0, 0);
    const double closed = fk::vacuum_overlap(f);
    CHECK(std::abs(matrix_overlap - closed) < 1e-12);
    CHECK(std::abs(closed - std::pow(std::cos(alpha), n)) < 1e-14);
    // Geometric decay: each extra pair multiplies the overlap by cos(alpha).
    CHECK(closed < previous);
    CHECK(std::abs(closed / previous - std::cos(alpha)) < 1e-12);
    previous = closed;
    CHECK(std::abs(fk::log_vacuum_overlap(f) -
                   n * std::log(std::cos(alpha))) < 1e-12);
  }
}

TEST_CASE("reduced-Hamiltonian spectrum matches the closed form") {
  const int pairs = 3;
  const auto ops = fk::build_mode_operators(pairs);
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> xi(pairs);
  for (auto& x : xi) x = dist(rng);
  const double delta = 0.6;

  SUBCASE("all pairs coupled") {
    const Eigen::MatrixXcd h = fk::build_h02(ops, xi, delta, {}, 0.25);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto closed = fk::h02_closed_form_spectrum(xi, delta, {}, 0.25);
    REQUIRE(closed.size() == static_cast<std::size_t>(ops.dim));
    for (Eigen::Index i = 0; i < ops.dim; ++i) {
      CHECK(std::abs(es.eigenvalues()[i] -
                     closed[static_cast<std::size_t>(i)]) < 1e-10);
    }
  }
  SUBCASE("a decoupled pair contributes free levels") {
    const std::vector<bool> paired = {true, false, true};
    const Eigen::MatrixXcd h = fk::build_h02(ops, xi, delta, paired);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto closed = fk::h02_closed_form_spectrum(xi, delta, paired);
    for (Eigen::Index i = 0; i < ops.dim; ++i) {
      CHECK(std::abs(es.eigenvalues()[i] -
                     closed[static_cast<std::size_t>(i)]) < 1e-10);
    }
  }
  SUBCASE("ground state energy is the sum of pair minima") {
    const Eigen::MatrixXcd h = fk::build_h02(ops, xi, delta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    double ground = 0.0;
    for (const double x : xi) ground += x - std::hypot(x, delta);
    CHECK(std::abs(es.eigenvalues()[0] - ground) < 1e-10);
  }
}

TEST_CASE("thermal anomalous average") {
  const auto ops = fk::build_mode_operators(1);
  SUBCASE("vanishes without pairing") {
    const Eigen::MatrixXcd h = fk::build_h02(ops, {0.4}, 0.0);
    CHECK(std::abs(fk::thermal_anomalous_average(h, ops, 2.0, 0)) < 1e-14);
  }
  SUBCASE("equals half the hyperbolic tangent at the symmetric point") {
    // xi = 0, delta = 1, beta = 2: the average is tanh(1) / 2.
    const Eigen::MatrixXcd h = fk::build_h02(ops, {0.0}, 1.0);
    const auto v = fk::thermal_anomalous_average(h, ops, 2.0, 0);
    CHECK(std::abs(v - 0.5 * std::tanh(1.0)) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-14);
  }
  SUBCASE("matches the quasiparticle formula at large beta") {
    const double xi = 0.3;
    const double delta = 0.4;
    const double E = std::hypot(xi, delta);
    const Eigen::MatrixXcd h = fk::build_h02(ops, {xi}, delta);
    const auto v = fk::thermal_anomalous_average(h, ops, 50.0, 0);
    CHECK(std::abs(v - delta / (2.0 * E)) < 1e-8);
  }
  SUBCASE("finite temperature matches the quasiparticle formula") {
    const double xi = -0.55;
    const double delta = 0.7;
    const double beta = 1.7;
    const double E = std::hypot(xi, delta);
    const auto ops2 = fk::build_mode_operators(2);
    const Eigen::MatrixXcd h = fk::build_h02(ops2, {xi, 0.2}, delta);
    const auto v = fk::thermal_anomalous_average(h, ops2, beta, 0);
    CHECK(std::abs(v - delta / (2.0 * E) * std::tanh(beta * E / 2.0)) < 1e-10);
  }
}

TEST_CASE("discrete gap equation reproduces the continuum weak-coupling gap") {
  // Four symmetric level offsets sampling the Debye window with midpoint
  // weight h = 0.5 discretize the gap integral; the fixed point of
  //   delta -> gN0 * h * sum_p <a_{p,1} a_{p,0}>(delta)
  // at low temperature must land within a few percent of the continuum value
  // 1/sinh(1/gN0) for the same coupling.
  const double gN0 = 0.5;
  const double weight = 0.5;
  const double beta = 50.0;
  const std::vector<double> xi = {-0.75, -0.25, 0.25, 0.75};
  const auto ops = fk::build_mode_operators(4);

  double delta = 0.3;
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    const Eigen::MatrixXcd h = fk::build_h02(ops, xi, delta);
    double sum = 0.0;
    for (int p = 0; p < 4; ++p) {
      sum += fk::thermal_anomalous_average(h, ops, beta, p).real();
    }
    const double next = gN0 * weight * sum;
    if (std::abs(next - delta) < 1e-10) {
      delta = next;
      converged = true;
      break;
    }
    delta = next;
  }
  REQUIRE(converged);
  const double continuum = 1.0 / std::sinh(1.0 / gN0);
  CHECK(delta > 0.1);
  CHECK(std::abs(delta / continuum - 1.0) < 0.05);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(fk::build_mode_operators(0), DomainError);
  CHECK_THROWS_AS(fk::build_mode_operators(7), DomainError);
  const auto ops = fk::build_mode_operators(1);
  CHECK_THROWS_AS(fk::build_h02(ops, {0.1, 0.2}, 0.3), DomainError);
}
