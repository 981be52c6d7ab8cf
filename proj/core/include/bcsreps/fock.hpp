#pragma once

// Finite-dimensional fermionic operator algebra: explicit matrices for the
// creation/annihilation operators of P momentum pairs, the Bogoliubov
// rotation connecting inequivalent vacua, and the reduced pairing
// Hamiltonian restricted to those pairs.  Everything is exact linear algebra
// on dimension 4^P (P <= 6), intended as an oracle for the continuum
// formulas rather than as a production many-body solver.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bcsreps/errors.hpp"

namespace bcsreps::fock {

// Mode (p, branch): branch 0 is the (k, up) member of pair p, branch 1 the
// (-k, down) partner.  Flat index 2p + branch fixes the canonical ordering
// used by the Jordan-Wigner sign strings.
struct ModeIndex {
  int pair;
  int branch;
};

constexpr int flat_mode(ModeIndex m) { return 2 * m.pair + m.branch; }

struct OperatorSet {
  int n_pairs = 0;
  Eigen::Index dim = 0;
  std::vector<Eigen::MatrixXcd> a;  // annihilators, indexed by flat mode

  const Eigen::MatrixXcd& annihilator(ModeIndex m) const {
    return a.at(static_cast<std::size_t>(flat_mode(m)));
  }
  Eigen::MatrixXcd creator(ModeIndex m) const {
    return annihilator(m).adjoint();
  }
};

// Dense Jordan-Wigner matrices for n_pairs in [1, 6] (dimension 4^n_pairs,
// at most 4096).  Basis state s has mode j occupied iff bit j of s is set;
// the vacuum is basis index 0.
OperatorSet build_mode_operators(int n_pairs);

struct RingReport {
  double max_abs_deviation = 0.0;  // worst entry over all relations
  bool pass = false;
  int worst_i = 0;            // flat mode indices of the worst relation
  int worst_j = 0;
  bool worst_is_mixed = false;  // true: {a_i, a_j^dag} = delta_ij; false: {a_i, a_j} = 0
};

// Checks every canonical anticommutation relation of the set.
RingReport verify_ring(const OperatorSet& ops, double tol = 1e-12);

// One rotation angle per pair.
struct AlphaFamily {
  std::vector<double> alpha;
};

// Pair generator T_p = i (a^dag_{p,0} a^dag_{p,1} - a_{p,1} a_{p,0});
// Hermitian, and T_p^3 = T_p on its invariant subspace.
Eigen::MatrixXcd pair_generator(const OperatorSet& ops, int pair);

// Unitary exp(iQ), Q = sum_p alpha_p T_p, via the exact per-pair factors
// 1 + i sin(alpha_p) T_p + (cos(alpha_p) - 1) T_p^2 (the factors commute).
Eigen::MatrixXcd exp_iQ(const OperatorSet& ops, const AlphaFamily& f);

// Rotated annihilators c = exp(iQ) a exp(-iQ) in closed form:
//   c_{p,0} = cos(alpha_p) a_{p,0} + sin(alpha_p) a^dag_{p,1}
//   c_{p,1} = cos(alpha_p) a_{p,1} - sin(alpha_p) a^dag_{p,0}
OperatorSet bogoliubov_transform(const OperatorSet& ops, const AlphaFamily& f);

// Overlap of the rotated vacuum with the original one: prod_p cos(alpha_p).
// It decays geometrically with the number of pairs — the finite-size shadow
// of the orthogonality of inequivalent vacua.
double vacuum_overlap(const AlphaFamily& f);

// sum_p ln cos(alpha_p); -infinity once any angle reaches pi/2.
double log_vacuum_overlap(const AlphaFamily& f);

// Reduced pairing Hamiltonian on the P pairs:
//   H = c_number * I + sum_p xi_p (n_{p,0} + n_{p,1})
//       - delta * sum_{p in paired} (a^dag_{p,0} a^dag_{p,1} + a_{p,1} a_{p,0}).
// paired defaults to every pair; xi must have one entry per pair.  The
// result is verified Hermitian to 1e-12 before returning.
Eigen::MatrixXcd build_h02(const OperatorSet& ops,
                           const std::vector<double>& xi, double delta,
                           const std::vector<bool>& paired = {},
                           double c_number = 0.0);

// Exact spectrum of build_h02 as a sorted list: each paired p contributes
// level offsets {xi_p - E_p, xi_p, xi_p, xi_p + E_p} with
// E_p = sqrt(xi_p^2 + delta^2), each unpaired p contributes {0, xi_p, xi_p,
// 2 xi_p}, all summed over pairs plus the c-number.
std::vector<double> h02_closed_form_spectrum(const std::vector<double>& xi,
                                             double delta,
                                             const std::vector<bool>& paired = {},
                                             double c_number = 0.0);

// Thermal average < a_{p,1} a_{p,0} > in the Gibbs state of the Hermitian h
// at inverse temperature beta, via exact eigendecomposition (ground-state
// energy shifted out, so large beta stays overflow-free).
std::complex<double> thermal_anomalous_average(const Eigen::MatrixXcd& h,
                                               const OperatorSet& ops,
                                               double beta, int pair);

}  // namespace bcsreps::fock
