#include "bcsreps/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace bcsreps::fock {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using cplx = std::complex<double>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError("fock: " + msg);
}

// Jordan-Wigner sign: parity of the occupied modes below flat mode m.
double jw_sign(unsigned state, int m) {
  const unsigned mask = (1u << m) - 1u;
  return (std::popcount(state & mask) & 1u) ? -1.0 : 1.0;
}

}  // namespace

OperatorSet build_mode_operators(int n_pairs) {
  require(n_pairs >= 1 && n_pairs <= 6,
          "build_mode_operators: n_pairs must lie in [1, 6], got " +
              std::to_string(n_pairs));
  OperatorSet ops;
  ops.n_pairs = n_pairs;
  const int n_modes = 2 * n_pairs;
  ops.dim = Index{1} << n_modes;
  ops.a.reserve(static_cast<std::size_t>(n_modes));
  for (int m = 0; m < n_modes; ++m) {
    MatrixXcd A = MatrixXcd::Zero(ops.dim, ops.dim);
    const unsigned bit = 1u << m;
    for (unsigned s = 0; s < static_cast<unsigned>(ops.dim); ++s) {
      if (s & bit) {
        A(static_cast<Index>(s ^ bit), static_cast<Index>(s)) = jw_sign(s, m);
      }
    }
    ops.a.push_back(std::move(A));
  }
  return ops;
}

RingReport verify_ring(const OperatorSet& ops, double tol) {
  require(!ops.a.empty(), "verify_ring: empty operator set");
  const int n_modes = static_cast<int>(ops.a.size());
  const MatrixXcd id = MatrixXcd::Identity(ops.dim, ops.dim);

  RingReport rep;
  auto consider = [&rep](double dev, int i, int j, bool mixed) {
    if (dev > rep.max_abs_deviation) {
      rep.max_abs_deviation = dev;
      rep.worst_i = i;
      rep.worst_j = j;
      rep.worst_is_mixed = mixed;
    }
  };

  for (int i = 0; i < n_modes; ++i) {
    for (int j = i; j < n_modes; ++j) {
      const MatrixXcd& ai = ops.a[static_cast<std::size_t>(i)];
      const MatrixXcd& aj = ops.a[static_cast<std::size_t>(j)];
      const MatrixXcd pair_anti = ai * aj + aj * ai;
      consider(pair_anti.cwiseAbs().maxCoeff(), i, j, false);

      MatrixXcd mixed = ai * aj.adjoint() + aj.adjoint() * ai;
      if (i == j) mixed -= id;
      consider(mixed.cwiseAbs().maxCoeff(), i, j, true);
      if (i != j) {
        // {a_j, a_i^dag} is not the adjoint of the relation above; check it too.
        const MatrixXcd mixed_rev = aj * ai.adjoint() + ai.adjoint() * aj;
        consider(mixed_rev.cwiseAbs().maxCoeff(), j, i, true);
      }
    }
  }
  rep.pass = rep.max_abs_deviation <= tol;
  return rep;
}

Eigen::MatrixXcd pair_generator(const OperatorSet& ops, int pair) {
  require(pair >= 0 && pair < ops.n_pairs, "pair_generator: pair out of range");
  const MatrixXcd& a0 = ops.annihilator({pair, 0});
  const MatrixXcd& a1 = ops.annihilator({pair, 1});
  return cplx(0.0, 1.0) * (a0.adjoint() * a1.adjoint() - a1 * a0);
}

Eigen::MatrixXcd exp_iQ(const OperatorSet& ops, const AlphaFamily& f) {
  require(static_cast<int>(f.alpha.size()) == ops.n_pairs,
          "exp_iQ: need one angle per pair");
  MatrixXcd u = MatrixXcd::Identity(ops.dim, ops.dim);
  for (int p = 0; p < ops.n_pairs; ++p) {
    const double al = f.alpha[static_cast<std::size_t>(p)];
    const MatrixXcd t = pair_generator(ops, p);
    // T^3 = T on its invariant subspace, so the exponential series closes:
    // exp(i al T) = 1 + i sin(al) T + (cos(al) - 1) T^2.
    const MatrixXcd factor = MatrixXcd::Identity(ops.dim, ops.dim) +
                             cplx(0.0, std::sin(al)) * t +
                             (std::cos(al) - 1.0) * (t * t);
    u = factor * u;
  }
  return u;
}

OperatorSet bogoliubov_transform(const OperatorSet& ops,
                                 const AlphaFamily& f) {
  require(static_cast<int>(f.alpha.size()) == ops.n_pairs,
          "bogoliubov_transform: need one angle per pair");
  OperatorSet out;
  out.n_pairs = ops.n_pairs;
  out.dim = ops.dim;
  out.a.resize(ops.a.size());
  for (int p = 0; p < ops.n_pairs; ++p) {
    const double c = std::cos(f.alpha[static_cast<std::size_t>(p)]);
    const double s = std::sin(f.alpha[static_cast<std::size_t>(p)]);
    const MatrixXcd& a0 = ops.annihilator({p, 0});
    const MatrixXcd& a1 = ops.annihilator({p, 1});
    out.a[static_cast<std::size_t>(flat_mode({p, 0}))] =
        c * a0 + s * a1.adjoint();
    out.a[static_cast<std::size_t>(flat_mode({p, 1}))] =
        c * a1 - s * a0.adjoint();
  }
  return out;
}

double vacuum_overlap(const AlphaFamily& f) {
  double o = 1.0;
  for (double al : f.alpha) o *= std::cos(al);
  return o;
}

double log_vacuum_overlap(const AlphaFamily& f) {
  double s = 0.0;
  for (double al : f.alpha) s += std::log(std::cos(al));
  return s;
}

Eigen::MatrixXcd build_h02(const OperatorSet& ops,
                           const std::vector<double>& xi, double delta,
                           const std::vector<bool>& paired, double c_number) {
  require(static_cast<int>(xi.size()) == ops.n_pairs,
          "build_h02: need one xi per pair");
  require(paired.empty() || static_cast<int>(paired.size()) == ops.n_pairs,
          "build_h02: paired mask must be empty or one flag per pair");

  MatrixXcd h = c_number * MatrixXcd::Identity(ops.dim, ops.dim);
  for (int p = 0; p < ops.n_pairs; ++p) {
    const MatrixXcd& a0 = ops.annihilator({p, 0});
    const MatrixXcd& a1 = ops.annihilator({p, 1});
    h += xi[static_cast<std::size_t>(p)] *
         (a0.adjoint() * a0 + a1.adjoint() * a1);
    const bool active = paired.empty() || paired[static_cast<std::size_t>(p)];
    if (active && delta != 0.0) {
      h -= delta * (a0.adjoint() * a1.adjoint() + a1 * a0);
    }
  }
  const double herm_dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-12) {
    throw NumericError("build_h02: assembled Hamiltonian not Hermitian (" +
                       std::to_string(herm_dev) + ")");
  }
  return h;
}

std::vector<double> h02_closed_form_spectrum(const std::vector<double>& xi,
                                             double delta,
                                             const std::vector<bool>& paired,
                                             double c_number) {
  const int n_pairs = static_cast<int>(xi.size());
  require(n_pairs >= 1 && n_pairs <= 6,
          "h02_closed_form_spectrum: need 1..6 pairs");
  require(paired.empty() || static_cast<int>(paired.size()) == n_pairs,
          "h02_closed_form_spectrum: paired mask size mismatch");

  std::vector<double> levels{c_number};
  for (int p = 0; p < n_pairs; ++p) {
    const double x = xi[static_cast<std::size_t>(p)];
    const bool active = paired.empty() || paired[static_cast<std::size_t>(p)];
    double offsets[4];
    if (active) {
      const double e = std::sqrt(x * x + delta * delta);
      offsets[0] = x - e;
      offsets[1] = x;
      offsets[2] = x;
      offsets[3] = x + e;
    } else {
      offsets[0] = 0.0;
      offsets[1] = x;
      offsets[2] = x;
      offsets[3] = 2.0 * x;
    }
    std::vector<double> next;
    next.reserve(levels.size() * 4);
    for (double base : levels) {
      for (double off : offsets) next.push_back(base + off);
    }
    levels.swap(next);
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

std::complex<double> thermal_anomalous_average(const Eigen::MatrixXcd& h,
                                               const OperatorSet& ops,
                                               double beta, int pair) {
  require(beta > 0.0, "thermal_anomalous_average: beta must be positive");
  require(pair >= 0 && pair < ops.n_pairs,
          "thermal_anomalous_average: pair out of range");
  require(h.rows() == ops.dim && h.cols() == ops.dim,
          "thermal_anomalous_average: Hamiltonian dimension mismatch");

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericError("thermal_anomalous_average: eigendecomposition failed");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  const MatrixXcd& u = es.eigenvectors();

  const double e0 = ev.minCoeff();
  Eigen::VectorXd w(ev.size());
  for (Index n = 0; n < ev.size(); ++n) w(n) = std::exp(-beta * (ev(n) - e0));
  const double z = w.sum();

  // Operator a_{p,1} a_{p,0}: the pair annihilator (rightmost acts first).
  const MatrixXcd op =
      ops.annihilator({pair, 1}) * ops.annihilator({pair, 0});
  const MatrixXcd m = u.adjoint() * op * u;

  cplx acc(0.0, 0.0);
  for (Index n = 0; n < ev.size(); ++n) acc += w(n) * m(n, n);
  return acc / z;
}

}  // namespace bcsreps::fock
