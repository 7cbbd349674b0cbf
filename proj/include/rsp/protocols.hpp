// Remote state preparation protocols: the minimum scheme for real targets
// in dimensions 1, 2, 4, 8 and the equatorial scheme for arbitrary
// dimension. Runs produce auditable transcripts.

#pragma once

#include "rsp/frames.hpp"
#include "rsp/linalg.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace rsp {

// Maximally entangled state (1/sqrt(n)) sum_i |i>|i>.
inline BipartiteState epr_state(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("epr_state: n must be >= 1");
  Vec amps = Vec::Zero(n * n);
  double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) amps(i * n + i) = c;
  return BipartiteState::from_unit(n, std::move(amps));
}

inline double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

// Alice's measurement basis {V_i |target>} for the minimum scheme.
// The frame condition makes it orthonormal for every real unit target.
inline std::vector<StateVector> minimum_measurement_basis(const StateVector& target,
                                                          const FrameFamily& f) {
  if (!target.is_real()) {
    throw std::invalid_argument("minimum_measurement_basis: target must be real");
  }
  require_same_dim(target.dim(), f.dim, "minimum_measurement_basis");
  std::vector<StateVector> basis;
  basis.reserve(f.mats.size());
  for (const RealMat& v : f.mats) {
    basis.push_back(StateVector::from_unit(v * target.amps()));
  }
  return basis;
}

// The B-side Schmidt partners {Omega_i} of an A-side orthonormal basis,
// i.e. the unique vectors with epr_state(n) = (1/sqrt(n)) sum_i Psi_i (x) Omega_i.
// Evaluates the double sum over basis vectors and computational components;
// the result is the componentwise conjugate of the input basis.
inline std::vector<StateVector> omega_states(const std::vector<StateVector>& basis_a) {
  if (basis_a.empty()) throw std::invalid_argument("omega_states: empty basis");
  Eigen::Index n = basis_a.front().dim();
  require_orthonormal_basis(basis_a, n, "omega_states");
  std::vector<StateVector> omegas;
  omegas.reserve(basis_a.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec acc = Vec::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex coeff = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        // <Psi_j|phi_k> <Psi_i|phi_k>
        coeff += std::conj(basis_a[j](k)) * std::conj(basis_a[i](k));
      }
      acc += basis_a[j].amps() * coeff;
    }
    omegas.push_back(StateVector::from_unit(std::move(acc)));
  }
  return omegas;
}

enum class Scheme { Minimum, Equatorial };

inline const char* scheme_name(Scheme s) {
  return s == Scheme::Minimum ? "minimum" : "equatorial";
}

// Full record of one RSP run. The outcome index is the single classical
// message from Alice to Bob.
struct ProtocolTranscript {
  Scheme scheme;
  Eigen::Index dim;
  StateVector target;
  std::optional<Mat> alice_pre_rotation;  // U_A, equatorial scheme only
  std::vector<StateVector> measurement_basis;
  RealVec probabilities;
  Eigen::Index outcome;
  Mat correction;  // the unitary Bob applied for this outcome
  StateVector bob_state;
  double fidelity;
};

// One protocol branch evaluated deterministically.
struct ProtocolBranch {
  Eigen::Index outcome;
  double prob;
  StateVector bob_state;
  double fidelity;
};

// Bob's correction for outcome i in the minimum scheme: V_i^T, independent
// of the target.
inline Mat minimum_correction(const FrameFamily& f, Eigen::Index outcome) {
  return f.mats.at(outcome).transpose().cast<Complex>();
}

inline void require_minimum_dim(Eigen::Index n) {
  if (n != 1 && n != 2 && n != 4 && n != 8) {
    throw std::invalid_argument(
        "minimum RSP is only realizable in dimensions 1, 2, 4, 8 (got " +
        std::to_string(n) + ")");
  }
}

// All branches of the minimum protocol, seed-independent.
inline std::vector<ProtocolBranch> minimum_rsp_branches(const StateVector& target,
                                                        const FrameFamily& f) {
  require_minimum_dim(f.dim);
  auto basis = minimum_measurement_basis(target, f);
  auto branches = measure_subsystem_a_branches(epr_state(f.dim), basis);
  std::vector<ProtocolBranch> out;
  out.reserve(branches.size());
  for (const auto& br : branches) {
    StateVector bob = apply_unitary(minimum_correction(f, br.outcome), br.collapsed_b);
    out.push_back({br.outcome, br.prob, bob, fidelity(target, bob)});
  }
  return out;
}

inline ProtocolTranscript run_minimum_rsp(const StateVector& target, const FrameFamily& f,
                                          RandomSource& rng) {
  require_minimum_dim(f.dim);
  auto basis = minimum_measurement_basis(target, f);
  auto branches = measure_subsystem_a_branches(epr_state(f.dim), basis);
  RealVec probs(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) probs(i) = branches[i].prob;
  Eigen::Index outcome = rng.sample(probs);
  Mat correction = minimum_correction(f, outcome);
  StateVector bob = apply_unitary(correction, branches[outcome].collapsed_b);
  return ProtocolTranscript{Scheme::Minimum,
                            f.dim,
                            target,
                            std::nullopt,
                            std::move(basis),
                            std::move(probs),
                            outcome,
                            std::move(correction),
                            bob,
                            fidelity(target, bob)};
}

// Target whose amplitudes all have magnitude 1/sqrt(n) and phases theta,
// with theta_0 = 0.
struct EqualMagnitudeTarget {
  RealVec thetas;

  Eigen::Index dim() const { return thetas.size(); }
};

inline void require_theta_convention(const EqualMagnitudeTarget& t) {
  if (t.dim() < 1) throw std::invalid_argument("equatorial target: n must be >= 1");
  if (t.thetas(0) != 0.0) {
    throw std::invalid_argument("equatorial target: theta_0 must be 0");
  }
}

inline StateVector equatorial_target_state(const EqualMagnitudeTarget& t) {
  require_theta_convention(t);
  Eigen::Index n = t.dim();
  Vec amps(n);
  double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index b = 0; b < n; ++b) amps(b) = c * std::polar(1.0, t.thetas(b));
  return StateVector::from_unit(std::move(amps));
}

// Psi_alpha = (1/sqrt(n)) sum_beta exp(2 pi i alpha beta / n) exp(i theta_beta) |beta>.
// Psi_0 is the target itself.
inline std::vector<StateVector> equatorial_basis(const EqualMagnitudeTarget& t) {
  require_theta_convention(t);
  Eigen::Index n = t.dim();
  double c = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<StateVector> basis;
  basis.reserve(n);
  for (Eigen::Index alpha = 0; alpha < n; ++alpha) {
    Vec amps(n);
    for (Eigen::Index beta = 0; beta < n; ++beta) {
      double phase = 2.0 * std::numbers::pi * static_cast<double>(alpha) *
                         static_cast<double>(beta) / static_cast<double>(n) +
                     t.thetas(beta);
      amps(beta) = c * std::polar(1.0, phase);
    }
    basis.push_back(StateVector::from_unit(std::move(amps)));
  }
  return basis;
}

// Alice's local pre-rotation
// U_A = sum_{alpha=1}^{n-1} |alpha><n-alpha| exp(i(theta_alpha + theta_{n-alpha})) + |0><0|.
inline Mat alice_rotation(const EqualMagnitudeTarget& t) {
  require_theta_convention(t);
  Eigen::Index n = t.dim();
  Mat u = Mat::Zero(n, n);
  u(0, 0) = 1.0;
  for (Eigen::Index alpha = 1; alpha < n; ++alpha) {
    u(alpha, n - alpha) = std::polar(1.0, t.thetas(alpha) + t.thetas(n - alpha));
  }
  return u;
}

// The target-independent unitary with U_alpha Psi = Psi_alpha:
// diagonal phases exp(2 pi i alpha beta / n).
inline Mat equatorial_outcome_unitary(Eigen::Index n, Eigen::Index alpha) {
  Mat u = Mat::Zero(n, n);
  for (Eigen::Index beta = 0; beta < n; ++beta) {
    u(beta, beta) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(alpha) *
                                        static_cast<double>(beta) / static_cast<double>(n));
  }
  return u;
}

inline Mat equatorial_correction(Eigen::Index n, Eigen::Index alpha) {
  return equatorial_outcome_unitary(n, alpha).adjoint();  // U_alpha^{-1}
}

inline std::vector<ProtocolBranch> equatorial_rsp_branches(const EqualMagnitudeTarget& t) {
  require_theta_convention(t);
  Eigen::Index n = t.dim();
  StateVector target = equatorial_target_state(t);
  BipartiteState rotated = apply_unitary(alice_rotation(t), epr_state(n), Side::A);
  auto branches = measure_subsystem_a_branches(rotated, equatorial_basis(t));
  std::vector<ProtocolBranch> out;
  out.reserve(branches.size());
  for (const auto& br : branches) {
    StateVector bob = apply_unitary(equatorial_correction(n, br.outcome), br.collapsed_b);
    out.push_back({br.outcome, br.prob, bob, fidelity(target, bob)});
  }
  return out;
}

inline ProtocolTranscript run_equatorial_rsp(const EqualMagnitudeTarget& t,
                                             RandomSource& rng) {
  require_theta_convention(t);
  Eigen::Index n = t.dim();
  StateVector target = equatorial_target_state(t);
  Mat u_a = alice_rotation(t);
  BipartiteState rotated = apply_unitary(u_a, epr_state(n), Side::A);
  auto basis = equatorial_basis(t);
  auto branches = measure_subsystem_a_branches(rotated, basis);
  RealVec probs(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) probs(i) = branches[i].prob;
  Eigen::Index outcome = rng.sample(probs);
  Mat correction = equatorial_correction(n, outcome);
  StateVector bob = apply_unitary(correction, branches[outcome].collapsed_b);
  return ProtocolTranscript{Scheme::Equatorial,
                            n,
                            target,
                            std::move(u_a),
                            std::move(basis),
                            std::move(probs),
                            outcome,
                            std::move(correction),
                            bob,
                            fidelity(target, bob)};
}

}  // namespace rsp
