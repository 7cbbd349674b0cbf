// Dense complex linear algebra for state-vector simulation: states,
// tensor products, orthonormalization, Born-rule measurement.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsp {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

// Tolerance for structural checks (unitarity, orthonormality of inputs).
inline constexpr double kCheckTol = 1e-10;
// Tolerance for assertions on exact constructions.
inline constexpr double kAssertTol = 1e-12;

// Unit-norm complex amplitude vector over the computational (standard) basis.
class StateVector {
 public:
  // Accepts a vector that is already unit norm within kAssertTol.
  static StateVector from_unit(Vec amps) {
    double norm = amps.norm();
    if (std::abs(norm - 1.0) > kAssertTol) {
      throw std::invalid_argument("StateVector: vector is not unit norm (|norm-1| = " +
                                  std::to_string(std::abs(norm - 1.0)) + ")");
    }
    return StateVector(std::move(amps));
  }

  // Normalizes a raw vector; rejects the zero vector.
  static StateVector normalized(Vec amps) {
    double norm = amps.norm();
    if (norm <= kAssertTol) {
      throw std::invalid_argument("StateVector: cannot normalize zero vector");
    }
    amps /= norm;
    return StateVector(std::move(amps));
  }

  // Computational basis state |k> in dimension n.
  static StateVector basis(Eigen::Index n, Eigen::Index k) {
    if (k < 0 || k >= n) throw std::out_of_range("StateVector::basis: index out of range");
    Vec v = Vec::Zero(n);
    v(k) = 1.0;
    return StateVector(std::move(v));
  }

  Eigen::Index dim() const { return amps_.size(); }
  const Vec& amps() const { return amps_; }
  Complex operator()(Eigen::Index k) const { return amps_(k); }

  bool is_real(double tol = kAssertTol) const {
    return amps_.imag().cwiseAbs().maxCoeff() <= tol;
  }

 private:
  explicit StateVector(Vec amps) : amps_(std::move(amps)) {}
  Vec amps_;
};

// Unit-norm amplitude vector on the n^2-dimensional A (x) B space,
// flat index (a, b) -> a*n + b.
class BipartiteState {
 public:
  static BipartiteState from_unit(Eigen::Index subsystem_dim, Vec amps) {
    if (amps.size() != subsystem_dim * subsystem_dim) {
      throw std::invalid_argument("BipartiteState: amplitude count must be dim^2");
    }
    if (std::abs(amps.norm() - 1.0) > kAssertTol) {
      throw std::invalid_argument("BipartiteState: vector is not unit norm");
    }
    return BipartiteState(subsystem_dim, std::move(amps));
  }

  Eigen::Index dim() const { return dim_; }
  const Vec& amps() const { return amps_; }
  Complex operator()(Eigen::Index a, Eigen::Index b) const { return amps_(a * dim_ + b); }

  // View as an n x n matrix M with M(a,b) = amplitude at (a,b).
  Mat as_matrix() const {
    return Eigen::Map<const Mat>(amps_.data(), dim_, dim_).transpose();
  }

 private:
  BipartiteState(Eigen::Index d, Vec amps) : dim_(d), amps_(std::move(amps)) {}
  Eigen::Index dim_;
  Vec amps_;
};

// Seeded randomness for measurement sampling. Identical seeds give
// identical outcome sequences.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  // Samples an index from a probability vector (assumed to sum to 1).
  Eigen::Index sample(const RealVec& probs) {
    double u = uniform();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
      acc += probs(i);
      if (u < acc) return i;
    }
    return probs.size() - 1;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

inline void require_same_dim(Eigen::Index a, Eigen::Index b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// <a|b>, conjugating a's amplitudes.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner_product");
  return a.amps().dot(b.amps());  // Eigen's dot conjugates the left argument
}

inline BipartiteState tensor_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "tensor_product");
  Eigen::Index n = a.dim();
  Vec out(n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) out(j * n + k) = a(j) * b(k);
  return BipartiteState::from_unit(n, std::move(out));
}

// Componentwise complex conjugation in the computational basis.
inline StateVector conjugate_state(const StateVector& s) {
  return StateVector::from_unit(s.amps().conjugate());
}

inline double unitarity_residual(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Mat& u, double tol = kCheckTol) {
  return u.rows() == u.cols() && unitarity_residual(u) <= tol;
}

inline void require_unitary(const Mat& u, const char* op) {
  if (!is_unitary(u)) {
    throw std::invalid_argument(std::string(op) + ": matrix fails the unitarity check");
  }
}

inline StateVector apply_unitary(const Mat& u, const StateVector& s) {
  require_unitary(u, "apply_unitary");
  require_same_dim(u.cols(), s.dim(), "apply_unitary");
  return StateVector::from_unit(u * s.amps());
}

enum class Side { A, B };

// Applies U on one side of a bipartite state: side A is U (x) I, side B is I (x) U.
inline BipartiteState apply_unitary(const Mat& u, const BipartiteState& s, Side side) {
  require_unitary(u, "apply_unitary");
  require_same_dim(u.cols(), s.dim(), "apply_unitary");
  Eigen::Index n = s.dim();
  Vec out = Vec::Zero(n * n);
  if (side == Side::A) {
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index ap = 0; ap < n; ++ap)
        if (u(a, ap) != 0.0)
          for (Eigen::Index b = 0; b < n; ++b) out(a * n + b) += u(a, ap) * s(ap, b);
  } else {
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index bp = 0; bp < n; ++bp)
        if (u(b, bp) != 0.0)
          for (Eigen::Index a = 0; a < n; ++a) out(a * n + b) += u(b, bp) * s(a, bp);
  }
  return BipartiteState::from_unit(n, std::move(out));
}

// Modified Gram-Schmidt. Processing order is input order; each output is
// phased so that its overlap with its own input vector is positive real,
// which makes the result deterministic and the procedure idempotent.
inline std::vector<StateVector> gram_schmidt(const std::vector<StateVector>& vs) {
  if (vs.empty()) return {};
  Eigen::Index n = vs.front().dim();
  std::vector<Vec> out;
  out.reserve(vs.size());
  for (const StateVector& v : vs) {
    require_same_dim(v.dim(), n, "gram_schmidt");
    Vec u = v.amps();
    for (const Vec& prev : out) u -= prev.dot(u) * prev;
    double norm = u.norm();
    if (norm <= kCheckTol) {
      throw std::invalid_argument("gram_schmidt: input vectors are linearly dependent");
    }
    u /= norm;
    Complex overlap = u.dot(v.amps());  // <u|v>; re-phase so it becomes positive real
    if (std::abs(overlap) > kAssertTol) u *= overlap / std::abs(overlap);
    out.push_back(std::move(u));
  }
  std::vector<StateVector> result;
  result.reserve(out.size());
  for (Vec& u : out) result.push_back(StateVector::from_unit(std::move(u)));
  return result;
}

inline void require_orthonormal_basis(const std::vector<StateVector>& basis, Eigen::Index n,
                                      const char* op, double tol = kCheckTol) {
  if (static_cast<Eigen::Index>(basis.size()) != n) {
    throw std::invalid_argument(std::string(op) + ": basis must have exactly n vectors");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_dim(basis[i].dim(), n, op);
    for (std::size_t j = 0; j <= i; ++j) {
      Complex g = inner_product(basis[i], basis[j]);
      double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expect) > tol) {
        throw std::invalid_argument(std::string(op) + ": basis is not orthonormal");
      }
    }
  }
}

struct MeasurementBranch {
  Eigen::Index outcome;
  double prob;
  StateVector collapsed_b;
};

// Deterministic variant: Born probabilities and conditional B states for
// every branch of a projective measurement on subsystem A.
inline std::vector<MeasurementBranch> measure_subsystem_a_branches(
    const BipartiteState& s, const std::vector<StateVector>& basis) {
  Eigen::Index n = s.dim();
  require_orthonormal_basis(basis, n, "measure_subsystem_a");
  Mat m = s.as_matrix();  // m(a, b) amplitude
  std::vector<MeasurementBranch> branches;
  branches.reserve(basis.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    // Unnormalized conditional B amplitude: sum_a conj(basis_i(a)) * m(a, b).
    Vec cond = m.transpose() * basis[i].amps().conjugate();
    double prob = cond.squaredNorm();
    if (prob > kAssertTol) {
      branches.push_back({i, prob, StateVector::normalized(std::move(cond))});
    } else {
      // Zero-probability branch: conditional state undefined, report basis
      // state as a placeholder with prob 0.
      branches.push_back({i, prob, StateVector::basis(n, 0)});
    }
  }
  return branches;
}

// Sampled measurement of subsystem A. Returns outcome, its Born
// probability, and the collapsed B-side state.
inline MeasurementBranch measure_subsystem_a(const BipartiteState& s,
                                             const std::vector<StateVector>& basis,
                                             RandomSource& rng) {
  auto branches = measure_subsystem_a_branches(s, basis);
  RealVec probs(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) probs(i) = branches[i].prob;
  Eigen::Index outcome = rng.sample(probs);
  return branches[outcome];
}

}  // namespace rsp
