// The real normed division algebras of dimension 1, 2, 4, 8.
// Multiplication tables are stored as signed permutations: every product of
// basis elements is a signed basis element.

#pragma once

#include "rsp/linalg.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsp {

enum class Algebra { Reals, Complexes, Quaternions, Octonions };

inline const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Reals: return "reals";
    case Algebra::Complexes: return "complexes";
    case Algebra::Quaternions: return "quaternions";
    case Algebra::Octonions: return "octonions";
  }
  return "?";
}

inline Algebra algebra_from_name(const std::string& name) {
  if (name == "reals") return Algebra::Reals;
  if (name == "complexes") return Algebra::Complexes;
  if (name == "quaternions") return Algebra::Quaternions;
  if (name == "octonions") return Algebra::Octonions;
  throw std::invalid_argument("unknown algebra: " + name);
}

// Element of a real algebra, coordinates in the basis e_0..e_{n-1}.
struct AlgebraElement {
  RealVec coeffs;

  Eigen::Index dim() const { return coeffs.size(); }
  double norm_sq() const { return coeffs.squaredNorm(); }
};

// Signed structure constants: e_i * e_j = sign(i,j) * e_{target(i,j)}.
class MultiplicationTable {
 public:
  MultiplicationTable(Eigen::Index dim, std::vector<Eigen::Index> target,
                      std::vector<int> sign)
      : dim_(dim), target_(std::move(target)), sign_(std::move(sign)) {
    if (static_cast<Eigen::Index>(target_.size()) != dim_ * dim_ ||
        static_cast<Eigen::Index>(sign_.size()) != dim_ * dim_) {
      throw std::invalid_argument("MultiplicationTable: entry count must be dim^2");
    }
  }

  Eigen::Index dim() const { return dim_; }
  Eigen::Index target(Eigen::Index i, Eigen::Index j) const { return target_[i * dim_ + j]; }
  int sign(Eigen::Index i, Eigen::Index j) const { return sign_[i * dim_ + j]; }

 private:
  Eigen::Index dim_;
  std::vector<Eigen::Index> target_;
  std::vector<int> sign_;
};

namespace detail {

// Hamilton product on basis quaternions: q_i * q_j = sign * q_target.
// Read off the displayed four-component product formula.
inline constexpr std::array<std::array<int, 4>, 4> kQuatTarget = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};
inline constexpr std::array<std::array<int, 4>, 4> kQuatSign = {{
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
}};

// Basis conjugation sign: q_0* = q_0, q_i* = -q_i for i >= 1.
inline int conj_sign(Eigen::Index i) { return i == 0 ? +1 : -1; }

}  // namespace detail

// Fixed tables for the four normed division algebras. The octonion table is
// the Cayley-Dickson doubling of the quaternion table,
// (a,b)(c,d) = (ac - d*b, da + bc*).
inline MultiplicationTable standard_table(Algebra which) {
  auto make = [](Eigen::Index n, auto product) {
    std::vector<Eigen::Index> target(n * n);
    std::vector<int> sign(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        auto [k, s] = product(i, j);
        target[i * n + j] = k;
        sign[i * n + j] = s;
      }
    return MultiplicationTable(n, std::move(target), std::move(sign));
  };

  switch (which) {
    case Algebra::Reals:
      return make(1, [](Eigen::Index, Eigen::Index) {
        return std::pair<Eigen::Index, int>{0, +1};
      });
    case Algebra::Complexes:
      return make(2, [](Eigen::Index i, Eigen::Index j) {
        return std::pair<Eigen::Index, int>{(i + j) % 2, (i == 1 && j == 1) ? -1 : +1};
      });
    case Algebra::Quaternions:
      return make(4, [](Eigen::Index i, Eigen::Index j) {
        return std::pair<Eigen::Index, int>{detail::kQuatTarget[i][j],
                                            detail::kQuatSign[i][j]};
      });
    case Algebra::Octonions:
      return make(8, [](Eigen::Index i, Eigen::Index j) -> std::pair<Eigen::Index, int> {
        const auto& qt = detail::kQuatTarget;
        const auto& qs = detail::kQuatSign;
        bool hi_i = i >= 4, hi_j = j >= 4;
        Eigen::Index a = i % 4, b = j % 4;
        if (!hi_i && !hi_j) {
          // (q_a, 0)(q_b, 0) = (q_a q_b, 0)
          return {qt[a][b], qs[a][b]};
        }
        if (!hi_i && hi_j) {
          // (q_a, 0)(0, q_b) = (0, q_b q_a)
          return {qt[b][a] + 4, qs[b][a]};
        }
        if (hi_i && !hi_j) {
          // (0, q_a)(q_b, 0) = (0, q_a q_b*)
          return {qt[a][b] + 4, detail::conj_sign(b) * qs[a][b]};
        }
        // (0, q_a)(0, q_b) = (-q_b* q_a, 0)
        return {qt[b][a], -detail::conj_sign(b) * qs[b][a]};
      });
  }
  throw std::invalid_argument("standard_table: unknown algebra");
}

// Bilinear expansion of A * B via the table.
inline AlgebraElement multiply(const MultiplicationTable& t, const AlgebraElement& a,
                               const AlgebraElement& b) {
  if (a.dim() != t.dim() || b.dim() != t.dim()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  RealVec out = RealVec::Zero(t.dim());
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    if (a.coeffs(i) == 0.0) continue;
    for (Eigen::Index j = 0; j < t.dim(); ++j) {
      out(t.target(i, j)) += t.sign(i, j) * a.coeffs(i) * b.coeffs(j);
    }
  }
  return {std::move(out)};
}

// The matrix L_i of left multiplication by e_i: L_i y = e_i * y.
// Column j holds the coefficients of e_i * e_j. Entries are 0 or +-1 and
// each L_i is orthogonal.
inline RealMat left_mult_matrix(const MultiplicationTable& t, Eigen::Index i) {
  if (i < 0 || i >= t.dim()) {
    throw std::out_of_range("left_mult_matrix: index out of range");
  }
  RealMat m = RealMat::Zero(t.dim(), t.dim());
  for (Eigen::Index j = 0; j < t.dim(); ++j) {
    m(t.target(i, j), j) = static_cast<double>(t.sign(i, j));
  }
  return m;
}

}  // namespace rsp
