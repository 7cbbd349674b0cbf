// Constant orthogonal frame families V_0..V_{n-1} (V_0 = I, {V_i y}
// orthonormal for every unit y), the hardcoded reference families for
// n = 4 and n = 8, and the dimension-restriction verdict.

#pragma once

#include "rsp/division_algebra.hpp"
#include "rsp/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace rsp {

struct FrameFamily {
  Eigen::Index dim;
  std::vector<RealMat> mats;  // V_0..V_{n-1}
};

struct CheckResult {
  std::string name;
  bool pass;
  double max_residual;
};

struct FrameReport {
  std::vector<CheckResult> checks;
  bool overall_pass;
  double tol;
};

// Checks V_0 = I, orthogonality of each V_i, antisymmetry for i >= 1, and
// the pairwise frame condition V_i^T V_j + V_j^T V_i = 2 delta_ij I.
// Failures are report content, not errors.
inline FrameReport verify_frame_family(const FrameFamily& f, double tol = kAssertTol) {
  FrameReport report;
  report.tol = tol;
  Eigen::Index n = f.dim;
  RealMat id = RealMat::Identity(n, n);

  auto add = [&](const std::string& name, double residual) {
    report.checks.push_back({name, residual <= tol, residual});
  };

  if (static_cast<Eigen::Index>(f.mats.size()) != n) {
    report.checks.push_back({"matrix count = dim", false,
                             static_cast<double>(f.mats.size()) - static_cast<double>(n)});
    report.overall_pass = false;
    return report;
  }

  add("V_0 = I", (f.mats[0] - id).cwiseAbs().maxCoeff());

  double ortho = 0.0, antisym = 0.0, frame = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    ortho = std::max(ortho,
                     (f.mats[i].transpose() * f.mats[i] - id).cwiseAbs().maxCoeff());
    if (i >= 1) {
      antisym = std::max(antisym,
                         (f.mats[i] + f.mats[i].transpose()).cwiseAbs().maxCoeff());
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      RealMat anti = f.mats[i].transpose() * f.mats[j] + f.mats[j].transpose() * f.mats[i];
      frame = std::max(frame, anti.cwiseAbs().maxCoeff());
    }
  }
  add("orthogonality", ortho);
  if (n > 1) add("antisymmetry (i >= 1)", antisym);
  add("pairwise frame condition", frame);

  report.overall_pass = true;
  for (const auto& c : report.checks) report.overall_pass = report.overall_pass && c.pass;
  return report;
}

// V_i = left-multiplication matrices of the algebra basis. Norm
// multiplicativity makes {e_i * y} already orthonormal for unit y, so no
// orthonormalization step is needed.
inline FrameFamily build_frame_family(const MultiplicationTable& t) {
  FrameFamily f;
  f.dim = t.dim();
  f.mats.reserve(t.dim());
  for (Eigen::Index i = 0; i < t.dim(); ++i) f.mats.push_back(left_mult_matrix(t, i));
  FrameReport report = verify_frame_family(f);
  if (!report.overall_pass) {
    throw std::invalid_argument(
        "build_frame_family: table does not yield a valid frame family");
  }
  return f;
}

namespace detail {

// 2x2 blocks used by the reference families. sx, sz are the real Pauli
// matrices; miy = -i*sigma_y = [[0,-1],[1,0]], which is real.
inline RealMat block2(double a, double b, double c, double d) {
  RealMat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline RealMat from_blocks(const std::vector<std::vector<RealMat>>& blocks) {
  Eigen::Index nb = static_cast<Eigen::Index>(blocks.size());
  RealMat m = RealMat::Zero(2 * nb, 2 * nb);
  for (Eigen::Index r = 0; r < nb; ++r)
    for (Eigen::Index c = 0; c < nb; ++c) m.block(2 * r, 2 * c, 2, 2) = blocks[r][c];
  return m;
}

}  // namespace detail

// The reference frame families for n = 4 and n = 8, entries in {0, +1, -1}.
inline FrameFamily reference_family(Eigen::Index n) {
  using detail::block2;
  using detail::from_blocks;
  const RealMat sx = block2(0, 1, 1, 0);
  const RealMat sz = block2(1, 0, 0, -1);
  const RealMat miy = block2(0, -1, 1, 0);  // -i*sigma_y
  const RealMat piy = block2(0, 1, -1, 0);  // +i*sigma_y
  const RealMat i2 = RealMat::Identity(2, 2);
  const RealMat z2 = RealMat::Zero(2, 2);

  if (n == 4) {
    FrameFamily f;
    f.dim = 4;
    f.mats.push_back(RealMat::Identity(4, 4));
    f.mats.push_back(from_blocks({{miy, z2}, {z2, miy}}));
    f.mats.push_back(from_blocks({{z2, -sz}, {sz, z2}}));
    f.mats.push_back(from_blocks({{z2, -sx}, {sx, z2}}));
    return f;
  }
  if (n == 8) {
    FrameFamily f;
    f.dim = 8;
    f.mats.push_back(RealMat::Identity(8, 8));
    f.mats.push_back(from_blocks({{miy, z2, z2, z2},
                                  {z2, miy, z2, z2},
                                  {z2, z2, miy, z2},
                                  {z2, z2, z2, miy}}));
    f.mats.push_back(from_blocks({{z2, -sz, z2, z2},
                                  {sz, z2, z2, z2},
                                  {z2, z2, z2, -i2},
                                  {z2, z2, i2, z2}}));
    f.mats.push_back(from_blocks({{z2, -sx, z2, z2},
                                  {sx, z2, z2, z2},
                                  {z2, z2, z2, miy},
                                  {z2, z2, miy, z2}}));
    f.mats.push_back(from_blocks({{z2, z2, -sz, z2},
                                  {z2, z2, z2, i2},
                                  {sz, z2, z2, z2},
                                  {z2, -i2, z2, z2}}));
    f.mats.push_back(from_blocks({{z2, z2, -sx, z2},
                                  {z2, z2, z2, piy},
                                  {sx, z2, z2, z2},
                                  {z2, piy, z2, z2}}));
    f.mats.push_back(from_blocks({{z2, z2, z2, -i2},
                                  {z2, z2, -sz, z2},
                                  {z2, sz, z2, z2},
                                  {i2, z2, z2, z2}}));
    f.mats.push_back(from_blocks({{z2, z2, z2, miy},
                                  {z2, z2, -sx, z2},
                                  {z2, sx, z2, z2},
                                  {miy, z2, z2, z2}}));
    return f;
  }
  throw std::invalid_argument("reference_family: only n = 4 and n = 8 are available");
}

// Radon-Hurwitz number: write n = 2^(4a+b) * odd with 0 <= b <= 3,
// then rho(n) = 8a + 2^b.
inline int radon_hurwitz(long long n) {
  if (n < 1) throw std::invalid_argument("radon_hurwitz: n must be >= 1");
  int c = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++c;
  }
  int a = c / 4, b = c % 4;
  return 8 * a + (1 << b);
}

struct DimensionVerdict {
  long long dim;
  bool realizable;
  int radon_number;
  std::string obstruction_note;  // empty when realizable
};

inline DimensionVerdict realizability_verdict(long long n) {
  int rho = radon_hurwitz(n);
  DimensionVerdict v{n, rho == n, rho, ""};
  if (!v.realizable) {
    v.obstruction_note = "rho(" + std::to_string(n) + ") = " + std::to_string(rho) +
                         " < " + std::to_string(n) + ": no full frame family exists";
    if (n % 2 == 1) {
      v.obstruction_note +=
          "; odd dimension: a real antisymmetric matrix of odd dimension has "
          "determinant 0, hence cannot be orthogonal, so no V_1 exists";
    }
  }
  return v;
}

// Signed-permutation correspondence between two frame families:
// for each matrix of `a`, the index j and sign s with a.mats[i] = s * b.mats[j],
// when such a match exists entrywise within tol.
struct MatrixMatch {
  Eigen::Index index;  // position in b, or -1 when unmatched
  int sign;
  double residual;  // entrywise residual of the best candidate
};

struct ReconciliationReport {
  std::vector<MatrixMatch> matches;
  bool full_correspondence;
};

inline ReconciliationReport reconcile_families(const FrameFamily& a, const FrameFamily& b,
                                               double tol = kAssertTol) {
  ReconciliationReport report;
  report.full_correspondence = a.dim == b.dim;
  if (a.dim != b.dim) return report;
  for (const RealMat& m : a.mats) {
    MatrixMatch best{-1, +1, std::numeric_limits<double>::infinity()};
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(b.mats.size()); ++j) {
      for (int s : {+1, -1}) {
        double r = (m - s * b.mats[j]).cwiseAbs().maxCoeff();
        if (r < best.residual) best = {j, s, r};
      }
    }
    if (best.residual > tol) best.index = -1;
    report.full_correspondence = report.full_correspondence && best.index >= 0;
    report.matches.push_back(best);
  }
  return report;
}

}  // namespace rsp
