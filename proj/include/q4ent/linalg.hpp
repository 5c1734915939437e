#pragma once

#include "q4ent/types.hpp"

namespace q4ent {

/// Eigenvalues of a general complex 4x4 matrix, sorted by descending real
/// part (descending imaginary part on ties). Throws if the underlying QR
/// iteration fails to converge.
Eigen::Vector4cd eig_complex_4(const Mat4& m);

struct SphereMax {
  Vec3 argmax;
  double value;
};

/// Global maximizer of a^T Q a + 2 b^T a over the unit sphere |a| = 1,
/// Q symmetric 3x3. b = 0 reduces to the top eigenvector of Q (eigenvalue
/// ties broken toward the lowest coordinate index); otherwise the Lagrange
/// secular equation a(l) = (l I - Q)^{-1} b is solved for l > l_max(Q) with
/// |  |a| - 1 | <= 1e-12, including the degenerate branch where b has no
/// component along the top eigenspace.
SphereMax sphere_quadratic_max(const Mat3& Q, const Vec3& b);

}  // namespace q4ent
