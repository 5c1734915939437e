#include "q4ent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q4ent {

Eigen::Vector4cd eig_complex_4(const Mat4& m) {
  if (!m.allFinite()) throw std::invalid_argument("eig_complex_4: non-finite entries");
  Eigen::ComplexEigenSolver<Mat4> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_complex_4: QR iteration did not converge");
  Eigen::Vector4cd ev = solver.eigenvalues();
  std::array<Complex, 4> vals{ev(0), ev(1), ev(2), ev(3)};
  std::sort(vals.begin(), vals.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  for (int i = 0; i < 4; ++i) ev(i) = vals[i];
  return ev;
}

namespace {

// First-nonzero-positive sign convention so eigenvector output is unique.
Vec3 canonical_sign(Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

double objective(const Mat3& Q, const Vec3& b, const Vec3& a) {
  return a.dot(Q * a) + 2.0 * b.dot(a);
}

// Top eigenvector with ties (within tie_tol) broken by projecting the lowest
// coordinate axis onto the leading eigenspace.
Vec3 top_eigenvector(const Eigen::SelfAdjointEigenSolver<Mat3>& es, double tie_tol) {
  const auto& lam = es.eigenvalues();  // ascending
  const double lmax = lam(2);
  int first = 2;
  while (first > 0 && lmax - lam(first - 1) <= tie_tol) --first;
  if (first == 2) return canonical_sign(es.eigenvectors().col(2));

  const auto basis = es.eigenvectors().rightCols(3 - first);
  for (int k = 0; k < 3; ++k) {
    Vec3 p = basis * (basis.transpose() * Vec3::Unit(k));
    if (p.norm() > 1e-8) return canonical_sign(p.normalized());
  }
  return canonical_sign(es.eigenvectors().col(2));  // unreachable for an orthonormal basis
}

}  // namespace

SphereMax sphere_quadratic_max(const Mat3& Qin, const Vec3& b) {
  const Mat3 Q = 0.5 * (Qin + Qin.transpose());
  const double scale = std::max(1.0, Q.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Mat3> es(Q);
  const Vec3 lam = es.eigenvalues();
  const Mat3 V = es.eigenvectors();
  const double lmax = lam(2);

  const double bnorm = b.norm();
  if (bnorm <= 1e-14 * scale) {
    const Vec3 a = top_eigenvector(es, 1e-12 * scale);
    return {a, objective(Q, b, a)};
  }

  const Vec3 beta = V.transpose() * b;

  // Split spectrum into the leading eigenspace and the rest.
  const double edge_tol = 1e-13 * std::max(scale, bnorm);
  double beta_top_sq = 0.0;
  Vec3 w = Vec3::Zero();  // pseudo-inverse solution at l = lmax
  for (int i = 0; i < 3; ++i) {
    if (lmax - lam(i) <= edge_tol)
      beta_top_sq += beta(i) * beta(i);
    else
      w += (beta(i) / (lmax - lam(i))) * V.col(i);
  }

  const double wn2 = w.squaredNorm();
  if (beta_top_sq <= edge_tol * edge_tol && wn2 <= 1.0) {
    // b is orthogonal to the leading eigenspace and the interior solution is
    // short of the sphere: pad with a top-eigenspace component.
    const Vec3 vtop = top_eigenvector(es, edge_tol);
    const Vec3 a = w + std::sqrt(std::max(0.0, 1.0 - wn2)) * vtop;
    return {a, objective(Q, b, a)};
  }

  // Secular equation: |a(l)|^2 = sum beta_i^2 / (l - lam_i)^2 = 1, l > lmax.
  const auto norm_at = [&](double l) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = l - lam(i);
      s += (beta(i) * beta(i)) / (d * d);
    }
    return std::sqrt(s);
  };

  double lo = lmax;                 // |a| >= 1 here (possibly +inf)
  double hi = lmax + bnorm + scale; // |a| < 1 here: |a| <= bnorm/(hi - lmax) < 1
  double l = lmax + 0.5 * bnorm;
  for (int iter = 0; iter < 200; ++iter) {
    if (!(l > lo && l < hi)) l = 0.5 * (lo + hi);
    const double n = norm_at(l);
    if (std::abs(n - 1.0) <= 1e-14) break;
    if (n > 1.0)
      lo = l;
    else
      hi = l;
    // Newton step on 1/|a(l)| - 1 = 0 (nearly linear in l)
    double dsum = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = l - lam(i);
      dsum += (beta(i) * beta(i)) / (d * d * d);
    }
    const double fprime = dsum / (n * n * n);  // d(1/|a|)/dl
    if (fprime > 0.0) {
      const double step = (1.0 / n - 1.0) / fprime;
      l -= step;
    } else {
      l = 0.5 * (lo + hi);
    }
  }

  Vec3 a = Vec3::Zero();
  for (int i = 0; i < 3; ++i) a += (beta(i) / (l - lam(i))) * V.col(i);
  // Final metric projection absorbs the last-ulp secular residual.
  a.normalize();
  return {a, objective(Q, b, a)};
}

}  // namespace q4ent
