#pragma once

#include <array>

#include "q4ent/types.hpp"

namespace q4ent {

/// Values of the degree-2..24 polynomial SLOCC invariants of one state.
/// Delta is always S^3 - 27 T^2 by construction. Homogeneity degrees under
/// amplitude scaling: H ~ t^2, L/M/N ~ t^4, Dxt ~ t^6, S ~ t^8, T ~ t^12,
/// Delta ~ t^24.
struct InvariantSet {
  Complex H, L, M, N, Dxt, S, T, Delta;
};

/// Coefficients of the binary quartic q(x,y) = c0 x^4 + c1 x^3 y + c2 x^2 y^2
/// + c3 x y^3 + c4 y^4 obtained from the slice pencil.
template <typename Real>
using QuarticCoeffsT = std::array<ComplexT<Real>, 5>;
using QuarticCoeffs = QuarticCoeffsT<double>;

/// Degree-4 Cayley hyperdeterminant of a 2x2x2 array, entries indexed
/// t[4i + 2j + k]. Standard 12-term expansion; the convention is pinned by
/// the GHZ-type tensor (only t000, t111 nonzero) giving t000^2 t111^2.
template <typename Scalar>
Scalar cayley_det3(const std::array<Scalar, 8>& t) {
  const Scalar& t000 = t[0];
  const Scalar& t001 = t[1];
  const Scalar& t010 = t[2];
  const Scalar& t011 = t[3];
  const Scalar& t100 = t[4];
  const Scalar& t101 = t[5];
  const Scalar& t110 = t[6];
  const Scalar& t111 = t[7];
  return t000 * t000 * t111 * t111 + t001 * t001 * t110 * t110 +
         t010 * t010 * t101 * t101 + t011 * t011 * t100 * t100 -
         Scalar(2) * (t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111 +
                      t000 * t011 * t100 * t111 + t001 * t010 * t101 * t110 +
                      t001 * t011 * t110 * t100 + t010 * t011 * t101 * t100) +
         Scalar(4) * (t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111);
}

/// Quadratic invariant H = sum_{i=0}^{7} (-1)^popcount(i) a_i a_{15-i}.
/// The paper never prints the expansion; this sign pattern is the unique one
/// (up to global sign) reproducing all three published family values
/// (GHZ: gamma sqrt(1-gamma^2); phi2: -2 b1^2 - b2^2; G_ag: 1/2).
template <typename Real>
ComplexT<Real> invariant_h(const Vec16T<Real>& a) {
  ComplexT<Real> h(0);
  for (int i = 0; i < 8; ++i) {
    const int sign = (__builtin_popcount(static_cast<unsigned>(i)) & 1) ? -1 : 1;
    h += Real(sign) * a(i) * a(15 - i);
  }
  return h;
}

/// Degree-4 determinant invariants: 4x4 determinants of the amplitude array
/// reshaped along the three qubit bipartitions, in row-major layout
///   L: rows (q1 q2), cols (q3 q4)     -- bipartition (1,2 | 3,4)
///   M: rows (q1 q3), cols (q2 q4)     -- bipartition (1,3 | 2,4)
///   N: rows (q1 q4), cols (q2 q3)     -- bipartition (1,4 | 2,3)
/// This assignment reproduces the phi2 family's printed L = -N =
/// b1^2 (b1^2 - b2^2), M = 0, which discriminates the three options.
template <typename Real>
std::array<ComplexT<Real>, 3> invariant_lmn(const Vec16T<Real>& a) {
  using C = ComplexT<Real>;
  const auto det_bipartition = [&](int qr0, int qr1, int qc0, int qc1) {
    Eigen::Matrix<C, 4, 4> m;
    m.setZero();
    for (int i = 0; i < kDim; ++i) {
      const int r = 2 * qubit_bit(i, qr0) + qubit_bit(i, qr1);
      const int c = 2 * qubit_bit(i, qc0) + qubit_bit(i, qc1);
      m(r, c) = a(i);
    }
    return m.determinant();
  };
  return {det_bipartition(1, 2, 3, 4), det_bipartition(1, 3, 2, 4),
          det_bipartition(1, 4, 2, 3)};
}

/// Degree-6 invariant D_xt, transcribed literally from its published
/// expansion in a_0..a_15.
template <typename Real>
ComplexT<Real> invariant_dxt(const Vec16T<Real>& a) {
  return (-a(11) * a(13) + a(15) * a(9)) *
             (-(a(3) * a(4) + a(2) * a(5) - a(1) * a(6) - a(0) * a(7)) *
                  (-a(0) * a(14) + a(12) * a(2) + a(10) * a(4) - a(6) * a(8)) +
              (a(2) * a(4) - a(0) * a(6)) *
                  (-a(1) * a(14) - a(0) * a(15) + a(13) * a(2) + a(12) * a(3) +
                   a(11) * a(4) + a(10) * a(5) - a(7) * a(8) - a(6) * a(9))) +
         (-a(10) * a(12) + a(14) * a(8)) *
             (-(a(3) * a(5) - a(1) * a(7)) *
                  (-a(1) * a(14) - a(0) * a(15) + a(13) * a(2) + a(12) * a(3) +
                   a(11) * a(4) + a(10) * a(5) - a(7) * a(8) - a(6) * a(9)) +
              (a(3) * a(4) + a(2) * a(5) - a(1) * a(6) - a(0) * a(7)) *
                  (-a(1) * a(15) + a(13) * a(3) + a(11) * a(5) - a(7) * a(9))) -
         (-a(11) * a(12) - a(10) * a(13) + a(15) * a(8) + a(14) * a(9)) *
             ((a(3) * a(5) - a(1) * a(7)) *
                  (a(0) * a(14) - a(12) * a(2) - a(10) * a(4) + a(6) * a(8)) +
              (-a(2) * a(4) + a(0) * a(6)) *
                  (a(1) * a(15) - a(13) * a(3) - a(11) * a(5) + a(7) * a(9)));
}

/// Binary quartic of the qubit-1 slice pencil: q(x,y) = cayley_det3(B(x,y))
/// with B(x,y)_{jkl} = a_{0jkl} x + a_{1jkl} y. Coefficients are extracted by
/// evaluating at (x,y) = (1,t), t in {-2,-1,0,1,2}, and solving the 5x5
/// Vandermonde system. The qubit-1 axis reproduces all three published
/// families (GHZ pencil gives gamma^2 (1-gamma^2) x^2 y^2).
/// `residual` (optional) receives the relative interpolation residual.
template <typename Real>
QuarticCoeffsT<Real> pencil_quartic(const Vec16T<Real>& a, Real* residual = nullptr) {
  using C = ComplexT<Real>;
  constexpr int kSamples = 5;
  const Real ts[kSamples] = {Real(-2), Real(-1), Real(0), Real(1), Real(2)};

  Eigen::Matrix<C, kSamples, 1> q;
  for (int s = 0; s < kSamples; ++s) {
    std::array<C, 8> slice;
    for (int j = 0; j < 8; ++j) slice[j] = a(j) + ts[s] * a(8 + j);
    q(s) = cayley_det3(slice);
  }

  Eigen::Matrix<C, kSamples, kSamples> vand;
  for (int s = 0; s < kSamples; ++s) {
    Real p = Real(1);
    for (int k = 0; k < kSamples; ++k) {
      vand(s, k) = C(p);
      p *= ts[s];
    }
  }
  const Eigen::Matrix<C, kSamples, 1> c = vand.fullPivLu().solve(q);
  if (residual) {
    const Real num = (vand * c - q).norm();
    const Real den = q.norm();
    *residual = den > Real(0) ? num / den : num;
  }
  return {c(0), c(1), c(2), c(3), c(4)};
}

/// Classical apolar invariants of the binary quartic, pulled back to the
/// degree-8 and degree-12 state invariants:
///   S = c0 c4 - c1 c3 / 4 + c2^2 / 12
///   T = -(c0 c2 c4 / 6 - c0 c3^2 / 16 - c4 c1^2 / 16 + c1 c2 c3 / 48 - c2^3 / 216)
/// T is minus the classical J invariant; the published family values (e.g.
/// GHZ T = +gamma^6 (1-gamma^2)^3 / 216) fix this overall sign. Delta is
/// insensitive to it.
template <typename Real>
std::array<ComplexT<Real>, 2> quartic_st(const QuarticCoeffsT<Real>& c) {
  using C = ComplexT<Real>;
  const C S = c[0] * c[4] - c[1] * c[3] / Real(4) + c[2] * c[2] / Real(12);
  const C J = c[0] * c[2] * c[4] / Real(6) - c[0] * c[3] * c[3] / Real(16) -
              c[4] * c[1] * c[1] / Real(16) + c[1] * c[2] * c[3] / Real(48) -
              c[2] * c[2] * c[2] / Real(216);
  return {S, -J};
}

inline Complex invariant_delta(const Complex& S, const Complex& T) {
  return S * S * S - 27.0 * T * T;
}

/// All eight invariants of a state (normalization not required; the values
/// are polynomials in the raw amplitudes).
InvariantSet all_invariants(const PureState4& state);

}  // namespace q4ent
