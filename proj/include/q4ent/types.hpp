#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>

namespace q4ent {

template <typename Real>
using ComplexT = std::complex<Real>;

template <typename Real>
using Vec16T = Eigen::Matrix<ComplexT<Real>, 16, 1>;

using Real = double;
using Complex = ComplexT<double>;

using Vec16 = Vec16T<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat16 = Eigen::Matrix<Complex, 16, 16>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr int kNumQubits = 4;
inline constexpr int kDim = 16;

/// Basis index convention: i = 8*q1 + 4*q2 + 2*q3 + q4, so qubit 1 is the
/// most significant bit and |q1 q2 q3 q4> reads left to right (a3 <-> |0011>).
/// Qubit arguments throughout the library are 1-based.
inline constexpr int qubit_bit(int index, int qubit) {
  return (index >> (kNumQubits - qubit)) & 1;
}

/// A 4-qubit pure state: 16 complex amplitudes in the fixed basis order.
/// `normalized` records whether sum |a_i|^2 = 1 was established (within 1e-12)
/// at construction; operations that need unit norm check it.
struct PureState4 {
  Vec16 amps = Vec16::Zero();
  bool normalized = false;

  double norm_sq() const { return amps.squaredNorm(); }
};

inline Mat2 pauli_x() {
  Mat2 m;
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return m;
}

inline Mat2 pauli_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Mat2 pauli_z() {
  Mat2 m;
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return m;
}

/// a . sigma for a real 3-vector (Hermitian; unit vectors give involutions).
inline Mat2 direction_op(const Vec3& a) {
  Mat2 m;
  m << Complex(a.z(), 0), Complex(a.x(), -a.y()),
       Complex(a.x(), a.y()), Complex(-a.z(), 0);
  return m;
}

/// Kronecker product of four 2x2 operators in qubit order 1..4.
inline Mat16 tensor4(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat16 m;
  for (int r = 0; r < kDim; ++r)
    for (int s = 0; s < kDim; ++s)
      m(r, s) = a((r >> 3) & 1, (s >> 3) & 1) * b((r >> 2) & 1, (s >> 2) & 1) *
                c((r >> 1) & 1, (s >> 1) & 1) * d(r & 1, s & 1);
  return m;
}

/// Appends a 2x2 factor as the least significant qubit: kron(a, b).
template <int N>
Eigen::Matrix<Complex, 2 * N, 2 * N> kron_append(
    const Eigen::Matrix<Complex, N, N>& a, const Mat2& b) {
  Eigen::Matrix<Complex, 2 * N, 2 * N> m;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      m.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 1e-12) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// SplitMix64 mixer; used to derive independent deterministic RNG streams
/// (per restart, per sweep point) from one user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace q4ent
