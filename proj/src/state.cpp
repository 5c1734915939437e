#include "q4ent/state.hpp"

#include <cmath>
#include <stdexcept>

namespace q4ent {

namespace {

constexpr double kNormTol = 1e-12;

void require_qubit(int q) {
  if (q < 1 || q > kNumQubits) throw std::invalid_argument("qubit index out of range [1,4]");
}

void require_normalized(const PureState4& state) {
  if (std::abs(state.norm_sq() - 1.0) > 1e-9)
    throw std::invalid_argument("operation requires a normalized state");
}

}  // namespace

PureState4 state_from_amplitudes(std::span<const Complex> amps, bool renormalize) {
  if (amps.size() != static_cast<std::size_t>(kDim))
    throw std::invalid_argument("expected exactly 16 amplitudes");
  Vec16 v;
  for (int i = 0; i < kDim; ++i) v(i) = amps[i];
  return state_from_amplitudes(v, renormalize);
}

PureState4 state_from_amplitudes(const Vec16& amps, bool renormalize) {
  PureState4 s;
  s.amps = amps;
  const double n2 = s.norm_sq();
  if (!std::isfinite(n2)) throw std::invalid_argument("non-finite amplitude");
  if (renormalize) {
    if (n2 <= 0.0) throw std::invalid_argument("cannot renormalize the zero vector");
    s.amps /= std::sqrt(n2);
    s.normalized = true;
  } else {
    s.normalized = std::abs(n2 - 1.0) <= kNormTol;
  }
  return s;
}

PureState4 apply_local(const PureState4& state, const std::array<Mat2, 4>& ops) {
  const Mat16 m = tensor4(ops[0], ops[1], ops[2], ops[3]);
  PureState4 out;
  out.amps = m * state.amps;
  out.normalized = std::abs(out.norm_sq() - 1.0) <= kNormTol;
  return out;
}

Mat4 reduced_density(const PureState4& state, int i, int j) {
  require_qubit(i);
  require_qubit(j);
  if (i >= j) throw std::invalid_argument("reduced_density expects an ordered pair i < j");
  require_normalized(state);

  Mat4 rho = Mat4::Zero();
  for (int r = 0; r < kDim; ++r) {
    const int kept_r = 2 * qubit_bit(r, i) + qubit_bit(r, j);
    for (int c = 0; c < kDim; ++c) {
      // traced-out qubits must agree between bra and ket
      if ((r & ~((8 >> (i - 1)) | (8 >> (j - 1)))) != (c & ~((8 >> (i - 1)) | (8 >> (j - 1)))))
        continue;
      const int kept_c = 2 * qubit_bit(c, i) + qubit_bit(c, j);
      rho(kept_r, kept_c) += state.amps(r) * std::conj(state.amps(c));
    }
  }
  return rho;
}

Mat2 reduced_density_single(const PureState4& state, int qubit) {
  require_qubit(qubit);
  require_normalized(state);

  const int mask = 8 >> (qubit - 1);
  Mat2 rho = Mat2::Zero();
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      rho(qubit_bit(r, qubit), qubit_bit(c, qubit)) +=
          state.amps(r) * std::conj(state.amps(c));
    }
  return rho;
}

double expectation(const PureState4& state, const Mat16& op) {
  require_normalized(state);
  if (!is_hermitian(op)) throw std::invalid_argument("expectation requires a Hermitian operator");
  const Complex value = state.amps.dot(op * state.amps);
  if (std::abs(value.imag()) > 1e-10)
    throw std::runtime_error("expectation of Hermitian operator has imaginary residue");
  return value.real();
}

}  // namespace q4ent
