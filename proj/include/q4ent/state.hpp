#pragma once

#include <span>

#include "q4ent/types.hpp"

namespace q4ent {

/// Builds a PureState4 from 16 amplitudes in basis order a0..a15.
/// With `renormalize` set the vector is scaled to unit norm (throws on a zero
/// vector); otherwise the normalized flag records whether the input already
/// has unit norm within 1e-12.
PureState4 state_from_amplitudes(std::span<const Complex> amps,
                                 bool renormalize = false);
PureState4 state_from_amplitudes(const Vec16& amps, bool renormalize = false);

/// phi = A (x) B (x) C (x) D psi with one invertible 2x2 operator per qubit.
/// The result is deliberately NOT renormalized: the polynomial invariants are
/// homogeneous in the raw amplitudes and renormalizing would break the
/// SL(2,C) invariance checks.
PureState4 apply_local(const PureState4& state, const std::array<Mat2, 4>& ops);

/// Reduced density matrix of the ordered qubit pair (i, j), i < j, 1-based.
/// Requires a normalized state; the result has unit trace and is Hermitian.
Mat4 reduced_density(const PureState4& state, int i, int j);

/// Single-qubit reduced density matrix (2x2).
Mat2 reduced_density_single(const PureState4& state, int qubit);

/// <psi| op |psi> for a Hermitian 16x16 operator on a normalized state.
/// Throws if the operator fails the Hermiticity check (1e-12) or the
/// imaginary residue of the expectation exceeds 1e-10.
double expectation(const PureState4& state, const Mat16& op);

}  // namespace q4ent
