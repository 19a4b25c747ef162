#pragma once

#include "hf/hopf.hpp"

namespace hf {

// A finite group with an order-two (or identity) automorphism.
struct DoublingInput {
  FiniteGroup group;
  GroupAutomorphism theta;
};

// Throws unless theta is a group automorphism with theta^2 = id.
void validate_doubling_input(const DoublingInput& input);

// The automorphism of the function algebra dual to theta: d_x -> d_theta(x).
AlgebraMap dual_automorphism(const FiniteGroup& g, const GroupAutomorphism& theta);

// Crossed product of the function algebra by Z_2 with full Hopf structure and
// its two-sided invariant functional h (h(d_x) = 1, h(d_x U) = 0).
struct CrossedHopf {
  HopfAlgebra b;
  SparseVec left_inv, right_inv;
};

// The counit and antipode of the crossed product admit two candidate forms; a
// literal transcription of the matrix display, and the forms forced by the
// characterisation through the inclusion of the function algebra. They differ
// on the U-part; the axiom suite arbitrates (see doubling_erratum_report).
enum class CrossedVariant { corrected, printed_counit, printed_antipode };

CrossedHopf build_crossed_hopf(const DoublingInput& input,
                               CrossedVariant variant = CrossedVariant::corrected,
                               bool verify = true);

enum class InvSide { left, right };

// left:  (id (x) f) Delta = unit . f;  right: (f (x) id) Delta = unit . f.
Report verify_invariant_functional(const HopfAlgebra& h, const SparseVec& f, InvSide side);

// Direct doubling on C[G] (+) C[G]: basis xi_x (first copy), eta_x (second),
// Delta(xi_x) = xi_x (x) xi_x + eta_x (x) eta_theta(x),
// Delta(eta_x) = xi_x (x) eta_x + eta_x (x) xi_theta(x).
HopfAlgebra double_direct(const DoublingInput& input, bool verify = true);

// Basis pairing used to match the dual of the crossed product against the
// direct doubling: u_delta pairs eta_y with h(. U d_y) (which lands exactly
// on the dual basis vector of d_y U); delta_u pairs eta_y with h(. d_y U)
// (inducing a theta shift on the U-block).
enum class PairingConvention { u_delta, delta_u };

Report verify_doubling_agreement(const DoublingInput& input,
                                 PairingConvention convention = PairingConvention::u_delta);

// Runs both the printed and the corrected counit/antipode of the crossed
// product through the axiom suite and records the discrepancies.
Report doubling_erratum_report(const DoublingInput& input);

}  // namespace hf
