#pragma once

#include <cstdint>
#include <utility>

#include "qsp/fixed_point.hpp"
#include "qsp/qram.hpp"
#include "qsp/state.hpp"

namespace qsp {

/// Retrieval primitives. Each one runs a full memory query (route, bus,
/// uncompute) over the state's address support and XOR-copies the selected
/// cell fields into the working registers. XOR copies are self-inverse, so
/// applying the same primitive twice restores the registers it wrote.
///
/// Preconditions accept a register that is either clean (zero) or holding
/// exactly the words this query would copy; anything else is rejected.

/// Copy the root word (middle field of cell 0) into register l.
/// Requires a single-component support at address 0 with r = 0.
SparseState retrieve_root(SparseState state, QramTree& qram);

/// Copy each addressed sibling-pair cell into registers l and r. Requires
/// the address support within [2^(h-1), 2^h) for level h in [1, depth].
SparseState retrieve_siblings(SparseState state, QramTree& qram, std::size_t h);

/// Copy each addressed sign bit into register s. Requires l = r = 0.
SparseState retrieve_signs(SparseState state, QramTree& qram);

/// Re-run the level-h sibling query to XOR registers l and r back to zero.
/// Throws StaleAddressError if the address register changed since the
/// paired retrieval (detected by a word mismatch before any mutation).
SparseState clear_value_registers(SparseState state, QramTree& qram, std::size_t h);

/// Re-run the sign query to XOR register s back to zero.
SparseState clear_sign_register(SparseState state, QramTree& qram);

/// Split the branch qubit v of every component in proportion to the decoded
/// value registers: weight sqrt(a/(a+b)) on v=0 and sqrt(b/(a+b)) on v=1,
/// an equal split when a = b = 0. Requires v = 0 everywhere. In fixed mode
/// the weights come from the step-rounded arithmetic pipeline; in exact
/// mode from plain double arithmetic. Components with zero amplitude (or
/// below prune_threshold) are dropped afterwards.
SparseState apply_branch_split(SparseState state, const ValueCodec& codec,
                               double prune_threshold = 0.0);

/// Exact-mode split weights.
std::pair<double, double> branch_weights_exact(double a, double b);

struct PipelineResult {
    std::uint64_t theta_word = 0;  // rotation angle 2*asin(sqrt(b/(a+b))), quantized
    double w0 = 1.0;
    double w1 = 0.0;
};

/// Fixed-point split pipeline: sum, quotient, square root, arcsine, doubling,
/// with the result re-quantized to fmt after every step, then the rotation
/// cascade on the quantized angle. A zero quantized angle yields (1, 0)
/// without a rotation. Throws OverflowError if a + b exceeds the format.
PipelineResult branch_angle_pipeline(std::uint64_t a_word, std::uint64_t b_word,
                                     const FixedFormat& fmt);

/// Weights (cos(theta/2), sin(theta/2)) computed as the ordered product of
/// one fixed rotation per set bit of the angle word (most significant bit
/// first, each contributing its positional power of two). Equals the single
/// rotation by the decoded angle to machine precision.
std::pair<double, double> cascade_rotation_weights(std::uint64_t theta_word,
                                                   const FixedFormat& fmt);

/// Left circular shift of the (v, address) bit string: v receives the old
/// address MSB, every address bit moves one place toward the MSB, and the
/// address LSB receives the old v. Amplitudes are untouched.
SparseState circular_shift_left(SparseState state);

/// Inverse of circular_shift_left.
SparseState circular_shift_right(SparseState state);

/// Negate the amplitude of every component with s = 1 and v = 1.
SparseState apply_sign_phase(SparseState state);

/// X gate on one address qubit (bit index 0 is the LSB).
SparseState flip_address_bit(SparseState state, std::size_t bit);

/// X gate on the branch qubit v.
SparseState flip_branch_bit(SparseState state);

}  // namespace qsp
