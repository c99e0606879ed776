#pragma once

#include <span>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

struct BitPlane {
    BitVec demod_bits;    // 9 x 1200, row-major
    BitVec payload_bits;  // 7200 bits after descrambling
};

/// Hard-decision quadrant mapping: (+,+) -> 00, (+,-) -> 01, (-,+) -> 10,
/// (-,-) -> 11; a component equal to zero falls through to 00.
BitVec qpsk_demod(std::span<const cplx> carriers);

/// Exact inverse of the quadrant mapping: bit pair (b0, b1) maps to
/// ((1-2*b0)/sqrt(2), (1-2*b1)/sqrt(2)).
std::vector<cplx> qpsk_mod(std::span<const uint8_t> bits);

/// Concatenate the six data rows of the 9 x 1200 plane and XOR with the
/// scrambling stream.
BitVec descramble(std::span<const uint8_t> demod_bits);

/// Inverse: XOR with the scrambling stream and distribute over the data rows.
/// Pilot rows stay zero; row 0 duplicates row 1 (it is discarded on receive).
BitVec scramble(std::span<const uint8_t> payload_bits);

}  // namespace droneid
