#pragma once

#include <array>
#include <span>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

// 96-byte transport frame: 93 payload bytes followed by a 3-byte CRC.
inline constexpr int kFrameBytes = 96;
inline constexpr int kFrameCrcBytes = 3;
inline constexpr int kInfoBits = kFrameBytes * 8;  // 768
inline constexpr int kCodedBits = 3 * (kInfoBits + 4);  // 2316

/// CRC-24 (polynomial 0x864CFB, zero init, no reflection). Appending the CRC
/// of a block to that block makes the whole check to zero.
uint32_t crc24(std::span<const uint8_t> data);

/// Write the CRC of the first 93 bytes into the last 3 bytes of a frame.
void seal_frame_crc(std::span<uint8_t> frame);

/// True when the 96-byte frame checks to a zero residual.
bool frame_crc_ok(std::span<const uint8_t> frame);

/// Rate-1/3 parallel-concatenated convolutional encoder with a quadratic
/// permutation interleaver and per-encoder trellis termination. Output is the
/// three 772-bit streams concatenated (systematic stream first).
BitVec turbo_encode(std::span<const uint8_t> info_bits);

/// The quadratic permutation used between the constituent encoders.
const std::vector<int>& turbo_interleaver();

/// Fill the 7200-bit channel budget from the coded block via sub-block
/// interleaving and a circular buffer.
BitVec rate_match(std::span<const uint8_t> coded);

/// Invert the circular buffer: map hard channel bits to saturated soft values
/// and accumulate the repeats of each coded position. Output order matches
/// turbo_encode's output.
std::vector<double> rate_dematch(std::span<const uint8_t> channel_bits);

struct TurboDecodeResult {
    bool ok = false;
    std::array<uint8_t, kFrameBytes> frame{};
    uint32_t crc_residual = 0;  // residual over all 96 bytes; 0 iff ok
    int iterations = 0;
};

/// Iterative max-log decoding of 7200 hard channel bits, at most 8 passes
/// with early exit once the frame checks clean.
TurboDecodeResult turbo_decode(std::span<const uint8_t> channel_bits);

Bytes bits_to_bytes(std::span<const uint8_t> bits);
BitVec bytes_to_bits(std::span<const uint8_t> bytes);

}  // namespace droneid
