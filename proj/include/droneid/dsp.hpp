#pragma once

#include <span>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

enum class FftDirection { Forward, Inverse };

/// Radix-2 transform for any power-of-two length. Forward is the plain
/// unnormalized sum; inverse divides by N, so inverse(forward(x)) == x.
std::vector<cplx> dft(std::span<const cplx> x, FftDirection dir);

/// 1024-point transform used throughout the symbol chain.
/// Throws InvalidArgumentError unless x.size() == 1024.
std::vector<cplx> dft_1024(std::span<const cplx> x, FftDirection dir);

/// Swap halves so the DC bin moves between index 0 and the centre.
/// Self-inverse for even lengths.
std::vector<cplx> fft_shift(std::span<const cplx> x);

}  // namespace droneid
