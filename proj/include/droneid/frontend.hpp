#pragma once

#include <array>
#include <span>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

inline constexpr int kFilterTaps = 51;

struct FirFilter {
    std::array<double, kFilterTaps> taps{};
};

struct CfoEstimate {
    double radians_per_sample = 0.0;
    bool reliable = true;  // false when the estimation windows carry no energy
};

/// 51-tap Hamming-windowed sinc low-pass, cutoff 10 MHz / 15.36 MHz in
/// Nyquist units, normalized to unity DC gain.
FirFilter design_lowpass();

/// Causal direct-form convolution with zero initial state; output has the
/// same length as the input.
std::vector<cplx> apply_filter(const FirFilter& f, std::span<const cplx> burst);

/// Coarse carrier offset from the cyclic prefix of the second symbol and its
/// copy at the symbol tail, one FFT length later.
CfoEstimate estimate_cfo(std::span<const cplx> burst);

/// Rotate sample k by exp(-j * offset * (k + 1)).
std::vector<cplx> correct_cfo(std::span<const cplx> burst, const CfoEstimate& est);

/// Crystal-oscillator error in parts per million from a measured correction
/// factor. Valid inputs lie in (0.9, 1.1).
double ppm_from_correction(double crystal_correction);

}  // namespace droneid
