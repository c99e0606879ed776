#pragma once

#include <span>
#include <utility>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

struct Impairments {
    double cfo_hz = 0.0;
    std::optional<double> snr_db;  // absent = noiseless
    double amplitude = 1.0;
    int64_t pad_samples = 0;
    uint64_t seed = 0x5eedu;
};

/// Clean modulated burst for a sealed 96-byte frame: encode, rate match,
/// scramble, map the data symbols, insert both pilots, prepend the prefix
/// schedule. Exactly kBurstLength samples; no impairments.
std::vector<cplx> modulate_frame(std::span<const uint8_t> frame);

/// Full transmit chain: modulated burst with amplitude, carrier offset,
/// optional channel noise and symmetric zero/noise padding applied.
/// Throws InvalidArgumentError on a malformed frame or bad CRC.
IqBuffer build_burst(std::span<const uint8_t> frame, const Impairments& imp);

/// Place bursts at fixed offsets over a noise floor. Offsets must be
/// separated by at least one burst length. length == 0 sizes the capture to
/// fit the last burst plus padding.
IqBuffer build_capture(const std::vector<std::pair<Bytes, int64_t>>& bursts,
                       const Impairments& imp, int64_t length = 0);

}  // namespace droneid
