#pragma once

#include <optional>
#include <string>
#include <vector>

#include "droneid/burst_detect.hpp"
#include "droneid/common.hpp"
#include "droneid/fec.hpp"
#include "droneid/frames.hpp"
#include "droneid/map_scramble.hpp"

namespace droneid {

inline constexpr const char* kSourceOcuSync = "OcuSync (SDR)";
inline constexpr const char* kSourceWifi = "Enhanced Wi-Fi";

struct DecodedBurst {
    int64_t start_index = 0;
    double score = 0.0;
    TurboDecodeResult fec;
    std::optional<DroneIdFrame> frame;       // set when fec.ok and the tag is known
    std::optional<std::string> frame_error;  // set when deframing failed
};

/// Condition one sliced burst and demodulate it down to the 7200 descrambled
/// channel bits: coarse offset estimation on the raw slice, offset
/// correction, low-pass filtering, symbol extraction, channel equalization,
/// hard decisions, descrambling.
BitPlane demodulate_burst(std::span<const cplx> burst);

/// Demodulate, decode and deframe one burst.
DecodedBurst decode_burst(const Burst& burst);

/// Detect every burst in a capture and run each through the full receive
/// chain. Entries with fec.ok carry a decoded frame or a deframing error.
std::vector<DecodedBurst> process_capture(const IqBuffer& iq,
                                          double threshold = kDefaultDetectThreshold);

/// Scan hop frequencies in Hz for a band ("2.4" or "5.8" GHz).
std::vector<double> hop_plan(const std::string& band);

}  // namespace droneid
