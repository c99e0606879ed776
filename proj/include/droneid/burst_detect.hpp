#pragma once

#include <span>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

struct Burst {
    std::vector<cplx> samples;  // kBurstLength samples
    int64_t start_index = 0;    // offset into the source capture
    double score = 0.0;         // normalized correlation peak in [0, 1]
};

inline constexpr double kDefaultDetectThreshold = 0.5;

/// Normalized cross-correlation against a template. Score at offset t is
/// |sum(conj(template) * window)|^2 / (window energy * template energy),
/// scale-invariant in [0, 1]. One score per window position.
/// Throws InsufficientDataError if the capture is shorter than the template.
std::vector<double> correlate(const IqBuffer& iq, std::span<const cplx> tmpl);

/// Find pilot correlation peaks at or above the threshold (greedy suppression
/// of weaker peaks within one burst length) and slice a fixed-length burst
/// backing off from the pilot position. Slices that would run off either end
/// of the capture are discarded. Results are ordered by start index.
std::vector<Burst> detect_bursts(const IqBuffer& iq, double threshold = kDefaultDetectThreshold);

}  // namespace droneid
