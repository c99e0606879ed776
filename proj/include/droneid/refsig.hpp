#pragma once

#include <vector>

#include "droneid/common.hpp"

namespace droneid {

struct ZcSequence {
    int root = 0;
    std::vector<cplx> values;  // 600 unit-magnitude values
};

struct GoldSequence {
    BitVec bits;  // 7200 values in {0,1}
};

/// 600-value pilot sequence: seq[n] = exp(-j*pi*root*n*(n+1)/601) for
/// n = 0..600 with the middle sample removed.
ZcSequence zadoff_chu(int root);

/// Full 601-sample sequence before the middle sample is removed. This is the
/// form with the perfect cyclic autocorrelation.
std::vector<cplx> zadoff_chu_full(int root);

/// Pilot symbol in the time domain: the 600 values on the data carriers of a
/// zeroed 1024-bin spectrum, centre-shifted, inverse transformed.
std::vector<cplx> zc_time_domain(int root);

/// Centre-shifted 1024-bin reference spectrum of the pilot (ZC values on the
/// data carriers, zero elsewhere).
std::vector<cplx> zc_spectrum(int root);

/// Scrambling stream: XOR of two length-31 LFSRs clocked past a 1600-sample
/// warm-up, second register seeded with 0x12345678 (LSB first).
GoldSequence gold_sequence();

}  // namespace droneid
