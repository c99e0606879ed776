#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace droneid {

using cplx = std::complex<double>;
using Bytes = std::vector<uint8_t>;
using BitVec = std::vector<uint8_t>;  // one bit (0/1) per element

// OFDM numerology shared by the receive and transmit chains.
inline constexpr int kFftSize = 1024;
inline constexpr int kNumSymbols = 9;
inline constexpr int kNumDataCarriers = 600;
inline constexpr int kBitsPerSymbol = 2 * kNumDataCarriers;  // QPSK
inline constexpr int kPayloadBits = 7200;                    // 6 data symbols

// Cyclic prefix schedule: long prefixes bracket the burst.
inline constexpr int kPrefixSchedule[kNumSymbols] = {80, 72, 72, 72, 72, 72, 72, 72, 80};

// (80*2) + (72*7) + (1024*9)
inline constexpr int kBurstLength = 9880;

// Samples from the burst start to the body of the first pilot symbol
// (grid row 3): 80 + 72*3 + 1024*3.
inline constexpr int kPilotPeakOffset = 3368;

// Pilot symbol positions in the 9-row grid and their sequence roots.
inline constexpr int kPilotRowA = 3;
inline constexpr int kPilotRowB = 5;
inline constexpr int kZcRootA = 600;
inline constexpr int kZcRootB = 147;

// Grid rows carrying scrambled data bits, in payload order.
inline constexpr int kDataRows[6] = {1, 2, 4, 6, 7, 8};

inline constexpr double kDefaultSampleRate = 15.36e6;

// Occupied subcarriers in the centre-shifted 1024-bin spectrum:
// [212, 813) with the DC bin (512) skipped.
inline constexpr int kCarrierFirst = 212;
inline constexpr int kCarrierLast = 813;  // exclusive
inline constexpr int kDcBin = 512;

// Data-carrier indices in ascending order; the single shared layout used by
// pilot generation, channel estimation and carrier (de)mapping.
const std::vector<int>& data_carrier_indices();

struct IqBuffer {
    std::vector<cplx> samples;
    double sample_rate = kDefaultSampleRate;
    std::optional<double> center_freq;
};

}  // namespace droneid
