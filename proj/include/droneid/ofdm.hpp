#pragma once

#include <array>
#include <span>
#include <vector>

#include "droneid/common.hpp"
#include "droneid/dsp.hpp"

namespace droneid {

struct SymbolGrid {
    // Row-major 9 x 1024; freq rows are centre-shifted forward transforms of
    // the time rows.
    std::vector<cplx> time_domain;
    std::vector<cplx> freq_domain;

    std::span<const cplx> time_row(int r) const {
        return {time_domain.data() + static_cast<size_t>(r) * kFftSize, kFftSize};
    }
    std::span<const cplx> freq_row(int r) const {
        return {freq_domain.data() + static_cast<size_t>(r) * kFftSize, kFftSize};
    }
};

struct ChannelEstimate {
    std::vector<cplx> est;       // 600 per-carrier equalizer weights
    double phase_offset = 0.0;   // average walking phase, radians per symbol
    bool low_quality = false;    // a pilot carrier had zero received energy
};

/// Strip the cyclic prefixes from a full-length burst and transform each of
/// the nine symbol bodies. Throws InsufficientDataError on short input.
SymbolGrid extract_symbols(std::span<const cplx> burst);

/// Per-carrier channel from the two pilot rows: reference spectrum divided by
/// the received spectrum, restricted to the data carriers. Carriers with a
/// zero denominator get weight 0 and mark the estimate low quality.
ChannelEstimate estimate_channel(const SymbolGrid& grid);

/// Equalized data carriers of one symbol: received carriers times the channel
/// weights, rotated by the walking phase anchored midway between the pilots.
std::vector<cplx> equalize(const SymbolGrid& grid, const ChannelEstimate& ch, int symbol_index);

}  // namespace droneid
