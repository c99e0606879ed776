#include "droneid/pipeline.hpp"

#include "droneid/errors.hpp"
#include "droneid/frontend.hpp"
#include "droneid/ofdm.hpp"

namespace droneid {

BitPlane demodulate_burst(std::span<const cplx> burst) {
    if (burst.size() != static_cast<size_t>(kBurstLength))
        throw InsufficientDataError("burst must be 9880 samples");

    // Estimate the carrier offset on the raw slice: the prefix windows are
    // exact copies there, while a causal filter would smear its startup
    // transient into the first window.
    const CfoEstimate cfo = estimate_cfo(burst);
    const std::vector<cplx> corrected = correct_cfo(burst, cfo);

    static const FirFilter lowpass = design_lowpass();
    const std::vector<cplx> filtered = apply_filter(lowpass, corrected);

    const SymbolGrid grid = extract_symbols(filtered);
    const ChannelEstimate ch = estimate_channel(grid);

    BitPlane plane;
    plane.demod_bits.reserve(static_cast<size_t>(kNumSymbols) * kBitsPerSymbol);
    for (int s = 0; s < kNumSymbols; ++s) {
        const std::vector<cplx> carriers = equalize(grid, ch, s);
        const BitVec bits = qpsk_demod(carriers);
        plane.demod_bits.insert(plane.demod_bits.end(), bits.begin(), bits.end());
    }
    plane.payload_bits = descramble(plane.demod_bits);
    return plane;
}

DecodedBurst decode_burst(const Burst& burst) {
    DecodedBurst out;
    out.start_index = burst.start_index;
    out.score = burst.score;
    const BitPlane plane = demodulate_burst(burst.samples);
    out.fec = turbo_decode(plane.payload_bits);
    if (!out.fec.ok) return out;
    try {
        out.frame = parse_frame(out.fec.frame);
    } catch (const Error& e) {
        out.frame_error = e.what();
    }
    return out;
}

std::vector<DecodedBurst> process_capture(const IqBuffer& iq, double threshold) {
    std::vector<DecodedBurst> out;
    for (const Burst& b : detect_bursts(iq, threshold)) out.push_back(decode_burst(b));
    return out;
}

std::vector<double> hop_plan(const std::string& band) {
    constexpr double kStep = 15e6;
    if (band == "2.4") {
        std::vector<double> plan(6);
        for (int i = 0; i < 6; ++i) plan[i] = 2399.5e6 + kStep * i;
        return plan;
    }
    if (band == "5.8") {
        std::vector<double> plan(7);
        for (int i = 0; i < 7; ++i) plan[i] = 5741.5e6 + kStep * i;
        return plan;
    }
    throw InvalidArgumentError("band must be 2.4 or 5.8");
}

}  // namespace droneid
