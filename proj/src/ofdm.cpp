#include "droneid/ofdm.hpp"

#include <cmath>

#include "droneid/errors.hpp"
#include "droneid/refsig.hpp"

namespace droneid {

// TODO: support 8-symbol bursts (first row dropped) once an alignment rule
// for the shortened prefix schedule is fixed.
SymbolGrid extract_symbols(std::span<const cplx> burst) {
    if (burst.size() < static_cast<size_t>(kBurstLength))
        throw InsufficientDataError("burst shorter than one full symbol set");
    SymbolGrid grid;
    grid.time_domain.resize(static_cast<size_t>(kNumSymbols) * kFftSize);
    grid.freq_domain.resize(static_cast<size_t>(kNumSymbols) * kFftSize);
    size_t cursor = 0;
    for (int s = 0; s < kNumSymbols; ++s) {
        cursor += kPrefixSchedule[s];
        auto* time = grid.time_domain.data() + static_cast<size_t>(s) * kFftSize;
        std::copy(burst.begin() + static_cast<ptrdiff_t>(cursor),
                  burst.begin() + static_cast<ptrdiff_t>(cursor + kFftSize), time);
        const std::vector<cplx> spec =
            fft_shift(dft_1024({time, static_cast<size_t>(kFftSize)}, FftDirection::Forward));
        std::copy(spec.begin(), spec.end(),
                  grid.freq_domain.begin() + static_cast<ptrdiff_t>(s) * kFftSize);
        cursor += kFftSize;
    }
    return grid;
}

ChannelEstimate estimate_channel(const SymbolGrid& grid) {
    static const std::vector<cplx> ref_a = zc_spectrum(kZcRootA);
    static const std::vector<cplx> ref_b = zc_spectrum(kZcRootB);
    const auto& carriers = data_carrier_indices();
    const auto row_a = grid.freq_row(kPilotRowA);
    const auto row_b = grid.freq_row(kPilotRowB);

    ChannelEstimate ch;
    ch.est.resize(kNumDataCarriers);
    double angle_sum = 0.0;
    for (int i = 0; i < kNumDataCarriers; ++i) {
        const int k = carriers[i];
        cplx c1(0.0, 0.0);
        cplx c2(0.0, 0.0);
        if (row_a[k] != cplx(0.0, 0.0)) {
            c1 = ref_a[k] / row_a[k];
        } else {
            ch.low_quality = true;
        }
        if (row_b[k] != cplx(0.0, 0.0)) {
            c2 = ref_b[k] / row_b[k];
        } else {
            ch.low_quality = true;
        }
        ch.est[i] = c1;
        angle_sum += std::arg(c1) + std::arg(c2);
    }
    ch.phase_offset = angle_sum / (2.0 * kNumDataCarriers);
    return ch;
}

std::vector<cplx> equalize(const SymbolGrid& grid, const ChannelEstimate& ch, int symbol_index) {
    if (symbol_index < 0 || symbol_index >= kNumSymbols)
        throw InvalidArgumentError("symbol index out of range");
    const auto& carriers = data_carrier_indices();
    const auto row = grid.freq_row(symbol_index);
    const double phase = ch.phase_offset * static_cast<double>(symbol_index - 4);
    const cplx rot(std::cos(phase), std::sin(phase));
    std::vector<cplx> out(kNumDataCarriers);
    for (int i = 0; i < kNumDataCarriers; ++i) out[i] = row[carriers[i]] * ch.est[i] * rot;
    return out;
}

}  // namespace droneid
