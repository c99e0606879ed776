#include "droneid/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "droneid/dsp.hpp"
#include "droneid/errors.hpp"
#include "droneid/fec.hpp"
#include "droneid/map_scramble.hpp"
#include "droneid/refsig.hpp"

namespace droneid {

namespace {

// Noise power is defined against the in-band share of the signal: the burst
// occupies 600 of 1024 bins, so white noise of total power P contributes
// P * 600/1024 inside the occupied band.
constexpr double kInbandFraction =
    static_cast<double>(kNumDataCarriers) / static_cast<double>(kFftSize);

void add_noise(std::vector<cplx>& samples, double snr_db, double signal_power,
               std::mt19937_64& rng) {
    const double snr = std::pow(10.0, snr_db / 10.0);
    const double noise_power = signal_power / (snr * kInbandFraction);
    std::normal_distribution<double> gauss(0.0, std::sqrt(noise_power / 2.0));
    for (cplx& s : samples) s += cplx(gauss(rng), gauss(rng));
}

void apply_cfo(std::vector<cplx>& samples, double cfo_hz, double sample_rate) {
    if (cfo_hz == 0.0) return;
    const double w = 2.0 * std::numbers::pi * cfo_hz / sample_rate;
    for (size_t k = 0; k < samples.size(); ++k)
        samples[k] *= cplx(std::cos(w * static_cast<double>(k)),
                           std::sin(w * static_cast<double>(k)));
}

double mean_power(std::span<const cplx> samples) {
    double p = 0.0;
    for (const cplx& s : samples) p += std::norm(s);
    return samples.empty() ? 0.0 : p / static_cast<double>(samples.size());
}

}  // namespace

std::vector<cplx> modulate_frame(std::span<const uint8_t> frame) {
    if (frame.size() != static_cast<size_t>(kFrameBytes))
        throw InvalidArgumentError("frame must be 96 bytes");
    if (!frame_crc_ok(frame)) throw InvalidArgumentError("frame check bytes are wrong");

    const BitVec coded = turbo_encode(bytes_to_bits(frame));
    const BitVec channel = rate_match(coded);
    const BitVec plane = scramble(channel);

    const auto& carriers = data_carrier_indices();
    std::vector<cplx> burst;
    burst.reserve(kBurstLength);
    for (int s = 0; s < kNumSymbols; ++s) {
        std::vector<cplx> spectrum(kFftSize, cplx(0.0, 0.0));
        if (s == kPilotRowA || s == kPilotRowB) {
            spectrum = zc_spectrum(s == kPilotRowA ? kZcRootA : kZcRootB);
        } else {
            const std::vector<cplx> symbols = qpsk_mod(
                {plane.data() + static_cast<size_t>(s) * kBitsPerSymbol,
                 static_cast<size_t>(kBitsPerSymbol)});
            for (int i = 0; i < kNumDataCarriers; ++i) spectrum[carriers[i]] = symbols[i];
        }
        const std::vector<cplx> body = dft_1024(fft_shift(spectrum), FftDirection::Inverse);
        const int prefix = kPrefixSchedule[s];
        burst.insert(burst.end(), body.end() - prefix, body.end());
        burst.insert(burst.end(), body.begin(), body.end());
    }
    return burst;
}

IqBuffer build_burst(std::span<const uint8_t> frame, const Impairments& imp) {
    if (imp.amplitude <= 0.0) throw InvalidArgumentError("amplitude must be positive");
    if (imp.pad_samples < 0) throw InvalidArgumentError("padding must be non-negative");

    const std::vector<cplx> burst = modulate_frame(frame);
    IqBuffer iq;
    iq.samples.assign(static_cast<size_t>(imp.pad_samples) * 2 + burst.size(), cplx(0.0, 0.0));
    for (size_t k = 0; k < burst.size(); ++k)
        iq.samples[static_cast<size_t>(imp.pad_samples) + k] = burst[k] * imp.amplitude;

    const double signal_power = mean_power(burst) * imp.amplitude * imp.amplitude;
    apply_cfo(iq.samples, imp.cfo_hz, iq.sample_rate);
    if (imp.snr_db) {
        std::mt19937_64 rng(imp.seed);
        add_noise(iq.samples, *imp.snr_db, signal_power, rng);
    }
    return iq;
}

IqBuffer build_capture(const std::vector<std::pair<Bytes, int64_t>>& bursts,
                       const Impairments& imp, int64_t length) {
    if (imp.amplitude <= 0.0) throw InvalidArgumentError("amplitude must be positive");
    std::vector<int64_t> offsets;
    for (const auto& [frame, off] : bursts) {
        if (off < 0) throw InvalidArgumentError("burst offset must be non-negative");
        offsets.push_back(off);
    }
    std::sort(offsets.begin(), offsets.end());
    for (size_t i = 1; i < offsets.size(); ++i)
        if (offsets[i] - offsets[i - 1] < kBurstLength)
            throw InvalidArgumentError("bursts overlap");

    int64_t total = length;
    if (total == 0) {
        for (int64_t off : offsets) total = std::max(total, off + kBurstLength);
        total += imp.pad_samples;
    }

    IqBuffer iq;
    iq.samples.assign(static_cast<size_t>(total), cplx(0.0, 0.0));
    double signal_power = 0.0;
    for (const auto& [frame, off] : bursts) {
        if (off + kBurstLength > total) throw InvalidArgumentError("burst runs past the capture");
        const std::vector<cplx> burst = modulate_frame(frame);
        signal_power = mean_power(burst) * imp.amplitude * imp.amplitude;
        for (size_t k = 0; k < burst.size(); ++k)
            iq.samples[static_cast<size_t>(off) + k] = burst[k] * imp.amplitude;
    }

    apply_cfo(iq.samples, imp.cfo_hz, iq.sample_rate);
    if (imp.snr_db) {
        std::mt19937_64 rng(imp.seed);
        if (bursts.empty()) {
            // Pure noise floor: unit reference power.
            signal_power = 1.0;
        }
        add_noise(iq.samples, *imp.snr_db, signal_power, rng);
    }
    return iq;
}

}  // namespace droneid
