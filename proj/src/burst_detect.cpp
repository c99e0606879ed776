#include "droneid/burst_detect.hpp"

#include <algorithm>
#include <cmath>

#include "droneid/dsp.hpp"
#include "droneid/errors.hpp"
#include "droneid/refsig.hpp"

namespace droneid {

namespace {

// Overlap-save block size for the FFT correlator.
constexpr size_t kCorrBlock = 16384;

// Cross-correlation numerator r[t] = sum_n conj(tmpl[n]) * x[t+n] for every
// full window position, computed blockwise in the frequency domain.
std::vector<cplx> xcorr_numerator(std::span<const cplx> x, std::span<const cplx> tmpl) {
    const size_t n = x.size();
    const size_t m = tmpl.size();
    const size_t num_out = n - m + 1;

    std::vector<cplx> padded(kCorrBlock, cplx(0.0, 0.0));
    std::copy(tmpl.begin(), tmpl.end(), padded.begin());
    std::vector<cplx> tmpl_spec = dft(padded, FftDirection::Forward);

    std::vector<cplx> out(num_out);
    const size_t step = kCorrBlock - m + 1;
    std::vector<cplx> block(kCorrBlock);
    for (size_t base = 0; base < num_out; base += step) {
        const size_t avail = std::min(kCorrBlock, n - base);
        std::copy(x.begin() + static_cast<ptrdiff_t>(base),
                  x.begin() + static_cast<ptrdiff_t>(base + avail), block.begin());
        std::fill(block.begin() + static_cast<ptrdiff_t>(avail), block.end(), cplx(0.0, 0.0));
        std::vector<cplx> spec = dft(block, FftDirection::Forward);
        for (size_t k = 0; k < kCorrBlock; ++k) spec[k] *= std::conj(tmpl_spec[k]);
        std::vector<cplx> corr = dft(spec, FftDirection::Inverse);
        const size_t take = std::min(step, num_out - base);
        std::copy(corr.begin(), corr.begin() + static_cast<ptrdiff_t>(take),
                  out.begin() + static_cast<ptrdiff_t>(base));
    }
    return out;
}

}  // namespace

std::vector<double> correlate(const IqBuffer& iq, std::span<const cplx> tmpl) {
    const size_t n = iq.samples.size();
    const size_t m = tmpl.size();
    if (m == 0) throw InvalidArgumentError("empty correlation template");
    if (n < m) throw InsufficientDataError("capture shorter than the correlation template");

    double tmpl_energy = 0.0;
    for (const cplx& v : tmpl) tmpl_energy += std::norm(v);

    // Sliding window energies via a prefix sum of |x|^2.
    std::vector<double> prefix(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + std::norm(iq.samples[i]);

    const std::vector<cplx> num = xcorr_numerator(iq.samples, tmpl);
    std::vector<double> scores(num.size());
    for (size_t t = 0; t < num.size(); ++t) {
        const double win_energy = prefix[t + m] - prefix[t];
        const double den = win_energy * tmpl_energy;
        scores[t] = den > 0.0 ? std::clamp(std::norm(num[t]) / den, 0.0, 1.0) : 0.0;
    }
    return scores;
}

std::vector<Burst> detect_bursts(const IqBuffer& iq, double threshold) {
    if (threshold <= 0.0 || threshold >= 1.0)
        throw InvalidArgumentError("detection threshold must lie in (0, 1)");

    std::vector<Burst> bursts;
    if (iq.samples.size() < static_cast<size_t>(kFftSize)) return bursts;

    static const std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    const std::vector<double> scores = correlate(iq, tmpl);

    // Local maxima at or above the threshold, strongest first.
    std::vector<size_t> candidates;
    for (size_t t = 0; t < scores.size(); ++t) {
        if (scores[t] < threshold) continue;
        if (t > 0 && scores[t - 1] > scores[t]) continue;
        if (t + 1 < scores.size() && scores[t + 1] > scores[t]) continue;
        candidates.push_back(t);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](size_t a, size_t b) { return scores[a] > scores[b]; });

    std::vector<int64_t> accepted;
    for (size_t peak : candidates) {
        const auto p = static_cast<int64_t>(peak);
        const bool clashes = std::any_of(accepted.begin(), accepted.end(), [&](int64_t q) {
            return std::llabs(p - q) < kBurstLength;
        });
        if (clashes) continue;
        accepted.push_back(p);
        const int64_t start = p - kPilotPeakOffset;
        if (start < 0 || start + kBurstLength > static_cast<int64_t>(iq.samples.size()))
            continue;
        Burst b;
        b.start_index = start;
        b.score = scores[peak];
        b.samples.assign(iq.samples.begin() + start, iq.samples.begin() + start + kBurstLength);
        bursts.push_back(std::move(b));
    }
    std::sort(bursts.begin(), bursts.end(),
              [](const Burst& a, const Burst& b) { return a.start_index < b.start_index; });
    return bursts;
}

}  // namespace droneid
