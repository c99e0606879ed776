#include "droneid/frontend.hpp"

#include <cmath>
#include <numbers>

#include "droneid/errors.hpp"

namespace droneid {

namespace {

constexpr double kFilterBandwidth = 10e6;

// First cyclic prefix of the second symbol and its tail-of-symbol copy.
constexpr int kCpStart = 1104;
constexpr int kCpCopyStart = 2128;
constexpr int kCpLen = 72;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

}  // namespace

FirFilter design_lowpass() {
    FirFilter f;
    const double cutoff = kFilterBandwidth / kDefaultSampleRate;  // Nyquist units
    const int mid = (kFilterTaps - 1) / 2;
    double sum = 0.0;
    for (int k = 0; k <= mid; ++k) {
        const double window =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * k / (kFilterTaps - 1));
        const double tap = cutoff * sinc(cutoff * (k - mid)) * window;
        f.taps[k] = tap;
        f.taps[kFilterTaps - 1 - k] = tap;  // linear phase by construction
        sum += k == mid ? tap : 2.0 * tap;
    }
    for (double& t : f.taps) t /= sum;
    return f;
}

std::vector<cplx> apply_filter(const FirFilter& f, std::span<const cplx> burst) {
    std::vector<cplx> out(burst.size(), cplx(0.0, 0.0));
    for (size_t n = 0; n < burst.size(); ++n) {
        cplx acc(0.0, 0.0);
        const int kmax = static_cast<int>(std::min<size_t>(kFilterTaps - 1, n));
        for (int k = 0; k <= kmax; ++k) acc += f.taps[k] * burst[n - k];
        out[n] = acc;
    }
    return out;
}

CfoEstimate estimate_cfo(std::span<const cplx> burst) {
    if (burst.size() < static_cast<size_t>(kCpCopyStart + kCpLen))
        throw InsufficientDataError("burst too short for coarse offset estimation");
    cplx acc(0.0, 0.0);
    double energy = 0.0;
    for (int i = 0; i < kCpLen; ++i) {
        acc += std::conj(burst[kCpStart + i]) * burst[kCpCopyStart + i];
        energy += std::norm(burst[kCpStart + i]) + std::norm(burst[kCpCopyStart + i]);
    }
    CfoEstimate est;
    if (energy == 0.0) {
        est.radians_per_sample = 0.0;
        est.reliable = false;
        return est;
    }
    est.radians_per_sample = std::arg(acc) / static_cast<double>(kFftSize);
    return est;
}

std::vector<cplx> correct_cfo(std::span<const cplx> burst, const CfoEstimate& est) {
    std::vector<cplx> out(burst.size());
    if (est.radians_per_sample == 0.0) {
        std::copy(burst.begin(), burst.end(), out.begin());
        return out;
    }
    for (size_t k = 0; k < burst.size(); ++k) {
        const double phase = -est.radians_per_sample * static_cast<double>(k + 1);
        out[k] = burst[k] * cplx(std::cos(phase), std::sin(phase));
    }
    return out;
}

double ppm_from_correction(double crystal_correction) {
    if (!(crystal_correction > 0.9 && crystal_correction < 1.1))
        throw InvalidArgumentError("crystal correction must lie in (0.9, 1.1)");
    return 1e6 * (1.0 - crystal_correction);
}

}  // namespace droneid
