#include "droneid/refsig.hpp"

#include <cmath>
#include <numbers>

#include "droneid/dsp.hpp"

namespace droneid {

namespace {

constexpr int kZcLen = 601;
constexpr uint32_t kScrambleSeed = 0x12345678u;
constexpr int kWarmup = 1600;

}  // namespace

std::vector<cplx> zadoff_chu_full(int root) {
    std::vector<cplx> seq(kZcLen);
    for (int n = 0; n < kZcLen; ++n) {
        const double phase = -std::numbers::pi * static_cast<double>(root) *
                             static_cast<double>(n) * static_cast<double>(n + 1) /
                             static_cast<double>(kZcLen);
        seq[n] = cplx(std::cos(phase), std::sin(phase));
    }
    return seq;
}

ZcSequence zadoff_chu(int root) {
    ZcSequence zc;
    zc.root = root;
    zc.values = zadoff_chu_full(root);
    zc.values.erase(zc.values.begin() + kZcLen / 2);
    return zc;
}

std::vector<cplx> zc_spectrum(int root) {
    const ZcSequence zc = zadoff_chu(root);
    std::vector<cplx> buffer(kFftSize, cplx(0.0, 0.0));
    const auto& carriers = data_carrier_indices();
    for (int i = 0; i < kNumDataCarriers; ++i) buffer[carriers[i]] = zc.values[i];
    return buffer;
}

std::vector<cplx> zc_time_domain(int root) {
    return dft_1024(fft_shift(zc_spectrum(root)), FftDirection::Inverse);
}

GoldSequence gold_sequence() {
    const int total = kWarmup + kPayloadBits + 31;
    BitVec x1(total, 0);
    BitVec x2(total, 0);
    x1[0] = 1;
    for (int i = 0; i < 31; ++i) x2[i] = static_cast<uint8_t>((kScrambleSeed >> i) & 1u);
    for (int i = 0; i < kWarmup + kPayloadBits; ++i) {
        x1[i + 31] = static_cast<uint8_t>((x1[i + 3] + x1[i]) & 1);
        x2[i + 31] = static_cast<uint8_t>((x2[i + 3] + x2[i + 2] + x2[i + 1] + x2[i]) & 1);
    }
    GoldSequence gold;
    gold.bits.resize(kPayloadBits);
    for (int i = 0; i < kPayloadBits; ++i)
        gold.bits[i] = static_cast<uint8_t>((x1[i + kWarmup] + x2[i + kWarmup]) & 1);
    return gold;
}

}  // namespace droneid
