#include "droneid/dsp.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "droneid/errors.hpp"

namespace droneid {

namespace {

// Iterative in-place radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse.
void fft_pow2(std::vector<cplx>& a, double sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

std::vector<cplx> dft(std::span<const cplx> x, FftDirection dir) {
    if (x.empty() || !std::has_single_bit(x.size()))
        throw InvalidArgumentError("transform length must be a power of two");
    std::vector<cplx> a(x.begin(), x.end());
    if (dir == FftDirection::Forward) {
        fft_pow2(a, -1.0);
    } else {
        fft_pow2(a, +1.0);
        const double scale = 1.0 / static_cast<double>(a.size());
        for (cplx& v : a) v *= scale;
    }
    return a;
}

std::vector<cplx> dft_1024(std::span<const cplx> x, FftDirection dir) {
    if (x.size() != static_cast<size_t>(kFftSize))
        throw InvalidArgumentError("dft_1024 requires exactly 1024 samples");
    return dft(x, dir);
}

std::vector<cplx> fft_shift(std::span<const cplx> x) {
    const size_t n = x.size();
    std::vector<cplx> out(n);
    const size_t half = (n + 1) / 2;
    for (size_t i = 0; i < n; ++i) out[i] = x[(i + half) % n];
    return out;
}

const std::vector<int>& data_carrier_indices() {
    static const std::vector<int> idx = [] {
        std::vector<int> v;
        v.reserve(kNumDataCarriers);
        for (int i = kCarrierFirst; i < kCarrierLast; ++i)
            if (i != kDcBin) v.push_back(i);
        return v;
    }();
    return idx;
}

}  // namespace droneid
