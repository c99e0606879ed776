#include "droneid/map_scramble.hpp"

#include <cmath>

#include "droneid/errors.hpp"
#include "droneid/refsig.hpp"

namespace droneid {

namespace {

const BitVec& gold_bits() {
    static const BitVec bits = gold_sequence().bits;
    return bits;
}

}  // namespace

BitVec qpsk_demod(std::span<const cplx> carriers) {
    BitVec bits;
    bits.reserve(carriers.size() * 2);
    for (const cplx& s : carriers) {
        const double re = s.real();
        const double im = s.imag();
        uint8_t b0 = 0;
        uint8_t b1 = 0;
        if (re > 0.0 && im > 0.0) {
            b0 = 0, b1 = 0;
        } else if (re > 0.0 && im < 0.0) {
            b0 = 0, b1 = 1;
        } else if (re < 0.0 && im > 0.0) {
            b0 = 1, b1 = 0;
        } else if (re < 0.0 && im < 0.0) {
            b0 = 1, b1 = 1;
        }
        bits.push_back(b0);
        bits.push_back(b1);
    }
    return bits;
}

std::vector<cplx> qpsk_mod(std::span<const uint8_t> bits) {
    if (bits.size() % 2 != 0) throw InvalidArgumentError("bit count must be even");
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out(bits.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        const double re = bits[2 * i] ? -a : a;
        const double im = bits[2 * i + 1] ? -a : a;
        out[i] = cplx(re, im);
    }
    return out;
}

BitVec descramble(std::span<const uint8_t> demod_bits) {
    if (demod_bits.size() != static_cast<size_t>(kNumSymbols) * kBitsPerSymbol)
        throw InvalidArgumentError("demodulated plane must be 9 x 1200 bits");
    const BitVec& gold = gold_bits();
    BitVec out(kPayloadBits);
    for (int j = 0; j < 6; ++j) {
        const auto* row = demod_bits.data() + static_cast<size_t>(kDataRows[j]) * kBitsPerSymbol;
        for (int i = 0; i < kBitsPerSymbol; ++i) {
            const int k = j * kBitsPerSymbol + i;
            out[k] = static_cast<uint8_t>(row[i] ^ gold[k]);
        }
    }
    return out;
}

BitVec scramble(std::span<const uint8_t> payload_bits) {
    if (payload_bits.size() != static_cast<size_t>(kPayloadBits))
        throw InvalidArgumentError("payload must be 7200 bits");
    const BitVec& gold = gold_bits();
    BitVec plane(static_cast<size_t>(kNumSymbols) * kBitsPerSymbol, 0);
    for (int j = 0; j < 6; ++j) {
        auto* row = plane.data() + static_cast<size_t>(kDataRows[j]) * kBitsPerSymbol;
        for (int i = 0; i < kBitsPerSymbol; ++i) {
            const int k = j * kBitsPerSymbol + i;
            row[i] = static_cast<uint8_t>(payload_bits[k] ^ gold[k]);
        }
    }
    // Row 0 mirrors row 1; the receiver never uses it.
    std::copy(plane.begin() + kBitsPerSymbol, plane.begin() + 2 * kBitsPerSymbol, plane.begin());
    return plane;
}

}  // namespace droneid
