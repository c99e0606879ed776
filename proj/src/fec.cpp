#include "droneid/fec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "droneid/errors.hpp"

namespace droneid {

namespace {

constexpr uint32_t kCrcPoly = 0x864CFB;
constexpr int kBlockLen = kInfoBits;        // 768
constexpr int kStreamLen = kBlockLen + 4;   // 772
constexpr int kQppF1 = 217;
constexpr int kQppF2 = 48;

constexpr int kSubblockCols = 32;
constexpr int kSubblockRows = (kStreamLen + kSubblockCols - 1) / kSubblockCols;  // 25
constexpr int kSubblockSize = kSubblockRows * kSubblockCols;                     // 800
constexpr int kSubblockPad = kSubblockSize - kStreamLen;                         // 28
constexpr int kBufferLen = 3 * kSubblockSize;                                    // 2400
constexpr int kSelectionStart = 2 * kSubblockRows;                               // 50

constexpr int kColumnPerm[kSubblockCols] = {0, 16, 8,  24, 4,  20, 12, 28, 2,  18, 10,
                                            26, 6, 22, 14, 30, 1,  17, 9,  25, 5,  21,
                                            13, 29, 3, 19, 11, 27, 7,  23, 15, 31};

constexpr double kSatLlr = 8.0;
constexpr int kMaxIterations = 8;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Circular-buffer position -> index into the concatenated coded streams, or
// -1 for padding positions.
const std::array<int, kBufferLen>& buffer_map() {
    static const std::array<int, kBufferLen> map = [] {
        std::array<int, kBufferLen> m{};
        auto stream_index = [](int y_index, int stream) {
            const int d = y_index - kSubblockPad;
            return d < 0 ? -1 : stream * kStreamLen + d;
        };
        for (int k = 0; k < kSubblockSize; ++k) {
            const int col = k / kSubblockRows;
            const int row = k % kSubblockRows;
            // Streams 0 and 1: row-wise fill, column permutation, column read.
            const int y = row * kSubblockCols + kColumnPerm[col];
            m[k] = stream_index(y, 0);
            m[kSubblockSize + 2 * k] = stream_index(y, 1);
            // Stream 2 uses the shifted permutation of the same matrix.
            const int y2 = (kColumnPerm[col] + kSubblockCols * row + 1) % kSubblockSize;
            m[kSubblockSize + 2 * k + 1] = stream_index(y2, 2);
        }
        return m;
    }();
    return map;
}

// Positions read from the circular buffer for each of the 7200 channel bits.
const std::vector<int>& selection_map() {
    static const std::vector<int> sel = [] {
        const auto& map = buffer_map();
        std::vector<int> s;
        s.reserve(kPayloadBits);
        int k = kSelectionStart;
        while (s.size() < static_cast<size_t>(kPayloadBits)) {
            if (map[k % kBufferLen] >= 0) s.push_back(k % kBufferLen);
            ++k;
        }
        return s;
    }();
    return sel;
}

struct Trellis {
    // [state][input] -> next state / parity bit
    uint8_t next[8][2];
    uint8_t parity[8][2];
    uint8_t term_input[8];  // input that drives the feedback to zero

    Trellis() {
        for (int s = 0; s < 8; ++s) {
            const int r1 = (s >> 2) & 1;
            const int r2 = (s >> 1) & 1;
            const int r3 = s & 1;
            for (int u = 0; u < 2; ++u) {
                const int a = u ^ r2 ^ r3;
                parity[s][u] = static_cast<uint8_t>(a ^ r1 ^ r3);
                next[s][u] = static_cast<uint8_t>((a << 2) | (r1 << 1) | r2);
            }
            term_input[s] = static_cast<uint8_t>(r2 ^ r3);
        }
    }
};

const Trellis& trellis() {
    static const Trellis t;
    return t;
}

struct EncoderOutput {
    BitVec parity;  // kBlockLen bits
    uint8_t tail_sys[3];
    uint8_t tail_par[3];
};

EncoderOutput run_constituent(std::span<const uint8_t> input) {
    const Trellis& t = trellis();
    EncoderOutput out;
    out.parity.resize(input.size());
    uint8_t s = 0;
    for (size_t i = 0; i < input.size(); ++i) {
        const uint8_t u = input[i] & 1;
        out.parity[i] = t.parity[s][u];
        s = t.next[s][u];
    }
    for (int i = 0; i < 3; ++i) {
        const uint8_t u = t.term_input[s];
        out.tail_sys[i] = u;
        out.tail_par[i] = t.parity[s][u];
        s = t.next[s][u];
    }
    return out;
}

struct SoftStreams {
    // Systematic and parity LLRs (positive favours bit 0) plus the six tail
    // LLR pairs of each constituent code.
    std::vector<double> sys, par1, par2;
    double tail_sys1[3], tail_par1[3];
    double tail_sys2[3], tail_par2[3];
};

SoftStreams split_streams(std::span<const double> soft) {
    SoftStreams s;
    s.sys.assign(soft.begin(), soft.begin() + kBlockLen);
    s.par1.assign(soft.begin() + kStreamLen, soft.begin() + kStreamLen + kBlockLen);
    s.par2.assign(soft.begin() + 2 * kStreamLen, soft.begin() + 2 * kStreamLen + kBlockLen);
    const double* d0 = soft.data() + kBlockLen;
    const double* d1 = soft.data() + kStreamLen + kBlockLen;
    const double* d2 = soft.data() + 2 * kStreamLen + kBlockLen;
    s.tail_sys1[0] = d0[0]; s.tail_par1[0] = d1[0];
    s.tail_sys1[1] = d2[0]; s.tail_par1[1] = d0[1];
    s.tail_sys1[2] = d1[1]; s.tail_par1[2] = d2[1];
    s.tail_sys2[0] = d0[2]; s.tail_par2[0] = d1[2];
    s.tail_sys2[1] = d2[2]; s.tail_par2[1] = d0[3];
    s.tail_sys2[2] = d1[3]; s.tail_par2[2] = d2[3];
    return s;
}

// One max-log BCJR pass over a constituent code. Returns total posterior
// LLRs; extrinsic = total - sys - prior.
std::vector<double> map_decode(const std::vector<double>& sys, const std::vector<double>& par,
                               const std::vector<double>& prior, const double tail_sys[3],
                               const double tail_par[3]) {
    const Trellis& t = trellis();
    const int n = static_cast<int>(sys.size());

    std::vector<std::array<double, 8>> alpha(n + 1);
    alpha[0].fill(kNegInf);
    alpha[0][0] = 0.0;
    for (int k = 0; k < n; ++k) {
        alpha[k + 1].fill(kNegInf);
        for (int s = 0; s < 8; ++s) {
            const double a = alpha[k][s];
            if (a == kNegInf) continue;
            for (int u = 0; u < 2; ++u) {
                const double us = u ? -1.0 : 1.0;
                const double zs = t.parity[s][u] ? -1.0 : 1.0;
                const double g = 0.5 * us * (sys[k] + prior[k]) + 0.5 * zs * par[k];
                double& dst = alpha[k + 1][t.next[s][u]];
                dst = std::max(dst, a + g);
            }
        }
    }

    // Walk the termination tail backwards to seed beta at the block edge.
    std::array<double, 8> beta_edge;
    beta_edge.fill(kNegInf);
    beta_edge[0] = 0.0;
    for (int m = 2; m >= 0; --m) {
        std::array<double, 8> prev;
        prev.fill(kNegInf);
        for (int s = 0; s < 8; ++s) {
            const uint8_t u = t.term_input[s];
            const double dn = beta_edge[t.next[s][u]];
            if (dn == kNegInf) continue;
            const double us = u ? -1.0 : 1.0;
            const double zs = t.parity[s][u] ? -1.0 : 1.0;
            prev[s] = dn + 0.5 * us * tail_sys[m] + 0.5 * zs * tail_par[m];
        }
        beta_edge = prev;
    }

    std::vector<double> llr(n);
    std::array<double, 8> beta = beta_edge;
    for (int k = n - 1; k >= 0; --k) {
        std::array<double, 8> beta_prev;
        beta_prev.fill(kNegInf);
        double best0 = kNegInf;
        double best1 = kNegInf;
        for (int s = 0; s < 8; ++s) {
            const double a = alpha[k][s];
            for (int u = 0; u < 2; ++u) {
                const double us = u ? -1.0 : 1.0;
                const double zs = t.parity[s][u] ? -1.0 : 1.0;
                const double g = 0.5 * us * (sys[k] + prior[k]) + 0.5 * zs * par[k];
                const double b = beta[t.next[s][u]];
                if (b != kNegInf) {
                    beta_prev[s] = std::max(beta_prev[s], g + b);
                    if (a != kNegInf) {
                        const double metric = a + g + b;
                        if (u == 0)
                            best0 = std::max(best0, metric);
                        else
                            best1 = std::max(best1, metric);
                    }
                }
            }
        }
        llr[k] = best0 - best1;
        beta = beta_prev;
    }
    return llr;
}

}  // namespace

uint32_t crc24(std::span<const uint8_t> data) {
    uint32_t crc = 0;
    for (uint8_t byte : data) {
        crc ^= static_cast<uint32_t>(byte) << 16;
        for (int i = 0; i < 8; ++i) {
            crc <<= 1;
            if (crc & 0x1000000u) crc ^= kCrcPoly;
        }
    }
    return crc & 0xFFFFFFu;
}

void seal_frame_crc(std::span<uint8_t> frame) {
    if (frame.size() != kFrameBytes) throw InvalidArgumentError("frame must be 96 bytes");
    const uint32_t c = crc24(frame.first(kFrameBytes - kFrameCrcBytes));
    frame[kFrameBytes - 3] = static_cast<uint8_t>((c >> 16) & 0xFF);
    frame[kFrameBytes - 2] = static_cast<uint8_t>((c >> 8) & 0xFF);
    frame[kFrameBytes - 1] = static_cast<uint8_t>(c & 0xFF);
}

bool frame_crc_ok(std::span<const uint8_t> frame) {
    return frame.size() == kFrameBytes && crc24(frame) == 0;
}

const std::vector<int>& turbo_interleaver() {
    static const std::vector<int> pi = [] {
        std::vector<int> p(kBlockLen);
        for (int64_t i = 0; i < kBlockLen; ++i)
            p[i] = static_cast<int>((kQppF1 * i + kQppF2 * i * i) % kBlockLen);
        return p;
    }();
    return pi;
}

BitVec turbo_encode(std::span<const uint8_t> info_bits) {
    if (info_bits.size() != static_cast<size_t>(kBlockLen))
        throw InvalidArgumentError("turbo block must be 768 bits");

    const EncoderOutput e1 = run_constituent(info_bits);

    const auto& pi = turbo_interleaver();
    BitVec interleaved(kBlockLen);
    for (int i = 0; i < kBlockLen; ++i) interleaved[i] = info_bits[pi[i]];
    const EncoderOutput e2 = run_constituent(interleaved);

    BitVec out;
    out.reserve(kCodedBits);
    out.insert(out.end(), info_bits.begin(), info_bits.end());
    out.insert(out.end(), {e1.tail_sys[0], e1.tail_par[1], e2.tail_sys[0], e2.tail_par[1]});
    out.insert(out.end(), e1.parity.begin(), e1.parity.end());
    out.insert(out.end(), {e1.tail_par[0], e1.tail_sys[2], e2.tail_par[0], e2.tail_sys[2]});
    out.insert(out.end(), e2.parity.begin(), e2.parity.end());
    out.insert(out.end(), {e1.tail_sys[1], e1.tail_par[2], e2.tail_sys[1], e2.tail_par[2]});
    return out;
}

BitVec rate_match(std::span<const uint8_t> coded) {
    if (coded.size() != static_cast<size_t>(kCodedBits))
        throw InvalidArgumentError("coded block must be 2316 bits");
    const auto& map = buffer_map();
    const auto& sel = selection_map();
    BitVec out(kPayloadBits);
    for (int j = 0; j < kPayloadBits; ++j) out[j] = coded[map[sel[j]]];
    return out;
}

std::vector<double> rate_dematch(std::span<const uint8_t> channel_bits) {
    if (channel_bits.size() != static_cast<size_t>(kPayloadBits))
        throw InvalidArgumentError("channel block must be 7200 bits");
    const auto& map = buffer_map();
    const auto& sel = selection_map();
    std::vector<double> soft(kCodedBits, 0.0);
    for (int j = 0; j < kPayloadBits; ++j)
        soft[map[sel[j]]] += channel_bits[j] ? -kSatLlr : kSatLlr;
    return soft;
}

TurboDecodeResult turbo_decode(std::span<const uint8_t> channel_bits) {
    const std::vector<double> soft = rate_dematch(channel_bits);
    const SoftStreams st = split_streams(soft);
    const auto& pi = turbo_interleaver();

    std::vector<double> sys2(kBlockLen);
    for (int i = 0; i < kBlockLen; ++i) sys2[i] = st.sys[pi[i]];

    TurboDecodeResult res;
    std::vector<double> prior1(kBlockLen, 0.0);
    std::vector<double> prior2(kBlockLen);
    BitVec hard(kBlockLen);
    for (int iter = 1; iter <= kMaxIterations; ++iter) {
        const std::vector<double> l1 =
            map_decode(st.sys, st.par1, prior1, st.tail_sys1, st.tail_par1);
        for (int i = 0; i < kBlockLen; ++i) prior2[i] = l1[pi[i]] - st.sys[pi[i]] - prior1[pi[i]];

        const std::vector<double> l2 =
            map_decode(sys2, st.par2, prior2, st.tail_sys2, st.tail_par2);
        for (int i = 0; i < kBlockLen; ++i) prior1[pi[i]] = l2[i] - sys2[i] - prior2[i];

        for (int i = 0; i < kBlockLen; ++i) hard[pi[i]] = l2[i] >= 0.0 ? 0 : 1;
        const Bytes frame = bits_to_bytes(hard);
        res.iterations = iter;
        res.crc_residual = crc24(frame);
        if (res.crc_residual == 0) {
            res.ok = true;
            std::copy(frame.begin(), frame.end(), res.frame.begin());
            return res;
        }
        std::copy(frame.begin(), frame.end(), res.frame.begin());
    }
    return res;
}

Bytes bits_to_bytes(std::span<const uint8_t> bits) {
    if (bits.size() % 8 != 0) throw InvalidArgumentError("bit count must be a byte multiple");
    Bytes out(bits.size() / 8, 0);
    for (size_t i = 0; i < bits.size(); ++i)
        out[i / 8] = static_cast<uint8_t>(out[i / 8] | ((bits[i] & 1) << (7 - i % 8)));
    return out;
}

BitVec bytes_to_bits(std::span<const uint8_t> bytes) {
    BitVec out(bytes.size() * 8);
    for (size_t i = 0; i < bytes.size(); ++i)
        for (int j = 0; j < 8; ++j) out[i * 8 + j] = (bytes[i] >> (7 - j)) & 1;
    return out;
}

}  // namespace droneid
