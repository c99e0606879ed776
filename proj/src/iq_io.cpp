#include "droneid/iq_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "droneid/errors.hpp"

namespace droneid {

static_assert(std::endian::native == std::endian::little,
              "fc32 codec assumes a little-endian host");

IqBuffer read_cs8(std::span<const uint8_t> bytes) {
    if (bytes.size() % 2 != 0)
        throw MalformedFileError("cs8 data has an odd byte count");
    IqBuffer iq;
    iq.samples.reserve(bytes.size() / 2);
    for (size_t i = 0; i < bytes.size(); i += 2) {
        const auto re = static_cast<int8_t>(bytes[i]);
        const auto im = static_cast<int8_t>(bytes[i + 1]);
        iq.samples.emplace_back(static_cast<double>(re), static_cast<double>(im));
    }
    return iq;
}

namespace {

uint8_t quantize_i8(double v) {
    const double r = std::round(v);
    const double c = std::clamp(r, -128.0, 127.0);
    return static_cast<uint8_t>(static_cast<int8_t>(c));
}

}  // namespace

Bytes write_cs8(const IqBuffer& iq) {
    Bytes out;
    out.reserve(iq.samples.size() * 2);
    for (const cplx& s : iq.samples) {
        out.push_back(quantize_i8(s.real()));
        out.push_back(quantize_i8(s.imag()));
    }
    return out;
}

IqBuffer read_fc32(std::span<const uint8_t> bytes) {
    if (bytes.size() % 8 != 0)
        throw MalformedFileError("fc32 data has a trailing partial sample");
    IqBuffer iq;
    iq.samples.reserve(bytes.size() / 8);
    for (size_t i = 0; i < bytes.size(); i += 8) {
        float re;
        float im;
        std::memcpy(&re, bytes.data() + i, 4);
        std::memcpy(&im, bytes.data() + i + 4, 4);
        iq.samples.emplace_back(static_cast<double>(re), static_cast<double>(im));
    }
    return iq;
}

Bytes write_fc32(const IqBuffer& iq) {
    Bytes out(iq.samples.size() * 8);
    size_t off = 0;
    for (const cplx& s : iq.samples) {
        const float re = static_cast<float>(s.real());
        const float im = static_cast<float>(s.imag());
        std::memcpy(out.data() + off, &re, 4);
        std::memcpy(out.data() + off + 4, &im, 4);
        off += 8;
    }
    return out;
}

IqBuffer read_iq_file(const std::string& path, SampleFormat format) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MalformedFileError("cannot open " + path);
    Bytes bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return format == SampleFormat::Cs8 ? read_cs8(bytes) : read_fc32(bytes);
}

void write_iq_file(const std::string& path, const IqBuffer& iq, SampleFormat format) {
    const Bytes bytes = format == SampleFormat::Cs8 ? write_cs8(iq) : write_fc32(iq);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw MalformedFileError("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw MalformedFileError("short write to " + path);
}

std::optional<SampleFormat> parse_sample_format(const std::string& name) {
    std::string s = name;
    if (const auto dot = s.rfind('.'); dot != std::string::npos && dot + 1 < s.size())
        s = s.substr(dot + 1);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "cs8") return SampleFormat::Cs8;
    if (s == "fc32") return SampleFormat::Fc32;
    return std::nullopt;
}

}  // namespace droneid
