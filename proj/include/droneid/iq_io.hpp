#pragma once

#include <span>
#include <string>

#include "droneid/common.hpp"

namespace droneid {

enum class SampleFormat { Cs8, Fc32 };

/// Interleaved signed 8-bit I/Q. Raw integer amplitudes are kept as-is;
/// no rescaling to [-1, 1).
IqBuffer read_cs8(std::span<const uint8_t> bytes);
Bytes write_cs8(const IqBuffer& iq);

/// Interleaved little-endian 32-bit float I/Q.
IqBuffer read_fc32(std::span<const uint8_t> bytes);
Bytes write_fc32(const IqBuffer& iq);

IqBuffer read_iq_file(const std::string& path, SampleFormat format);
void write_iq_file(const std::string& path, const IqBuffer& iq, SampleFormat format);

/// "cs8"/"fc32", or the extension of a file name. Empty optional otherwise.
std::optional<SampleFormat> parse_sample_format(const std::string& name);

}  // namespace droneid
