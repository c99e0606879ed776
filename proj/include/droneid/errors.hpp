#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace droneid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File contents do not match the declared sample or frame format.
struct MalformedFileError : Error {
    using Error::Error;
};

// Input is shorter than the operation requires.
struct InsufficientDataError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

// Byte-level frame violates the frame format.
struct MalformedFrameError : Error {
    using Error::Error;
};

// 802.11 frame is valid but not a beacon.
struct NotABeaconError : Error {
    using Error::Error;
};

// Frame carries a type tag this decoder does not know.
struct UnsupportedPacketError : Error {
    UnsupportedPacketError(const std::string& msg, std::vector<uint8_t> frame)
        : Error(msg), raw(std::move(frame)) {}
    std::vector<uint8_t> raw;
};

}  // namespace droneid
