#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "droneid/common.hpp"

namespace droneid {

using MacAddress = std::array<uint8_t, 6>;

struct InformationElement {
    uint8_t tag = 0;
    Bytes value;
};

struct BeaconFrame {
    uint8_t type = 0;     // frame-control type (0 = management)
    uint8_t subtype = 0;  // 8 = beacon
    MacAddress device{};  // addr1
    MacAddress sender{};  // addr2
    MacAddress bssid{};   // addr3
    std::vector<InformationElement> elements;
};

enum class DroneVendor { Dji, Parrot };

struct WifiDroneIdPayload {
    Bytes payload;
};

// Vendor IE preamble carried ahead of the identification payload.
inline constexpr uint8_t kVendorIeTag = 0xDD;
inline constexpr std::array<uint8_t, 6> kDroneIdMagic = {0x26, 0x37, 0x12, 0x58, 0x62, 0x13};
inline constexpr size_t kMaxDroneIdPayload = 243;

/// Parse a raw 802.11 management frame into header fields and its information
/// elements. Throws NotABeaconError for non-beacon frames and
/// MalformedFrameError for truncated input or IE length overruns.
BeaconFrame parse_beacon(std::span<const uint8_t> raw);

/// Payload of the vendor IE that starts with the drone-id magic, if present.
std::optional<WifiDroneIdPayload> extract_droneid(const BeaconFrame& frame);

/// Attribute the frame to a drone vendor by the sender OUI.
std::optional<DroneVendor> classify_vendor(const BeaconFrame& frame);

const char* vendor_name(DroneVendor v);

/// Byte-exact beacon carrying the payload in a magic-prefixed vendor IE.
Bytes build_beacon(std::span<const uint8_t> payload, const MacAddress& sender,
                   const std::string& ssid = "droneid");

// --- packet capture files ----------------------------------------------------

struct CapturePacket {
    Bytes data;  // one 802.11 frame, radiotap already stripped
};

/// Read a classic capture file (802.11 link types, with or without radiotap).
std::vector<CapturePacket> read_pcap(const std::string& path);
std::vector<CapturePacket> parse_pcap(std::span<const uint8_t> bytes);

/// Write frames to a classic capture file (plain 802.11 link type,
/// or radiotap-wrapped when radiotap is true).
Bytes build_pcap(const std::vector<Bytes>& frames, bool radiotap = false);
void write_pcap(const std::string& path, const std::vector<Bytes>& frames,
                bool radiotap = false);

}  // namespace droneid
