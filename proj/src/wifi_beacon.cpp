#include "droneid/wifi_beacon.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "droneid/errors.hpp"

namespace droneid {

namespace {

constexpr size_t kMacHeaderLen = 24;
constexpr size_t kFixedParamsLen = 12;  // timestamp + interval + capability
constexpr size_t kMinBeaconLen = kMacHeaderLen + kFixedParamsLen;

constexpr uint32_t kPcapMagic = 0xA1B2C3D4;
constexpr uint32_t kPcapMagicSwapped = 0xD4C3B2A1;
constexpr uint32_t kPcapMagicNano = 0xA1B23C4D;
constexpr uint32_t kLinkIeee80211 = 105;
constexpr uint32_t kLinkRadiotap = 127;

const MacAddress kDjiOuis[] = {{0x60, 0x60, 0x1F}, {0x34, 0xD2, 0x62}, {0x48, 0x1C, 0xB9}};
const MacAddress kParrotOuis[] = {
    {0x00, 0x12, 0x1C}, {0x90, 0x03, 0xB7}, {0xA0, 0x14, 0x3D}, {0x00, 0x26, 0x7E}};

MacAddress read_mac(std::span<const uint8_t> b, size_t off) {
    MacAddress m;
    std::copy_n(b.begin() + static_cast<ptrdiff_t>(off), 6, m.begin());
    return m;
}

uint32_t read_u32le(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint32_t read_u32be(const uint8_t* p) {
    return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
           (static_cast<uint32_t>(p[2]) << 8) | static_cast<uint32_t>(p[3]);
}

void push_u32le(Bytes& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xFF));
}

void push_u16le(Bytes& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

}  // namespace

BeaconFrame parse_beacon(std::span<const uint8_t> raw) {
    if (raw.size() < kMinBeaconLen)
        throw MalformedFrameError("frame shorter than a beacon header");

    BeaconFrame frame;
    frame.type = (raw[0] >> 2) & 0x3;
    frame.subtype = (raw[0] >> 4) & 0xF;
    if (frame.type != 0 || frame.subtype != 8)
        throw NotABeaconError("frame control is not management/beacon");

    frame.device = read_mac(raw, 4);
    frame.sender = read_mac(raw, 10);
    frame.bssid = read_mac(raw, 16);

    size_t off = kMinBeaconLen;
    while (off < raw.size()) {
        if (off + 2 > raw.size()) throw MalformedFrameError("truncated information element");
        const uint8_t tag = raw[off];
        const uint8_t len = raw[off + 1];
        off += 2;
        if (off + len > raw.size())
            throw MalformedFrameError("information element overruns the frame");
        InformationElement ie;
        ie.tag = tag;
        ie.value.assign(raw.begin() + static_cast<ptrdiff_t>(off),
                        raw.begin() + static_cast<ptrdiff_t>(off + len));
        frame.elements.push_back(std::move(ie));
        off += len;
    }
    return frame;
}

std::optional<WifiDroneIdPayload> extract_droneid(const BeaconFrame& frame) {
    for (const InformationElement& ie : frame.elements) {
        if (ie.tag != kVendorIeTag) continue;
        if (ie.value.size() < kDroneIdMagic.size()) continue;
        if (!std::equal(kDroneIdMagic.begin(), kDroneIdMagic.end(), ie.value.begin())) continue;
        WifiDroneIdPayload p;
        p.payload.assign(ie.value.begin() + kDroneIdMagic.size(), ie.value.end());
        return p;
    }
    return std::nullopt;
}

std::optional<DroneVendor> classify_vendor(const BeaconFrame& frame) {
    const auto oui_matches = [&](const MacAddress& oui) {
        return std::equal(oui.begin(), oui.begin() + 3, frame.sender.begin());
    };
    for (const MacAddress& oui : kDjiOuis)
        if (oui_matches(oui)) return DroneVendor::Dji;
    for (const MacAddress& oui : kParrotOuis)
        if (oui_matches(oui)) return DroneVendor::Parrot;
    return std::nullopt;
}

const char* vendor_name(DroneVendor v) {
    return v == DroneVendor::Dji ? "DJI" : "Parrot";
}

Bytes build_beacon(std::span<const uint8_t> payload, const MacAddress& sender,
                   const std::string& ssid) {
    if (payload.size() > kMaxDroneIdPayload)
        throw InvalidArgumentError("payload exceeds the vendor IE capacity");
    if (ssid.size() > 32) throw InvalidArgumentError("ssid exceeds 32 bytes");

    Bytes out;
    out.reserve(kMinBeaconLen + 2 + ssid.size() + 2 + 6 + payload.size());
    out.push_back(0x80);  // management / beacon
    out.push_back(0x00);
    push_u16le(out, 0);  // duration
    for (int i = 0; i < 6; ++i) out.push_back(0xFF);  // broadcast device address
    out.insert(out.end(), sender.begin(), sender.end());
    out.insert(out.end(), sender.begin(), sender.end());  // BSSID = sender
    push_u16le(out, 0);                                   // sequence control
    for (int i = 0; i < 8; ++i) out.push_back(0x00);      // timestamp
    push_u16le(out, 100);                                 // beacon interval
    push_u16le(out, 0x0401);                              // capability

    out.push_back(0x00);  // SSID IE
    out.push_back(static_cast<uint8_t>(ssid.size()));
    out.insert(out.end(), ssid.begin(), ssid.end());

    out.push_back(kVendorIeTag);
    out.push_back(static_cast<uint8_t>(payload.size() + kDroneIdMagic.size()));
    out.insert(out.end(), kDroneIdMagic.begin(), kDroneIdMagic.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::vector<CapturePacket> parse_pcap(std::span<const uint8_t> bytes) {
    if (bytes.size() < 24) throw MalformedFileError("capture file too short");
    const uint32_t magic = read_u32le(bytes.data());
    bool swapped = false;
    if (magic == kPcapMagicSwapped) {
        swapped = true;
    } else if (magic != kPcapMagic && magic != kPcapMagicNano) {
        throw MalformedFileError("not a classic capture file");
    }
    const auto read_u32 = [&](const uint8_t* p) { return swapped ? read_u32be(p) : read_u32le(p); };

    const uint32_t linktype = read_u32(bytes.data() + 20);
    if (linktype != kLinkIeee80211 && linktype != kLinkRadiotap)
        throw MalformedFileError("unsupported capture link type " + std::to_string(linktype));

    std::vector<CapturePacket> packets;
    size_t off = 24;
    while (off < bytes.size()) {
        if (off + 16 > bytes.size()) throw MalformedFileError("truncated packet header");
        const uint32_t caplen = read_u32(bytes.data() + off + 8);
        off += 16;
        if (off + caplen > bytes.size()) throw MalformedFileError("truncated packet data");
        std::span<const uint8_t> data = bytes.subspan(off, caplen);
        off += caplen;

        if (linktype == kLinkRadiotap) {
            if (data.size() < 4) throw MalformedFileError("truncated radiotap header");
            const size_t rt_len = data[2] | (static_cast<size_t>(data[3]) << 8);
            if (rt_len > data.size()) throw MalformedFileError("radiotap header overruns packet");
            data = data.subspan(rt_len);
        }
        packets.push_back(CapturePacket{Bytes(data.begin(), data.end())});
    }
    return packets;
}

std::vector<CapturePacket> read_pcap(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MalformedFileError("cannot open " + path);
    Bytes bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_pcap(bytes);
}

Bytes build_pcap(const std::vector<Bytes>& frames, bool radiotap) {
    Bytes out;
    push_u32le(out, kPcapMagic);
    push_u16le(out, 2);  // version 2.4
    push_u16le(out, 4);
    push_u32le(out, 0);  // thiszone
    push_u32le(out, 0);  // sigfigs
    push_u32le(out, 65535);
    push_u32le(out, radiotap ? kLinkRadiotap : kLinkIeee80211);

    // Minimal 8-byte radiotap header: version 0, length 8, empty present mask.
    static const uint8_t kRadiotapHeader[8] = {0x00, 0x00, 0x08, 0x00, 0x00, 0x00, 0x00, 0x00};
    for (const Bytes& frame : frames) {
        const size_t len = frame.size() + (radiotap ? sizeof kRadiotapHeader : 0);
        push_u32le(out, 0);  // ts seconds
        push_u32le(out, 0);  // ts microseconds
        push_u32le(out, static_cast<uint32_t>(len));
        push_u32le(out, static_cast<uint32_t>(len));
        if (radiotap) out.insert(out.end(), kRadiotapHeader, kRadiotapHeader + 8);
        out.insert(out.end(), frame.begin(), frame.end());
    }
    return out;
}

void write_pcap(const std::string& path, const std::vector<Bytes>& frames, bool radiotap) {
    const Bytes bytes = build_pcap(frames, radiotap);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw MalformedFileError("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace droneid
