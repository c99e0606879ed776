#include <doctest.h>

#include <random>

#include "droneid/errors.hpp"
#include "droneid/wifi_beacon.hpp"
#include "test_helpers.hpp"

using namespace droneid;

namespace {

const MacAddress kDjiSender = {0x60, 0x60, 0x1F, 0x12, 0x34, 0x56};

}  // namespace

TEST_SUITE("wifi-beacon") {

TEST_CASE("a minimal constructed beacon parses") {
    const Bytes payload = {1, 2, 3};
    const Bytes raw = build_beacon(payload, kDjiSender);
    const BeaconFrame frame = parse_beacon(raw);
    CHECK(frame.type == 0);
    CHECK(frame.subtype == 8);
    CHECK(frame.sender == kDjiSender);
    CHECK(frame.bssid == kDjiSender);
    REQUIRE(frame.elements.size() == 2);
    CHECK(frame.elements[0].tag == 0x00);  // SSID
    CHECK(frame.elements[1].tag == 0xDD);
}

TEST_CASE("probe requests are not beacons") {
    Bytes raw = build_beacon(Bytes{1}, kDjiSender);
    raw[0] = 0x40;  // management / probe request
    CHECK_THROWS_AS(parse_beacon(raw), NotABeaconError);
}

TEST_CASE("an element running past the frame is malformed") {
    Bytes raw = build_beacon(Bytes{1, 2, 3, 4}, kDjiSender);
    raw[raw.size() - 11] = 200;  // vendor IE length byte now overruns
    CHECK_THROWS_AS(parse_beacon(raw), MalformedFrameError);
    CHECK_THROWS_AS(parse_beacon(Bytes(10, 0)), MalformedFrameError);
}

TEST_CASE("vendor element length accounts for the magic prefix") {
    const Bytes payload(76, 0xAB);
    const Bytes raw = build_beacon(payload, kDjiSender);
    const BeaconFrame frame = parse_beacon(raw);
    const InformationElement& ie = frame.elements.back();
    CHECK(ie.tag == 0xDD);
    CHECK(ie.value.size() == 76 + 6);
    const auto extracted = extract_droneid(frame);
    REQUIRE(extracted.has_value());
    CHECK(extracted->payload == payload);
}

TEST_CASE("beacons without a vendor element yield nothing") {
    Bytes raw = build_beacon(Bytes{}, kDjiSender);
    raw.resize(raw.size() - 8);  // drop the vendor IE, keep the SSID
    const BeaconFrame frame = parse_beacon(raw);
    CHECK_FALSE(extract_droneid(frame).has_value());
}

TEST_CASE("a wrong magic yields nothing") {
    Bytes raw = build_beacon(Bytes{9, 9, 9}, kDjiSender);
    raw[raw.size() - 4 - 5] ^= 0xFF;  // corrupt one magic byte
    const BeaconFrame frame = parse_beacon(raw);
    CHECK_FALSE(extract_droneid(frame).has_value());
}

TEST_CASE("payloads round-trip across the full size range") {
    std::mt19937_64 rng(110);
    for (size_t n = 1; n <= kMaxDroneIdPayload; ++n) {
        const Bytes payload = testing::random_bytes(rng, n);
        const auto extracted = extract_droneid(parse_beacon(build_beacon(payload, kDjiSender)));
        REQUIRE(extracted.has_value());
        CHECK(extracted->payload == payload);
    }
    CHECK_THROWS_AS(build_beacon(Bytes(kMaxDroneIdPayload + 1, 0), kDjiSender),
                    InvalidArgumentError);
}

TEST_CASE("vendor attribution by sender OUI") {
    const uint8_t dji[][3] = {{0x60, 0x60, 0x1F}, {0x34, 0xD2, 0x62}, {0x48, 0x1C, 0xB9}};
    const uint8_t parrot[][3] = {
        {0x00, 0x12, 0x1C}, {0x90, 0x03, 0xB7}, {0xA0, 0x14, 0x3D}, {0x00, 0x26, 0x7E}};
    for (const auto& oui : dji) {
        const MacAddress mac = {oui[0], oui[1], oui[2], 0xAA, 0xBB, 0xCC};
        CHECK(classify_vendor(parse_beacon(build_beacon(Bytes{1}, mac))) == DroneVendor::Dji);
    }
    for (const auto& oui : parrot) {
        const MacAddress mac = {oui[0], oui[1], oui[2], 0xAA, 0xBB, 0xCC};
        CHECK(classify_vendor(parse_beacon(build_beacon(Bytes{1}, mac))) == DroneVendor::Parrot);
    }
    const MacAddress other = {0x00, 0x11, 0x22, 0x33, 0x44, 0x55};
    CHECK_FALSE(classify_vendor(parse_beacon(build_beacon(Bytes{1}, other))).has_value());
    CHECK(std::string(vendor_name(DroneVendor::Dji)) == "DJI");
    CHECK(std::string(vendor_name(DroneVendor::Parrot)) == "Parrot");
}

TEST_CASE("classification only reads the first three address bytes") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 20; ++trial) {
        MacAddress mac = {0x48, 0x1C, 0xB9, 0, 0, 0};
        for (int i = 3; i < 6; ++i) mac[i] = static_cast<uint8_t>(rng());
        CHECK(classify_vendor(parse_beacon(build_beacon(Bytes{1}, mac))) == DroneVendor::Dji);
    }
}

TEST_CASE("capture files round-trip with and without radiotap") {
    std::mt19937_64 rng(112);
    std::vector<Bytes> frames;
    for (int i = 0; i < 3; ++i)
        frames.push_back(build_beacon(testing::random_bytes(rng, 20 + i), kDjiSender));

    for (bool radiotap : {false, true}) {
        const Bytes file = build_pcap(frames, radiotap);
        const std::vector<CapturePacket> packets = parse_pcap(file);
        REQUIRE(packets.size() == frames.size());
        for (size_t i = 0; i < frames.size(); ++i) CHECK(packets[i].data == frames[i]);
    }
}

TEST_CASE("non-capture files are rejected") {
    const Bytes garbage(100, 0x42);
    CHECK_THROWS_AS(parse_pcap(garbage), MalformedFileError);
}

}  // TEST_SUITE
