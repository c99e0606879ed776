#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "droneid/common.hpp"

namespace droneid {

// Frame type tags. The 16-bit tags are stored little-endian after the
// leading length byte; the license tag is a single byte.
inline constexpr uint8_t kTagLicense = 0x11;
inline constexpr uint16_t kTagFlightV1 = 0x1001;
inline constexpr uint16_t kTagFlightV2 = 0x1002;

// Value of the leading length byte written by the serializer (frame size
// minus the length byte itself and the type tag).
inline constexpr uint8_t kDefaultLengthByte = 94;

struct LicenseFrame {
    uint8_t packet_length = kDefaultLengthByte;
    std::string serial;        // up to 16 chars
    std::string license_text;  // up to 32 chars
    std::string flight_plan;   // up to 43 chars
};

struct FlightInfoV1 {
    uint8_t packet_length = kDefaultLengthByte;
    uint8_t sequence_num = 0;
    uint16_t state_info = 0;
    std::string serial;  // up to 16 chars
    double drone_longitude = 0.0;
    double drone_latitude = 0.0;
    int16_t altitude = 0;  // raw units
    double height = 0.0;   // metres
    double x_speed = 0.0;  // m/s
    double y_speed = 0.0;
    double z_speed = 0.0;
    double pitch = 0.0;  // degrees
    double roll = 0.0;
    double yaw = 0.0;  // degrees in [0, 360)
    double home_longitude = 0.0;
    double home_latitude = 0.0;
    uint8_t model_id = 0;
    std::string uuid;  // 18 chars
    bool plausible_coords = true;
};

struct FlightInfoV2 {
    uint8_t packet_length = kDefaultLengthByte;
    uint8_t sequence_num = 0;
    uint16_t state_info = 0;
    std::string serial;
    double drone_longitude = 0.0;
    double drone_latitude = 0.0;
    int16_t altitude = 0;
    double height = 0.0;
    double x_speed = 0.0;
    double y_speed = 0.0;
    double z_speed = 0.0;
    double yaw = 0.0;
    uint64_t pilot_gps_clock = 0;  // milliseconds since epoch
    double pilot_latitude = 0.0;
    double pilot_longitude = 0.0;
    double home_longitude = 0.0;
    double home_latitude = 0.0;
    uint8_t model_id = 0;
    std::string uuid;  // up to 25 chars
    bool plausible_coords = true;
};

using DroneIdFrame = std::variant<LicenseFrame, FlightInfoV1, FlightInfoV2>;

using DetectionRecord = nlohmann::ordered_json;

// --- field codecs -----------------------------------------------------------

/// degrees = raw * 180 / (pi * 1e7)
double decode_coordinate(int32_t raw);
int32_t encode_coordinate(double degrees);

/// m/s = raw / 100
double decode_speed(int16_t raw);
int16_t encode_speed(double mps);

/// metres = raw / 10
double decode_height(int16_t raw);
int16_t encode_height(double metres);

/// Published aerodynamic-angle conversion, branch for branch:
/// 0 -> 0; negative -> angle + 180; (0, 180) -> angle mod 180;
/// otherwise -> angle + 180.
double angle_to_quantity(double angle);

/// Display heading: raw / 100 + 180, normalized into [0, 360).
double decode_yaw(int16_t raw);
int16_t encode_yaw(double degrees);

/// raw / 100 degrees, signed (pitch and roll).
double decode_angle(int16_t raw);
int16_t encode_angle(double degrees);

/// Milliseconds since epoch; identity on the integer.
uint64_t decode_gps_clock(uint64_t raw);
/// Seconds with millisecond fraction, as rendered in records.
double gps_clock_seconds(uint64_t ms);

// --- frame codec -------------------------------------------------------------

/// Parse a 96-byte frame. The CRC is assumed to have been verified upstream.
/// Throws MalformedFrameError on a bad size and UnsupportedPacketError
/// (carrying the raw bytes) on an unknown type tag.
DroneIdFrame parse_frame(std::span<const uint8_t> frame);

/// Serialize to the fixed 96-byte layout and seal the CRC.
/// Throws InvalidArgumentError when a string field exceeds its capacity.
Bytes serialize_frame(const DroneIdFrame& frame);

// --- model tables -------------------------------------------------------------

struct ModelMatch {
    std::string model;
    std::string prefix;
};

/// Match the first three serial characters against the known prefixes.
std::optional<ModelMatch> model_lookup(const std::string& serial);

/// Model name for a product-type identifier.
std::optional<std::string> aeroscope_model(int id);

struct ModelEntry {
    std::string model;
    std::vector<std::string> prefixes;
    int aeroscope_id;
};

/// The full model table (for exhaustive checks and documentation dumps).
const std::vector<ModelEntry>& model_table();

// --- record projection ---------------------------------------------------------

/// JSON projection with the fixed detection-record key set. Fields a frame
/// type does not carry are null. source_type names the receive path.
DetectionRecord to_detection_record(const DroneIdFrame& frame, const std::string& source_type);

/// Build a frame from a JSON description using the detection-record key set;
/// every field is optional. packet_type accepts "License", "DroneID v1",
/// "DroneID v2" or the short forms "license", "v1", "v2".
DroneIdFrame frame_from_json(const nlohmann::json& spec);

}  // namespace droneid
