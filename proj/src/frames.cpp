#include "droneid/frames.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <numbers>

#include "droneid/errors.hpp"
#include "droneid/fec.hpp"

namespace droneid {

namespace {

constexpr double kRadPerUnit = 180.0 / (std::numbers::pi * 1e7);

// Byte offsets shared by the flight-info layouts (see FRAME_FORMAT.md).
constexpr size_t kOffLength = 0x00;
constexpr size_t kOffType = 0x01;
constexpr size_t kOffSeq = 0x03;
constexpr size_t kOffState = 0x04;
constexpr size_t kOffSerial = 0x06;
constexpr size_t kSerialLen = 16;
constexpr size_t kOffDroneLon = 0x16;
constexpr size_t kOffDroneLat = 0x1A;
constexpr size_t kOffAltitude = 0x1E;
constexpr size_t kOffHeight = 0x20;
constexpr size_t kOffXSpeed = 0x22;
constexpr size_t kOffYSpeed = 0x24;
constexpr size_t kOffZSpeed = 0x26;
// v1 continues with pitch/roll/yaw, v2 with yaw and the pilot block.
constexpr size_t kV1OffPitch = 0x28;
constexpr size_t kV1OffRoll = 0x2A;
constexpr size_t kV1OffYaw = 0x2C;
constexpr size_t kV1OffHomeLon = 0x2E;
constexpr size_t kV1OffHomeLat = 0x32;
constexpr size_t kV1OffModel = 0x36;
constexpr size_t kV1OffUuid = 0x37;
constexpr size_t kV1UuidLen = 18;
constexpr size_t kV2OffYaw = 0x28;
constexpr size_t kV2OffClock = 0x2A;
constexpr size_t kV2OffPilotLat = 0x32;
constexpr size_t kV2OffPilotLon = 0x36;
constexpr size_t kV2OffHomeLon = 0x3A;
constexpr size_t kV2OffHomeLat = 0x3E;
constexpr size_t kV2OffModel = 0x42;
constexpr size_t kV2OffUuidLen = 0x43;
constexpr size_t kV2OffUuid = 0x44;
constexpr size_t kV2UuidCapacity = 25;
constexpr size_t kLicOffType = 0x01;
constexpr size_t kLicOffSerial = 0x02;
constexpr size_t kLicOffText = 0x12;
constexpr size_t kLicTextLen = 32;
constexpr size_t kLicOffPlan = 0x32;
constexpr size_t kLicPlanLen = 43;
constexpr size_t kContentBytes = kFrameBytes - kFrameCrcBytes;  // 93

uint16_t read_u16(std::span<const uint8_t> b, size_t off) {
    return static_cast<uint16_t>(b[off] | (b[off + 1] << 8));
}

int16_t read_i16(std::span<const uint8_t> b, size_t off) {
    return static_cast<int16_t>(read_u16(b, off));
}

int32_t read_i32(std::span<const uint8_t> b, size_t off) {
    return static_cast<int32_t>(static_cast<uint32_t>(b[off]) |
                                (static_cast<uint32_t>(b[off + 1]) << 8) |
                                (static_cast<uint32_t>(b[off + 2]) << 16) |
                                (static_cast<uint32_t>(b[off + 3]) << 24));
}

uint64_t read_u64(std::span<const uint8_t> b, size_t off) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[off + i];
    return v;
}

void write_u16(std::span<uint8_t> b, size_t off, uint16_t v) {
    b[off] = static_cast<uint8_t>(v & 0xFF);
    b[off + 1] = static_cast<uint8_t>(v >> 8);
}

void write_i16(std::span<uint8_t> b, size_t off, int16_t v) {
    write_u16(b, off, static_cast<uint16_t>(v));
}

void write_i32(std::span<uint8_t> b, size_t off, int32_t v) {
    const auto u = static_cast<uint32_t>(v);
    for (int i = 0; i < 4; ++i) b[off + i] = static_cast<uint8_t>((u >> (8 * i)) & 0xFF);
}

void write_u64(std::span<uint8_t> b, size_t off, uint64_t v) {
    for (int i = 0; i < 8; ++i) b[off + i] = static_cast<uint8_t>((v >> (8 * i)) & 0xFF);
}

std::string read_string(std::span<const uint8_t> b, size_t off, size_t cap) {
    size_t len = cap;
    while (len > 0 && b[off + len - 1] == 0) --len;
    return {reinterpret_cast<const char*>(b.data() + off), len};
}

void write_string(std::span<uint8_t> b, size_t off, size_t cap, const std::string& s,
                  const char* field) {
    if (s.size() > cap)
        throw InvalidArgumentError(std::string(field) + " exceeds " + std::to_string(cap) +
                                   " bytes");
    std::memcpy(b.data() + off, s.data(), s.size());
}

bool coords_plausible(std::initializer_list<std::pair<double, double>> values) {
    for (const auto& [v, limit] : values)
        if (!(std::abs(v) <= limit)) return false;
    return true;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7E)
            c = '.';
    return out;
}

std::string hex_u16(uint16_t v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%04x", v);
    return buf;
}

}  // namespace

double decode_coordinate(int32_t raw) { return static_cast<double>(raw) * kRadPerUnit; }

int32_t encode_coordinate(double degrees) {
    return static_cast<int32_t>(std::llround(degrees / kRadPerUnit));
}

double decode_speed(int16_t raw) { return static_cast<double>(raw) / 100.0; }
int16_t encode_speed(double mps) { return static_cast<int16_t>(std::llround(mps * 100.0)); }

double decode_height(int16_t raw) { return static_cast<double>(raw) / 10.0; }
int16_t encode_height(double metres) { return static_cast<int16_t>(std::llround(metres * 10.0)); }

double angle_to_quantity(double angle) {
    if (angle == 0.0) return 0.0;
    if (angle < 0.0) return angle + 180.0;
    if (angle < 180.0) return std::fmod(angle, 180.0);
    return angle + 180.0;
}

double decode_yaw(int16_t raw) {
    double deg = static_cast<double>(raw) / 100.0 + 180.0;
    deg = std::fmod(deg, 360.0);
    if (deg < 0.0) deg += 360.0;
    return deg;
}

int16_t encode_yaw(double degrees) {
    return static_cast<int16_t>(std::llround((degrees - 180.0) * 100.0));
}

double decode_angle(int16_t raw) { return static_cast<double>(raw) / 100.0; }
int16_t encode_angle(double degrees) { return static_cast<int16_t>(std::llround(degrees * 100.0)); }

uint64_t decode_gps_clock(uint64_t raw) { return raw; }
double gps_clock_seconds(uint64_t ms) { return static_cast<double>(ms) / 1000.0; }

DroneIdFrame parse_frame(std::span<const uint8_t> frame) {
    if (frame.size() != static_cast<size_t>(kFrameBytes))
        throw MalformedFrameError("frame must be exactly 96 bytes");

    if (frame[kLicOffType] == kTagLicense) {
        LicenseFrame lic;
        lic.packet_length = frame[kOffLength];
        lic.serial = read_string(frame, kLicOffSerial, kSerialLen);
        lic.license_text = read_string(frame, kLicOffText, kLicTextLen);
        lic.flight_plan = read_string(frame, kLicOffPlan, kLicPlanLen);
        return lic;
    }

    const uint16_t tag = read_u16(frame, kOffType);
    if (tag == kTagFlightV1) {
        FlightInfoV1 v1;
        v1.packet_length = frame[kOffLength];
        v1.sequence_num = frame[kOffSeq];
        v1.state_info = read_u16(frame, kOffState);
        v1.serial = read_string(frame, kOffSerial, kSerialLen);
        v1.drone_longitude = decode_coordinate(read_i32(frame, kOffDroneLon));
        v1.drone_latitude = decode_coordinate(read_i32(frame, kOffDroneLat));
        v1.altitude = read_i16(frame, kOffAltitude);
        v1.height = decode_height(read_i16(frame, kOffHeight));
        v1.x_speed = decode_speed(read_i16(frame, kOffXSpeed));
        v1.y_speed = decode_speed(read_i16(frame, kOffYSpeed));
        v1.z_speed = decode_speed(read_i16(frame, kOffZSpeed));
        v1.pitch = decode_angle(read_i16(frame, kV1OffPitch));
        v1.roll = decode_angle(read_i16(frame, kV1OffRoll));
        v1.yaw = decode_yaw(read_i16(frame, kV1OffYaw));
        v1.home_longitude = decode_coordinate(read_i32(frame, kV1OffHomeLon));
        v1.home_latitude = decode_coordinate(read_i32(frame, kV1OffHomeLat));
        v1.model_id = frame[kV1OffModel];
        v1.uuid = read_string(frame, kV1OffUuid, kV1UuidLen);
        v1.plausible_coords = coords_plausible({{v1.drone_longitude, 180.0},
                                                {v1.drone_latitude, 90.0},
                                                {v1.home_longitude, 180.0},
                                                {v1.home_latitude, 90.0}});
        return v1;
    }
    if (tag == kTagFlightV2) {
        FlightInfoV2 v2;
        v2.packet_length = frame[kOffLength];
        v2.sequence_num = frame[kOffSeq];
        v2.state_info = read_u16(frame, kOffState);
        v2.serial = read_string(frame, kOffSerial, kSerialLen);
        v2.drone_longitude = decode_coordinate(read_i32(frame, kOffDroneLon));
        v2.drone_latitude = decode_coordinate(read_i32(frame, kOffDroneLat));
        v2.altitude = read_i16(frame, kOffAltitude);
        v2.height = decode_height(read_i16(frame, kOffHeight));
        v2.x_speed = decode_speed(read_i16(frame, kOffXSpeed));
        v2.y_speed = decode_speed(read_i16(frame, kOffYSpeed));
        v2.z_speed = decode_speed(read_i16(frame, kOffZSpeed));
        v2.yaw = decode_yaw(read_i16(frame, kV2OffYaw));
        v2.pilot_gps_clock = read_u64(frame, kV2OffClock);
        v2.pilot_latitude = decode_coordinate(read_i32(frame, kV2OffPilotLat));
        v2.pilot_longitude = decode_coordinate(read_i32(frame, kV2OffPilotLon));
        v2.home_longitude = decode_coordinate(read_i32(frame, kV2OffHomeLon));
        v2.home_latitude = decode_coordinate(read_i32(frame, kV2OffHomeLat));
        v2.model_id = frame[kV2OffModel];
        const size_t uuid_len = std::min<size_t>(frame[kV2OffUuidLen], kV2UuidCapacity);
        v2.uuid = std::string(reinterpret_cast<const char*>(frame.data() + kV2OffUuid), uuid_len);
        v2.plausible_coords = coords_plausible({{v2.drone_longitude, 180.0},
                                                {v2.drone_latitude, 90.0},
                                                {v2.pilot_longitude, 180.0},
                                                {v2.pilot_latitude, 90.0},
                                                {v2.home_longitude, 180.0},
                                                {v2.home_latitude, 90.0}});
        return v2;
    }
    throw UnsupportedPacketError("unknown packet type tag",
                                 std::vector<uint8_t>(frame.begin(), frame.end()));
}

Bytes serialize_frame(const DroneIdFrame& frame) {
    Bytes out(kFrameBytes, 0);
    std::span<uint8_t> b(out);

    if (const auto* lic = std::get_if<LicenseFrame>(&frame)) {
        b[kOffLength] = lic->packet_length;
        b[kLicOffType] = kTagLicense;
        write_string(b, kLicOffSerial, kSerialLen, lic->serial, "serial");
        write_string(b, kLicOffText, kLicTextLen, lic->license_text, "license text");
        write_string(b, kLicOffPlan, kLicPlanLen, lic->flight_plan, "flight plan");
    } else if (const auto* v1 = std::get_if<FlightInfoV1>(&frame)) {
        b[kOffLength] = v1->packet_length;
        write_u16(b, kOffType, kTagFlightV1);
        b[kOffSeq] = v1->sequence_num;
        write_u16(b, kOffState, v1->state_info);
        write_string(b, kOffSerial, kSerialLen, v1->serial, "serial");
        write_i32(b, kOffDroneLon, encode_coordinate(v1->drone_longitude));
        write_i32(b, kOffDroneLat, encode_coordinate(v1->drone_latitude));
        write_i16(b, kOffAltitude, v1->altitude);
        write_i16(b, kOffHeight, encode_height(v1->height));
        write_i16(b, kOffXSpeed, encode_speed(v1->x_speed));
        write_i16(b, kOffYSpeed, encode_speed(v1->y_speed));
        write_i16(b, kOffZSpeed, encode_speed(v1->z_speed));
        write_i16(b, kV1OffPitch, encode_angle(v1->pitch));
        write_i16(b, kV1OffRoll, encode_angle(v1->roll));
        write_i16(b, kV1OffYaw, encode_yaw(v1->yaw));
        write_i32(b, kV1OffHomeLon, encode_coordinate(v1->home_longitude));
        write_i32(b, kV1OffHomeLat, encode_coordinate(v1->home_latitude));
        b[kV1OffModel] = v1->model_id;
        write_string(b, kV1OffUuid, kV1UuidLen, v1->uuid, "uuid");
    } else {
        const auto& v2 = std::get<FlightInfoV2>(frame);
        b[kOffLength] = v2.packet_length;
        write_u16(b, kOffType, kTagFlightV2);
        b[kOffSeq] = v2.sequence_num;
        write_u16(b, kOffState, v2.state_info);
        write_string(b, kOffSerial, kSerialLen, v2.serial, "serial");
        write_i32(b, kOffDroneLon, encode_coordinate(v2.drone_longitude));
        write_i32(b, kOffDroneLat, encode_coordinate(v2.drone_latitude));
        write_i16(b, kOffAltitude, v2.altitude);
        write_i16(b, kOffHeight, encode_height(v2.height));
        write_i16(b, kOffXSpeed, encode_speed(v2.x_speed));
        write_i16(b, kOffYSpeed, encode_speed(v2.y_speed));
        write_i16(b, kOffZSpeed, encode_speed(v2.z_speed));
        write_i16(b, kV2OffYaw, encode_yaw(v2.yaw));
        write_u64(b, kV2OffClock, v2.pilot_gps_clock);
        write_i32(b, kV2OffPilotLat, encode_coordinate(v2.pilot_latitude));
        write_i32(b, kV2OffPilotLon, encode_coordinate(v2.pilot_longitude));
        write_i32(b, kV2OffHomeLon, encode_coordinate(v2.home_longitude));
        write_i32(b, kV2OffHomeLat, encode_coordinate(v2.home_latitude));
        b[kV2OffModel] = v2.model_id;
        if (v2.uuid.size() > kV2UuidCapacity)
            throw InvalidArgumentError("uuid exceeds 25 bytes");
        b[kV2OffUuidLen] = static_cast<uint8_t>(v2.uuid.size());
        write_string(b, kV2OffUuid, kV2UuidCapacity, v2.uuid, "uuid");
    }

    seal_frame_crc(b);
    return out;
}

const std::vector<ModelEntry>& model_table() {
    static const std::vector<ModelEntry> table = {
        {"Inspire 1", {"041", "W21"}, 1},
        {"Phantom 3 Series", {"0JX"}, 2},
        {"Phantom 3 Series Pro", {"P76"}, 3},
        {"Phantom 3 Std", {"03Z", "P5A"}, 4},
        {"M100", {"M02"}, 5},
        {"ACEONE", {}, 6},
        {"WKM", {}, 7},
        {"NAZA", {"061"}, 8},
        {"A2", {}, 9},
        {"A3", {"067"}, 10},
        {"Phantom 4", {"07D", "07J", "0AX", "0HA", "189"}, 11},
        {"MG1", {"05Y"}, 12},
        {"M600", {"M64"}, 14},
        {"Phantom 3 4k", {"P7A"}, 15},
        {"Mavic Pro", {"08Q", "08R"}, 16},
        {"Inspire 2", {"095", "09Y", "0A0"}, 17},
        {"Phantom 4 Pro", {}, 18},
        {"N2", {}, 20},
        {"Spark", {"0AS", "0BM"}, 21},
        {"M600 Pro", {"M80"}, 23},
        {"Mavic Air", {"0K1", "0K4"}, 24},
        {"M200", {"0FZ"}, 25},
        {"Phantom 4 Series", {"CE1"}, 26},
        {"Phantom 4 Adv", {}, 27},
        {"M210", {"0N4"}, 28},
        {"M210RTK", {"17U", "1DA"}, 30},
        {"A3_AG", {}, 31},
        {"MG2", {}, 32},
        {"MG1A", {}, 34},
        {"Phantom 4 RTK", {"0UY", "0V2"}, 35},
        {"Phantom 4 Pro V2.0", {"11U", "11V"}, 36},
        {"MG1P", {"0YS"}, 38},
        {"MG1P-RTK", {"0YL"}, 40},
        {"Mavic 2", {"0M6", "163"}, 41},
        {"M200 V2 Series", {"17S"}, 44},
        {"Mavic 2 Enterprise", {"276", "29Z"}, 51},
        {"Mavic Mini", {"1SC", "1SD", "1SZ", "1WG"}, 53},
        {"Mavic Air 2", {"1WN", "3N3"}, 58},
        {"P4M", {"1UD"}, 59},
        {"M300 RTK", {"1ZN"}, 60},
        {"DJI FPV", {"37Q"}, 61},
        {"Mini 2", {"3NZ", "3Q4", "5DX", "5FS"}, 63},
        {"AGRAS T10", {"IEZ"}, 64},
        {"AGRAS T30", {"35P"}, 65},
        {"Air 2S", {"3YT"}, 66},
        {"M30", {}, 67},
        {"Mavic 3", {"F4Q", "F45"}, 68},
        {"Mavic 2 Enterprise Adv", {"298"}, 69},
        {"Mini SE", {"4AE", "4DT", "4GM"}, 70},
        {"Mini 3 Pro", {}, 73},
        {"YUNEEC H480", {"YU1"}, 240},
    };
    return table;
}

std::optional<ModelMatch> model_lookup(const std::string& serial) {
    static const std::map<std::string, std::string> by_prefix = [] {
        std::map<std::string, std::string> m;
        for (const ModelEntry& e : model_table())
            for (const std::string& p : e.prefixes) m.emplace(p, e.model);
        return m;
    }();
    if (serial.size() < 3) return std::nullopt;
    const std::string prefix = serial.substr(0, 3);
    const auto it = by_prefix.find(prefix);
    if (it == by_prefix.end()) return std::nullopt;
    return ModelMatch{it->second, prefix};
}

std::optional<std::string> aeroscope_model(int id) {
    static const std::map<int, std::string> by_id = [] {
        std::map<int, std::string> m;
        for (const ModelEntry& e : model_table()) m.emplace(e.aeroscope_id, e.model);
        return m;
    }();
    const auto it = by_id.find(id);
    if (it == by_id.end()) return std::nullopt;
    return it->second;
}

DroneIdFrame frame_from_json(const nlohmann::json& spec) {
    const std::string type = spec.value("packet_type", "DroneID v2");
    const auto get_or = [&](const char* key, double fallback) {
        return spec.contains(key) && !spec[key].is_null() ? spec[key].get<double>() : fallback;
    };
    const auto state_of = [](const nlohmann::json& v) -> uint16_t {
        if (v.is_string())
            return static_cast<uint16_t>(std::stoul(v.get<std::string>(), nullptr, 0));
        return v.get<uint16_t>();
    };

    if (type == "License" || type == "license") {
        LicenseFrame lic;
        lic.serial = spec.value("serial_num", "1SC0000000000000");
        lic.license_text = spec.value("license_text", "");
        lic.flight_plan = spec.value("flight_plan", "");
        return lic;
    }

    const auto fill_common = [&](auto& f) {
        f.sequence_num = static_cast<uint8_t>(spec.value("sequence_num", 0));
        if (spec.contains("state_info") && !spec["state_info"].is_null())
            f.state_info = state_of(spec["state_info"]);
        f.serial = spec.value("serial_num", "0M60000000000000");
        f.drone_longitude = get_or("drone_longitude", 0.0);
        f.drone_latitude = get_or("drone_latitude", 0.0);
        f.altitude = static_cast<int16_t>(spec.value("altitude", 0));
        f.height = get_or("height", 0.0);
        f.x_speed = get_or("x_speed", 0.0);
        f.y_speed = get_or("y_speed", 0.0);
        f.z_speed = get_or("z_speed", 0.0);
        f.yaw = get_or("yaw", 180.0);
        f.model_id = static_cast<uint8_t>(spec.value("model_id", 41));
        f.uuid = spec.value("uuid", "");
    };

    if (type == "DroneID v1" || type == "v1") {
        FlightInfoV1 v1;
        fill_common(v1);
        v1.pitch = get_or("pitch", 0.0);
        v1.roll = get_or("roll", 0.0);
        v1.home_longitude = get_or("home_longitude", 0.0);
        v1.home_latitude = get_or("home_latitude", 0.0);
        if (v1.uuid.empty()) v1.uuid = "000000000000000000";
        return v1;
    }
    if (type == "DroneID v2" || type == "v2") {
        FlightInfoV2 v2;
        fill_common(v2);
        if (spec.contains("pilot_gps_clock") && !spec["pilot_gps_clock"].is_null()) {
            if (spec["pilot_gps_clock"].is_number_integer())
                v2.pilot_gps_clock = spec["pilot_gps_clock"].get<uint64_t>();
            else
                v2.pilot_gps_clock =
                    static_cast<uint64_t>(spec["pilot_gps_clock"].get<double>() * 1000.0 + 0.5);
        }
        v2.pilot_longitude = get_or("pilot_longitude", 0.0);
        v2.pilot_latitude = get_or("pilot_latitude", 0.0);
        v2.home_longitude = get_or("home_longitude", 0.0);
        v2.home_latitude = get_or("home_latitude", 0.0);
        return v2;
    }
    throw InvalidArgumentError("packet_type must be License, DroneID v1 or DroneID v2");
}

DetectionRecord to_detection_record(const DroneIdFrame& frame, const std::string& source_type) {
    DetectionRecord r;
    const auto null_v = nullptr;

    if (const auto* lic = std::get_if<LicenseFrame>(&frame)) {
        const auto match = model_lookup(lic->serial);
        r["model"] = match ? DetectionRecord(match->model) : DetectionRecord(null_v);
        r["source_type"] = source_type;
        r["packet_length"] = lic->packet_length;
        r["packet_type"] = "License";
        r["sequence_num"] = null_v;
        r["state_info"] = null_v;
        r["serial_num"] = sanitize(lic->serial);
        for (const char* key : {"drone_longitude", "drone_latitude", "altitude", "height",
                                "x_speed", "y_speed", "z_speed", "total_speed", "yaw",
                                "pilot_gps_clock", "pilot_longitude", "pilot_latitude",
                                "home_longitude", "home_latitude", "uuid_len", "uuid"})
            r[key] = null_v;
        return r;
    }

    const auto fill_common = [&](const auto& f, const char* type_name) {
        const auto model = aeroscope_model(f.model_id);
        r["model"] = model ? DetectionRecord(*model) : DetectionRecord(null_v);
        r["source_type"] = source_type;
        r["packet_length"] = f.packet_length;
        r["packet_type"] = type_name;
        r["sequence_num"] = f.sequence_num;
        r["state_info"] = hex_u16(f.state_info);
        r["serial_num"] = sanitize(f.serial);
        r["drone_longitude"] = f.drone_longitude;
        r["drone_latitude"] = f.drone_latitude;
        r["altitude"] = f.altitude;
        r["height"] = f.height;
        r["x_speed"] = f.x_speed;
        r["y_speed"] = f.y_speed;
        r["z_speed"] = f.z_speed;
        r["total_speed"] =
            std::sqrt(f.x_speed * f.x_speed + f.y_speed * f.y_speed + f.z_speed * f.z_speed);
        r["yaw"] = f.yaw;
    };

    if (const auto* v1 = std::get_if<FlightInfoV1>(&frame)) {
        fill_common(*v1, "DroneID v1");
        r["pilot_gps_clock"] = null_v;
        r["pilot_longitude"] = null_v;
        r["pilot_latitude"] = null_v;
        r["home_longitude"] = v1->home_longitude;
        r["home_latitude"] = v1->home_latitude;
        r["uuid_len"] = v1->uuid.size();
        r["uuid"] = sanitize(v1->uuid);
    } else {
        const auto& v2 = std::get<FlightInfoV2>(frame);
        fill_common(v2, "DroneID v2");
        r["pilot_gps_clock"] = gps_clock_seconds(v2.pilot_gps_clock);
        r["pilot_longitude"] = v2.pilot_longitude;
        r["pilot_latitude"] = v2.pilot_latitude;
        r["home_longitude"] = v2.home_longitude;
        r["home_latitude"] = v2.home_latitude;
        r["uuid_len"] = v2.uuid.size();
        r["uuid"] = sanitize(v2.uuid);
    }
    return r;
}

}  // namespace droneid
