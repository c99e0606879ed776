#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "droneid/errors.hpp"
#include "droneid/frames.hpp"
#include "droneid/frontend.hpp"
#include "droneid/iq_io.hpp"
#include "droneid/pipeline.hpp"
#include "droneid/synth.hpp"
#include "droneid/wifi_beacon.hpp"

using json = nlohmann::json;
using namespace droneid;

namespace {

constexpr int kExitDetected = 0;
constexpr int kExitNothing = 1;
constexpr int kExitError = 2;

Bytes parse_hex(const std::string& text) {
    Bytes out;
    int hi = -1;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw InvalidArgumentError(std::string("not a hex digit: ") + c);
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<uint8_t>(hi << 4 | v));
            hi = -1;
        }
    }
    if (hi >= 0) throw InvalidArgumentError("odd number of hex digits");
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MalformedFileError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Single writer for the detection log; lines are appended whole.
class JsonlLog {
  public:
    explicit JsonlLog(const std::string& path) {
        if (path.empty()) return;
        out_.open(path, std::ios::app);
        if (!out_) throw MalformedFileError("cannot open log " + path);
    }
    void append(const std::string& line) {
        if (out_.is_open()) {
            out_ << line << '\n';
            out_.flush();
        }
    }

  private:
    std::ofstream out_;
};

int run_detect(const std::string& input, const std::string& format_name, double threshold,
               double sample_rate, std::optional<double> center_freq,
               const std::string& log_path) {
    const auto format = parse_sample_format(format_name);
    if (!format) throw InvalidArgumentError("format must be cs8 or fc32");
    IqBuffer iq = read_iq_file(input, *format);
    iq.sample_rate = sample_rate;
    iq.center_freq = center_freq;

    JsonlLog log(log_path);
    int emitted = 0;
    for (const DecodedBurst& d : process_capture(iq, threshold)) {
        if (!d.fec.ok) {
            std::fprintf(stderr, "burst @%lld: integrity check failed (residual 0x%06x)\n",
                         static_cast<long long>(d.start_index), d.fec.crc_residual);
            continue;
        }
        if (!d.frame) {
            std::fprintf(stderr, "burst @%lld: %s\n", static_cast<long long>(d.start_index),
                         d.frame_error ? d.frame_error->c_str() : "deframing failed");
            continue;
        }
        const std::string line = to_detection_record(*d.frame, kSourceOcuSync).dump();
        std::cout << line << '\n';
        log.append(line);
        ++emitted;
    }
    return emitted > 0 ? kExitDetected : kExitNothing;
}

int run_synth(const std::string& frame_path, const std::string& out_path,
              const std::string& format_name, const Impairments& imp, int repeat, int64_t gap) {
    const json spec = json::parse(read_text_file(frame_path));
    const Bytes frame = serialize_frame(frame_from_json(spec));

    std::string fmt = format_name;
    if (fmt.empty()) fmt = out_path;
    const auto format = parse_sample_format(fmt);
    if (!format) throw InvalidArgumentError("output format must be cs8 or fc32");

    IqBuffer iq;
    if (repeat <= 1) {
        iq = build_burst(frame, imp);
    } else {
        if (gap < kBurstLength) throw InvalidArgumentError("gap shorter than one burst");
        std::vector<std::pair<Bytes, int64_t>> bursts;
        for (int k = 0; k < repeat; ++k) bursts.emplace_back(frame, imp.pad_samples + k * gap);
        iq = build_capture(bursts, imp);
    }
    write_iq_file(out_path, iq, *format);
    return kExitDetected;
}

int run_wifi(const std::string& pcap_path, const std::string& log_path) {
    JsonlLog log(log_path);
    int emitted = 0;
    int index = 0;
    for (const CapturePacket& pkt : read_pcap(pcap_path)) {
        ++index;
        BeaconFrame beacon;
        try {
            beacon = parse_beacon(pkt.data);
        } catch (const Error&) {
            continue;  // not a beacon, or truncated
        }
        const auto payload = extract_droneid(beacon);
        if (!payload) continue;
        if (payload->payload.size() != static_cast<size_t>(kFrameBytes) ||
            !frame_crc_ok(payload->payload)) {
            std::fprintf(stderr, "packet %d: identification payload failed validation\n", index);
            continue;
        }
        try {
            const DroneIdFrame frame = parse_frame(payload->payload);
            const std::string line = to_detection_record(frame, kSourceWifi).dump();
            std::cout << line << '\n';
            log.append(line);
            ++emitted;
        } catch (const Error& e) {
            std::fprintf(stderr, "packet %d: %s\n", index, e.what());
        }
    }
    return emitted > 0 ? kExitDetected : kExitNothing;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OcuSync drone-id codec and detection toolkit"};
    app.require_subcommand(1);

    std::string in_path, format, log_path;
    double threshold = kDefaultDetectThreshold;
    double sample_rate = kDefaultSampleRate;
    std::optional<double> center_freq;
    auto* detect = app.add_subcommand("detect", "decode drone ids from an IQ capture file");
    detect->add_option("--input", in_path, "capture file")->required();
    detect->add_option("--format", format, "cs8 or fc32")->envname("DRONEID_FORMAT")->required();
    detect->add_option("--threshold", threshold, "correlation threshold in (0,1)")
        ->envname("DRONEID_THRESHOLD");
    detect->add_option("--sample-rate", sample_rate, "samples per second")
        ->envname("DRONEID_SAMPLE_RATE");
    detect->add_option("--center-freq", center_freq, "capture centre frequency in Hz");
    detect->add_option("--log", log_path, "append records to this JSONL file")
        ->envname("DRONEID_LOG");

    std::string frame_path, out_path, out_format;
    Impairments imp;
    imp.amplitude = 700.0;  // headroom for 8-bit output
    imp.pad_samples = 2000;
    std::optional<double> snr_db;
    int repeat = 1;
    int64_t gap = 50000;
    auto* synth = app.add_subcommand("synth", "write a capture containing synthesized bursts");
    synth->add_option("--frame", frame_path, "frame description JSON")->required();
    synth->add_option("--out", out_path, "output capture file")->required();
    synth->add_option("--format", out_format, "cs8 or fc32 (default: from the extension)");
    synth->add_option("--cfo", imp.cfo_hz, "carrier offset in Hz");
    synth->add_option("--snr", snr_db, "signal to noise ratio in dB (default: noiseless)");
    synth->add_option("--amplitude", imp.amplitude, "linear burst amplitude");
    synth->add_option("--pad", imp.pad_samples, "padding samples around the burst");
    synth->add_option("--seed", imp.seed, "noise seed");
    synth->add_option("--repeat", repeat, "number of bursts");
    synth->add_option("--gap", gap, "spacing between burst starts in samples");

    std::string hex_path;
    std::string source_type = kSourceOcuSync;
    auto* parse = app.add_subcommand("parse", "deframe a hex frame dump");
    parse->add_option("--hex", hex_path, "file containing the frame as hex text")->required();
    parse->add_option("--source-type", source_type, "source tag for the record");

    std::string serial;
    auto* lookup = app.add_subcommand("lookup", "predict the model from a serial number");
    lookup->add_option("serial", serial, "drone serial number")->required();

    std::string band;
    auto* hopplan = app.add_subcommand("hopplan", "print scan frequencies for a band");
    hopplan->add_option("band", band, "2.4 or 5.8")->required();

    double correction = 1.0;
    auto* ppm = app.add_subcommand("ppm", "crystal error from a measured correction factor");
    ppm->add_option("correction", correction, "crystal correction factor")->required();

    std::string pcap_path, wifi_log;
    auto* wifi = app.add_subcommand("wifi", "extract drone ids from beacon frames in a capture");
    wifi->add_option("--pcap", pcap_path, "packet capture file")->required();
    wifi->add_option("--log", wifi_log, "append records to this JSONL file")
        ->envname("DRONEID_LOG");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect)
            return run_detect(in_path, format, threshold, sample_rate, center_freq, log_path);
        if (*synth) {
            imp.snr_db = snr_db;
            return run_synth(frame_path, out_path, out_format, imp, repeat, gap);
        }
        if (*parse) {
            const Bytes bytes = parse_hex(read_text_file(hex_path));
            if (bytes.size() != static_cast<size_t>(kFrameBytes))
                throw MalformedFrameError("frame hex must decode to 96 bytes");
            if (!frame_crc_ok(bytes))
                std::fprintf(stderr, "warning: frame check bytes do not verify\n");
            std::cout << to_detection_record(parse_frame(bytes), source_type).dump() << '\n';
            return kExitDetected;
        }
        if (*lookup) {
            const auto hit = model_lookup(serial);
            nlohmann::ordered_json out;
            out["serial_num"] = serial;
            out["prefix"] = hit ? json(hit->prefix) : json(nullptr);
            out["model"] = hit ? json(hit->model) : json(nullptr);
            std::cout << out.dump() << '\n';
            return kExitDetected;
        }
        if (*hopplan) {
            std::cout << json(hop_plan(band)).dump() << '\n';
            return kExitDetected;
        }
        if (*ppm) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", ppm_from_correction(correction));
            std::cout << buf << '\n';
            return kExitDetected;
        }
        if (*wifi) return run_wifi(pcap_path, wifi_log);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
