#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "droneid/burst_detect.hpp"
#include "droneid/dsp.hpp"
#include "droneid/errors.hpp"
#include "droneid/fec.hpp"
#include "droneid/frames.hpp"
#include "droneid/frontend.hpp"
#include "droneid/iq_io.hpp"
#include "droneid/map_scramble.hpp"
#include "droneid/ofdm.hpp"
#include "droneid/pipeline.hpp"
#include "droneid/refsig.hpp"
#include "droneid/synth.hpp"
#include "droneid/wifi_beacon.hpp"

namespace py = pybind11;
using namespace droneid;

namespace {

std::vector<cplx> to_samples(const py::array_t<std::complex<double>>& arr) {
    const auto buf = arr.request();
    const auto* data = static_cast<const std::complex<double>*>(buf.ptr);
    return {data, data + buf.size};
}

py::array_t<std::complex<double>> from_samples(const std::vector<cplx>& v) {
    py::array_t<std::complex<double>> arr(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), static_cast<std::complex<double>*>(arr.request().ptr));
    return arr;
}

Bytes to_bytes(const py::bytes& b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

py::bytes from_bytes(std::span<const uint8_t> b) {
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
    const std::string text =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return nlohmann::json::parse(text);
}

Impairments impairments_from_kwargs(double cfo_hz, std::optional<double> snr_db,
                                    double amplitude, int64_t pad_samples, uint64_t seed) {
    Impairments imp;
    imp.cfo_hz = cfo_hz;
    imp.snr_db = snr_db;
    imp.amplitude = amplitude;
    imp.pad_samples = pad_samples;
    imp.seed = seed;
    return imp;
}

py::dict decoded_to_dict(const DecodedBurst& d) {
    py::dict out;
    out["start_index"] = d.start_index;
    out["score"] = d.score;
    out["crc_ok"] = d.fec.ok;
    out["iterations"] = d.fec.iterations;
    out["crc_residual"] = d.fec.crc_residual;
    if (d.fec.ok) out["frame_bytes"] = from_bytes(d.fec.frame);
    if (d.frame)
        out["record"] = json_to_py(to_detection_record(*d.frame, kSourceOcuSync));
    else if (d.frame_error)
        out["frame_error"] = *d.frame_error;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "OcuSync drone-id codec and detection toolkit";

    py::register_exception<Error>(m, "DroneIdError", PyExc_ValueError);

    m.attr("SAMPLE_RATE") = kDefaultSampleRate;
    m.attr("BURST_LENGTH") = kBurstLength;
    m.attr("FRAME_BYTES") = kFrameBytes;
    m.attr("DEFAULT_THRESHOLD") = kDefaultDetectThreshold;

    // sample formats
    m.def("read_cs8", [](const py::bytes& b) { return from_samples(read_cs8(to_bytes(b)).samples); },
          py::arg("data"), "Unpack interleaved signed 8-bit I/Q bytes.");
    m.def("write_cs8", [](const py::array_t<std::complex<double>>& samples) {
              IqBuffer iq;
              iq.samples = to_samples(samples);
              return from_bytes(write_cs8(iq));
          },
          py::arg("samples"));
    m.def("read_fc32",
          [](const py::bytes& b) { return from_samples(read_fc32(to_bytes(b)).samples); },
          py::arg("data"), "Unpack interleaved little-endian float32 I/Q bytes.");
    m.def("write_fc32", [](const py::array_t<std::complex<double>>& samples) {
              IqBuffer iq;
              iq.samples = to_samples(samples);
              return from_bytes(write_fc32(iq));
          },
          py::arg("samples"));

    // reference sequences
    m.def("zadoff_chu", [](int root) { return from_samples(zadoff_chu(root).values); },
          py::arg("root"), "600-value pilot sequence for a root index.");
    m.def("zc_time_domain", [](int root) { return from_samples(zc_time_domain(root)); },
          py::arg("root"));
    m.def("gold_sequence", [] {
        const GoldSequence g = gold_sequence();
        py::array_t<uint8_t> arr(static_cast<py::ssize_t>(g.bits.size()));
        std::copy(g.bits.begin(), g.bits.end(), static_cast<uint8_t*>(arr.request().ptr));
        return arr;
    });

    // front end
    m.def("design_lowpass", [] {
        const FirFilter f = design_lowpass();
        return std::vector<double>(f.taps.begin(), f.taps.end());
    });
    m.def("estimate_cfo", [](const py::array_t<std::complex<double>>& burst) {
              const CfoEstimate est = estimate_cfo(to_samples(burst));
              return py::make_tuple(est.radians_per_sample, est.reliable);
          },
          py::arg("burst"), "Returns (radians_per_sample, reliable).");
    m.def("ppm_from_correction", &ppm_from_correction, py::arg("crystal_correction"));

    // detection and decoding
    m.def("correlate",
          [](const py::array_t<std::complex<double>>& capture,
             const py::array_t<std::complex<double>>& tmpl) {
              IqBuffer iq;
              iq.samples = to_samples(capture);
              return correlate(iq, to_samples(tmpl));
          },
          py::arg("capture"), py::arg("template"));
    m.def("detect_bursts",
          [](const py::array_t<std::complex<double>>& capture, double threshold) {
              IqBuffer iq;
              iq.samples = to_samples(capture);
              py::list out;
              for (const Burst& b : detect_bursts(iq, threshold)) {
                  py::dict d;
                  d["start_index"] = b.start_index;
                  d["score"] = b.score;
                  d["samples"] = from_samples(b.samples);
                  out.append(d);
              }
              return out;
          },
          py::arg("capture"), py::arg("threshold") = kDefaultDetectThreshold);
    m.def("decode_capture",
          [](const py::array_t<std::complex<double>>& capture, double threshold) {
              IqBuffer iq;
              iq.samples = to_samples(capture);
              py::list out;
              for (const DecodedBurst& d : process_capture(iq, threshold))
                  out.append(decoded_to_dict(d));
              return out;
          },
          py::arg("capture"), py::arg("threshold") = kDefaultDetectThreshold,
          "Detect and decode every burst; returns one dict per burst.");

    // forward error correction
    m.def("crc24", [](const py::bytes& data) { return crc24(to_bytes(data)); }, py::arg("data"));
    m.def("seal_frame", [](const py::bytes& frame) {
              Bytes f = to_bytes(frame);
              seal_frame_crc(f);
              return from_bytes(f);
          },
          py::arg("frame"), "Write the check bytes of a 96-byte frame.");
    m.def("turbo_encode", [](const py::bytes& frame) {
              return turbo_encode(bytes_to_bits(to_bytes(frame)));
          },
          py::arg("frame"), "Encode a sealed 96-byte frame into 2316 coded bits.");
    m.def("rate_match", [](const BitVec& coded) { return rate_match(coded); }, py::arg("coded"));
    m.def("turbo_decode", [](const BitVec& channel_bits) {
              const TurboDecodeResult res = turbo_decode(channel_bits);
              py::dict out;
              out["ok"] = res.ok;
              out["crc_residual"] = res.crc_residual;
              out["iterations"] = res.iterations;
              if (res.ok) out["frame"] = from_bytes(res.frame);
              return out;
          },
          py::arg("channel_bits"), "Decode 7200 hard channel bits.");

    // frames
    m.def("parse_frame",
          [](const py::bytes& frame, const std::string& source_type) {
              return json_to_py(
                  to_detection_record(parse_frame(to_bytes(frame)), source_type));
          },
          py::arg("frame"), py::arg("source_type") = kSourceOcuSync,
          "Parse a decoded 96-byte frame into a detection record dict.");
    m.def("build_frame",
          [](const py::object& description) {
              return from_bytes(serialize_frame(frame_from_json(py_to_json(description))));
          },
          py::arg("description"),
          "Serialize a frame description dict into sealed frame bytes.");
    m.def("model_lookup", [](const std::string& serial) -> py::object {
              const auto hit = model_lookup(serial);
              if (!hit) return py::none();
              return py::make_tuple(hit->model, hit->prefix);
          },
          py::arg("serial"));
    m.def("aeroscope_model", [](int id) -> py::object {
              const auto hit = aeroscope_model(id);
              if (!hit) return py::none();
              return py::str(*hit);
          },
          py::arg("model_id"));

    // synthesis
    m.def("build_burst",
          [](const py::bytes& frame, double cfo_hz, std::optional<double> snr_db,
             double amplitude, int64_t pad_samples, uint64_t seed) {
              const Impairments imp =
                  impairments_from_kwargs(cfo_hz, snr_db, amplitude, pad_samples, seed);
              return from_samples(build_burst(to_bytes(frame), imp).samples);
          },
          py::arg("frame"), py::arg("cfo_hz") = 0.0, py::arg("snr_db") = py::none(),
          py::arg("amplitude") = 1.0, py::arg("pad_samples") = 0, py::arg("seed") = 0x5eed,
          "Full transmit chain for a sealed 96-byte frame.");

    // beacon handling
    m.def("build_beacon",
          [](const py::bytes& payload, const py::bytes& sender, const std::string& ssid) {
              const Bytes mac = to_bytes(sender);
              if (mac.size() != 6) throw InvalidArgumentError("sender must be 6 bytes");
              MacAddress addr{};
              std::copy(mac.begin(), mac.end(), addr.begin());
              return from_bytes(build_beacon(to_bytes(payload), addr, ssid));
          },
          py::arg("payload"), py::arg("sender") = py::bytes("\x60\x60\x1f\x00\x00\x01", 6),
          py::arg("ssid") = "droneid");
    m.def("extract_droneid", [](const py::bytes& frame) -> py::object {
              const auto payload = extract_droneid(parse_beacon(to_bytes(frame)));
              if (!payload) return py::none();
              return from_bytes(payload->payload);
          },
          py::arg("frame"), "Identification payload of a raw beacon frame, if present.");
    m.def("classify_vendor", [](const py::bytes& frame) -> py::object {
              const auto vendor = classify_vendor(parse_beacon(to_bytes(frame)));
              if (!vendor) return py::none();
              return py::str(vendor_name(*vendor));
          },
          py::arg("frame"));

    m.def("hop_plan", &hop_plan, py::arg("band"), "Scan frequencies in Hz for 2.4 or 5.8.");
}
