#include <doctest.h>

#include <random>

#include "droneid/burst_detect.hpp"
#include "droneid/errors.hpp"
#include "droneid/refsig.hpp"
#include "droneid/synth.hpp"
#include "test_helpers.hpp"

using namespace droneid;

namespace {

IqBuffer noise_capture(std::mt19937_64& rng, size_t n, double sigma = 1.0) {
    std::normal_distribution<double> gauss(0.0, sigma);
    IqBuffer iq;
    iq.samples.reserve(n);
    for (size_t i = 0; i < n; ++i) iq.samples.emplace_back(gauss(rng), gauss(rng));
    return iq;
}

}  // namespace

TEST_SUITE("burst-detect") {

TEST_CASE("layout constants") {
    CHECK(kPilotPeakOffset == 80 + 72 * 3 + 1024 * 3);
    CHECK(kBurstLength == 80 * 2 + 72 * 7 + 1024 * 9);
}

TEST_CASE("self-correlation peaks at one") {
    const std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    IqBuffer iq;
    iq.samples = tmpl;
    const std::vector<double> scores = correlate(iq, tmpl);
    REQUIRE(scores.size() == 1);
    CHECK(scores[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("capture shorter than the template is rejected") {
    const std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    IqBuffer iq;
    iq.samples.assign(100, cplx(1.0, 0.0));
    CHECK_THROWS_AS(correlate(iq, tmpl), InsufficientDataError);
}

TEST_CASE("white noise stays below the detection threshold") {
    std::mt19937_64 rng(60);
    const std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const IqBuffer iq = noise_capture(rng, 40000);
        for (double s : correlate(iq, tmpl)) worst = std::max(worst, s);
    }
    // Measured noise floor is two orders of magnitude under the default.
    CHECK(worst < 0.1);
    CHECK(worst < kDefaultDetectThreshold);
}

TEST_CASE("an embedded burst is found within two samples at 20 dB") {
    std::mt19937_64 rng(61);
    const Bytes frame = testing::random_sealed_frame(rng);
    Impairments imp;
    imp.snr_db = 20.0;
    imp.pad_samples = 5000;
    const IqBuffer iq = build_burst(frame, imp);

    const std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    const std::vector<double> scores = correlate(iq, tmpl);
    const auto peak = std::max_element(scores.begin(), scores.end());
    const auto peak_pos = static_cast<int64_t>(peak - scores.begin());
    CHECK(std::abs(peak_pos - (5000 + kPilotPeakOffset)) <= 2);
}

TEST_CASE("two separated bursts are both sliced") {
    std::mt19937_64 rng(62);
    const Bytes f1 = testing::random_sealed_frame(rng);
    const Bytes f2 = testing::random_sealed_frame(rng);
    Impairments imp;
    const IqBuffer iq = build_capture({{f1, 4000}, {f2, 54000}}, imp, 70000);

    const std::vector<Burst> bursts = detect_bursts(iq);
    REQUIRE(bursts.size() == 2);
    CHECK(std::abs(bursts[0].start_index - 4000) <= 2);
    CHECK(std::abs(bursts[1].start_index - 54000) <= 2);
    for (const Burst& b : bursts) {
        CHECK(b.samples.size() == kBurstLength);
        CHECK(b.score > 0.9);
    }
}

TEST_CASE("a pilot too close to the capture edge is discarded") {
    // Pilot body begins at sample 1000 < backoff distance, so the slice
    // would start before the capture.
    std::vector<cplx> tmpl = zc_time_domain(kZcRootA);
    IqBuffer iq;
    iq.samples.assign(1000, cplx(0.0, 0.0));
    iq.samples.insert(iq.samples.end(), tmpl.begin(), tmpl.end());
    iq.samples.resize(20000, cplx(0.0, 0.0));
    CHECK(detect_bursts(iq).empty());
}

TEST_CASE("detection is translation equivariant") {
    std::mt19937_64 rng(63);
    const Bytes frame = testing::random_sealed_frame(rng);
    Impairments imp;
    imp.pad_samples = 4000;
    const IqBuffer base = build_burst(frame, imp);

    const std::vector<Burst> before = detect_bursts(base);
    REQUIRE(before.size() == 1);

    const int64_t shift = 777;
    IqBuffer shifted;
    shifted.samples.assign(static_cast<size_t>(shift), cplx(0.0, 0.0));
    shifted.samples.insert(shifted.samples.end(), base.samples.begin(), base.samples.end());
    const std::vector<Burst> after = detect_bursts(shifted);
    REQUIRE(after.size() == 1);
    CHECK(after[0].start_index == before[0].start_index + shift);
}

TEST_CASE("detection is amplitude invariant") {
    std::mt19937_64 rng(64);
    const Bytes frame = testing::random_sealed_frame(rng);
    Impairments imp;
    imp.snr_db = 25.0;
    imp.pad_samples = 3000;
    const IqBuffer base = build_burst(frame, imp);
    const std::vector<Burst> ref = detect_bursts(base);
    REQUIRE(ref.size() == 1);

    for (double alpha : {0.01, 100.0}) {
        IqBuffer scaled = base;
        for (cplx& v : scaled.samples) v *= alpha;
        const std::vector<Burst> got = detect_bursts(scaled);
        REQUIRE(got.size() == 1);
        CHECK(got[0].start_index == ref[0].start_index);
        CHECK(std::abs(got[0].score - ref[0].score) < 1e-6);
    }
}

TEST_CASE("threshold domain is validated") {
    IqBuffer iq;
    iq.samples.assign(2048, cplx(0.0, 0.0));
    CHECK_THROWS_AS(detect_bursts(iq, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(detect_bursts(iq, 1.0), InvalidArgumentError);
}

}  // TEST_SUITE
