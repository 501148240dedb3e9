#include "doctest.h"

#include "flyq/qubit/gate.hpp"
#include "flyq/qubit/network.hpp"
#include "flyq/qubit/sweep.hpp"
#include "flyq/simd/dispatch.hpp"
#include "flyq/simd/network_batch.hpp"

#include <random>

using namespace flyq;
using namespace flyq::simd;

namespace {

BatchNetwork random_network(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    BatchNetwork net{};
    for (auto& row : net.outer)
        for (cplx& c : row) c = {n(rng), n(rng)};
    for (auto& row : net.middle)
        for (cplx& c : row) c = {n(rng), n(rng)};
    for (cplx& c : net.prepared) c = {n(rng), n(rng)};
    return net;
}

ComplexColumns random_phases(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> u(0.0, 6.3);
    ComplexColumns cols(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < 4; ++j) cols.set(j, i, std::polar(1.0, u(rng)));
    return cols;
}

// Direct evaluation of outer * D * middle * D * prepared.
Amplitudes4 reference(const BatchNetwork& net, const Amplitudes4& d) {
    Amplitudes4 v = net.prepared;
    for (std::size_t i = 0; i < 4; ++i) v[i] *= d[i];
    v = multiply(net.middle, v);
    for (std::size_t i = 0; i < 4; ++i) v[i] *= d[i];
    return multiply(net.outer, v);
}

} // namespace

TEST_CASE("dispatch levels") {
    CHECK(available(SimdLevel::scalar));
    CHECK(available(best_available()));
    CHECK(parse_level("scalar") == SimdLevel::scalar);
    CHECK(parse_level("auto") == best_available());
    CHECK_FALSE(parse_level("sse9").has_value());
    CHECK(to_string(SimdLevel::avx2) == "avx2");
}

TEST_CASE("scalar kernel matches direct evaluation") {
    std::mt19937_64 rng(5);
    const BatchNetwork net = random_network(rng);
    const std::size_t count = 37;
    const ComplexColumns phases = random_phases(rng, count);
    ComplexColumns out(count);
    network_batch(net, phases.view(), out.view(), SimdLevel::scalar);
    for (std::size_t i = 0; i < count; ++i) {
        Amplitudes4 d;
        for (std::size_t j = 0; j < 4; ++j) d[j] = phases.get(j, i);
        const Amplitudes4 r = reference(net, d);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(out.get(j, i) - r[j]) < 1e-13);
        }
    }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!available(SimdLevel::avx2)) {
        MESSAGE("AVX2 kernels unavailable on this build or CPU; skipping");
        return;
    }
    std::mt19937_64 rng(99);
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 8u, 63u, 1000u}) {
        const BatchNetwork net = random_network(rng);
        const ComplexColumns phases = random_phases(rng, count);
        ComplexColumns a(count), b(count);
        network_batch(net, phases.view(), a.view(), SimdLevel::scalar);
        network_batch(net, phases.view(), b.view(), SimdLevel::avx2);
        double worst = 0.0;
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs(a.get(j, i) - b.get(j, i)) /
                                            std::max(1.0, std::abs(a.get(j, i))));
        CHECK(worst < 1e-13);

        std::array<std::vector<double>, 4> pa, pb;
        std::array<std::span<double>, 4> sa, sb;
        for (std::size_t j = 0; j < 4; ++j) {
            pa[j].assign(count, -1.0);
            pb[j].assign(count, -1.0);
            sa[j] = pa[j];
            sb[j] = pb[j];
        }
        squared_modulus(std::as_const(a).view(), sa, SimdLevel::scalar);
        squared_modulus(std::as_const(a).view(), sb, SimdLevel::avx2);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < count; ++i)
                CHECK(pa[j][i] == doctest::Approx(pb[j][i]).epsilon(1e-14));
    }
}

TEST_CASE("sweeps agree across SIMD levels") {
    if (!available(SimdLevel::avx2)) {
        return;
    }
    qubit::SweepGrid grid{0.0, 6.0, 33, 0.0, 6.0, 17};
    for (qubit::Convention c : qubit::kAllConventions) {
        qubit::SweepOptions s{c, SimdLevel::scalar};
        qubit::SweepOptions v{c, SimdLevel::avx2};
        const auto ts = qubit::sweep(qubit::SweepMode::phi1, grid, s);
        const auto tv = qubit::sweep(qubit::SweepMode::phi1, grid, v);
        REQUIRE(ts.rows.size() == tv.rows.size());
        for (std::size_t i = 0; i < ts.rows.size(); ++i) {
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(ts.rows[i].entangling.probabilities[j] -
                               tv.rows[i].entangling.probabilities[j]) < 1e-14);
                CHECK(std::abs(ts.rows[i].non_entangling.probabilities[j] -
                               tv.rows[i].non_entangling.probabilities[j]) < 1e-14);
            }
        }
    }
}

TEST_CASE("size mismatches are rejected") {
    std::mt19937_64 rng(1);
    const BatchNetwork net = random_network(rng);
    const ComplexColumns phases = random_phases(rng, 4);
    ComplexColumns out(5);
    CHECK_THROWS_AS(network_batch(net, phases.view(), out.view(), SimdLevel::scalar),
                    std::invalid_argument);
}
