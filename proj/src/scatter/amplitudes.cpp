#include "flyq/scatter/amplitudes.hpp"

#include "flyq/error.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flyq::scatter {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const Barrier& b) {
    if (!(b.v0 > 0.0) || !std::isfinite(b.v0)) {
        throw DomainError("barrier height v0 must be positive and finite");
    }
    if (!(b.alpha > 0.0) || !std::isfinite(b.alpha)) {
        throw DomainError("inverse width alpha must be positive and finite");
    }
}

void validate(const ScatterParams& p) {
    validate(p.barrier());
    if (!(p.k > 0.0) || !std::isfinite(p.k)) {
        throw DomainError("relative wavevector k must be positive (k = 0 sits on Gamma poles)");
    }
}

double barrier_strength(const Barrier& b) { return 2.0 * b.v0 / (b.alpha * b.alpha); }

cplx s_parameter(const Barrier& b) {
    return 0.5 * (-1.0 + std::sqrt(cplx(1.0 - barrier_strength(b), 0.0)));
}

bool strong_barrier(const Barrier& b) { return barrier_strength(b) > 1.0; }

double barrier_lambda(const Barrier& b) {
    if (!strong_barrier(b)) {
        throw DomainError("weak barrier (2 v0 / alpha^2 <= 1): s is real");
    }
    return 0.5 * std::sqrt(barrier_strength(b) - 1.0);
}

double relative_wavevector_from_energy(double er) {
    if (!(er >= 0.0)) {
        throw DomainError("relative energy must be non-negative");
    }
    return std::sqrt(0.5 * er);
}

AmplitudePair amplitudes(const ScatterParams& p) {
    validate(p);
    const cplx s = s_parameter(p.barrier());
    const cplx ik{0.0, p.k / p.alpha};
    const cplx g_a = complex_gamma(-ik - s);
    const cplx g_b = complex_gamma(-ik + s + 1.0);
    const cplx t = g_a * g_b * reciprocal_gamma(-ik) * reciprocal_gamma(1.0 - ik);
    const cplx r = complex_gamma(ik) * g_a * g_b * reciprocal_gamma(-ik) * reciprocal_gamma(-s) *
                   reciprocal_gamma(s + 1.0);
    return {r, t};
}

cplx reflection_flipped_numerator(const ScatterParams& p) {
    validate(p);
    const cplx s = s_parameter(p.barrier());
    const cplx ik{0.0, p.k / p.alpha};
    return complex_gamma(ik) * complex_gamma(ik - s) * complex_gamma(ik + s + 1.0) *
           reciprocal_gamma(-ik) * reciprocal_gamma(-s) * reciprocal_gamma(s + 1.0);
}

double closed_form_T2(const ScatterParams& p) {
    validate(p);
    const double lambda = barrier_lambda(p.barrier());
    const double sh = std::sinh(kPi * p.k / p.alpha);
    const double ch = std::cosh(kPi * lambda);
    const double sh2 = sh * sh;
    return sh2 / (sh2 + ch * ch);
}

std::vector<PhaseRow> phase_sweep(const Barrier& b, std::span<const double> kgrid) {
    if (kgrid.empty()) {
        throw std::invalid_argument("k grid is empty");
    }
    for (std::size_t i = 0; i < kgrid.size(); ++i) {
        if (!(kgrid[i] > 0.0) || (i > 0 && !(kgrid[i] > kgrid[i - 1]))) {
            throw std::invalid_argument("k grid must be strictly positive and ascending");
        }
    }
    std::vector<PhaseRow> rows;
    rows.reserve(kgrid.size());
    double previous = kPi;
    for (double k : kgrid) {
        const AmplitudePair a = amplitudes({k, b.v0, b.alpha});
        const double raw = std::arg(a.R);
        const double phase = raw + 2.0 * kPi * std::round((previous - raw) / (2.0 * kPi));
        previous = phase;
        rows.push_back({k, phase, std::norm(a.R), std::norm(a.T)});
    }
    return rows;
}

std::vector<double> log_grid(double lo, double hi, std::size_t steps) {
    if (!(lo > 0.0) || !(hi > lo) || steps < 2) {
        throw std::invalid_argument("log grid needs 0 < lo < hi and at least two steps");
    }
    std::vector<double> out(steps);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (std::size_t i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(steps - 1);
        out[i] = std::exp(llo + (lhi - llo) * f);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace flyq::scatter
