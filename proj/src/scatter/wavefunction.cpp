#include "flyq/scatter/wavefunction.hpp"

#include "flyq/error.hpp"

#include <cmath>
#include <numbers>

namespace flyq::scatter {

namespace {

struct Coordinates {
    double z;       // (1 - tanh(alpha x)) / 2
    double w;       // 1 - z
    double ln_cosh; // ln cosh(alpha x)
    double tanh;
};

Coordinates coordinates(const ScatterParams& p, double x) {
    validate(p);
    if (!std::isfinite(x) || std::abs(x) > 50.0 / p.alpha) {
        throw DomainError("wavefunction probe limited to |x| <= 50 / alpha");
    }
    const double y = p.alpha * x;
    Coordinates c;
    c.z = 1.0 / (1.0 + std::exp(2.0 * y));
    c.w = 1.0 / (1.0 + std::exp(-2.0 * y));
    c.ln_cosh = std::abs(y) + std::log1p(std::exp(-2.0 * std::abs(y))) - std::numbers::ln2;
    c.tanh = std::tanh(y);
    return c;
}

struct Parameters {
    cplx a;
    cplx b;
    cplx c;
    cplx ik_over_alpha;
};

Parameters hypergeometric_parameters(const ScatterParams& p) {
    const cplx s = s_parameter(p.barrier());
    const cplx ik{0.0, p.k / p.alpha};
    return {-ik - s, -ik + s + 1.0, 1.0 - ik, ik};
}

} // namespace

cplx wavefunction_probe(const ScatterParams& p, double x) {
    const Coordinates co = coordinates(p, x);
    const Parameters hp = hypergeometric_parameters(p);
    // (1 - zeta^2)^{-ik/(2 alpha)} = exp(i (k/alpha) ln cosh(alpha x))
    const cplx prefactor = std::exp(hp.ik_over_alpha * co.ln_cosh);
    return prefactor * hypergeom_2f1(hp.a, hp.b, hp.c, co.z, co.w);
}

cplx wavefunction_derivative(const ScatterParams& p, double x) {
    const Coordinates co = coordinates(p, x);
    const Parameters hp = hypergeometric_parameters(p);
    const cplx prefactor = std::exp(hp.ik_over_alpha * co.ln_cosh);
    const cplx f = hypergeom_2f1(hp.a, hp.b, hp.c, co.z, co.w);
    const cplx df_dz =
        hp.a * hp.b / hp.c * hypergeom_2f1(hp.a + 1.0, hp.b + 1.0, hp.c + 1.0, co.z, co.w);
    const double dz_dx = -2.0 * p.alpha * co.z * co.w;
    const cplx ik{0.0, p.k};
    return prefactor * (ik * co.tanh * f + df_dz * dz_dx);
}

PlaneWaveSplit split_plane_waves(const ScatterParams& p, double x) {
    const cplx phi = wavefunction_probe(p, x);
    const cplx dphi = wavefunction_derivative(p, x);
    const cplx ik{0.0, p.k};
    const cplx e_plus = std::polar(1.0, p.k * x);
    return {0.5 * (phi + dphi / ik) / e_plus, 0.5 * (phi - dphi / ik) * e_plus};
}

AmplitudePair fit_asymptotic_amplitudes(const ScatterParams& p, double x_far) {
    const PlaneWaveSplit left = split_plane_waves(p, -std::abs(x_far));
    const PlaneWaveSplit right = split_plane_waves(p, std::abs(x_far));
    return {left.outgoing / left.incoming, right.incoming / left.incoming};
}

double relative_wavevector(double ka, double kb, RelativeMomentum rule) {
    const double diff = ka - kb;
    return rule == RelativeMomentum::half_difference ? 0.5 * diff : diff;
}

cplx total_wavefunction(double ka, double kb, double xa, double xb, Side side,
                        const Barrier& barrier, RelativeMomentum rule) {
    if (!(ka > kb)) {
        throw DomainError("total wavefunction requires kA > kB (electron A faster)");
    }
    const cplx direct = std::polar(1.0, ka * xa + kb * xb);
    if (side == Side::in) {
        return direct;
    }
    const AmplitudePair amp =
        amplitudes({relative_wavevector(ka, kb, rule), barrier.v0, barrier.alpha});
    const cplx exchanged = std::polar(1.0, kb * xa + ka * xb);
    return amp.T * direct + amp.R * exchanged;
}

} // namespace flyq::scatter
