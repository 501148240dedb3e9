#include "flyq/classical/dynamics.hpp"

#include "flyq/error.hpp"

#include <cmath>

namespace flyq::classical {

namespace {

double sech2(double y) {
    const double c = std::cosh(y);
    return std::isinf(c) ? 0.0 : 1.0 / (c * c);
}

void require_collision_branch(double er, double v0) {
    if (!(er > 0.0)) {
        throw DomainError("closed form requires Er > 0");
    }
    if (!(er < v0) || classify(er, v0) != Regime::below_separatrix) {
        throw DomainError("closed form only valid for Er < v0 (momentum-exchange branch)");
    }
}

// asinh(A cosh(tau)) without overflow for large |tau|.
double asinh_scaled_cosh(double amplitude, double tau) {
    const double arg = amplitude * std::cosh(tau);
    if (std::isfinite(arg)) {
        return std::asinh(arg);
    }
    const double a = std::abs(tau);
    return std::log(amplitude) + a + std::log1p(std::exp(-2.0 * a));
}

ClassicalState derivative(const ClassicalState& s, const Interaction& in) {
    const double y = in.alpha * (s.xa - s.xb);
    // -dV/dxA = 2 v0 alpha sech^2(y) tanh(y)
    const double force = 2.0 * in.v0 * in.alpha * sech2(y) * std::tanh(y);
    return {s.pa, s.pb, force, -force};
}

ClassicalState axpy(const ClassicalState& s, double h, const ClassicalState& d) {
    return {s.xa + h * d.xa, s.xb + h * d.xb, s.pa + h * d.pa, s.pb + h * d.pb};
}

} // namespace

double potential(double separation, const Interaction& in) {
    return in.v0 * sech2(in.alpha * separation);
}

double hamiltonian(const ClassicalState& s, const Interaction& in) {
    return 0.5 * s.pa * s.pa + 0.5 * s.pb * s.pb + potential(s.xa - s.xb, in);
}

SplitCoordinates split_coords(const ClassicalState& s, const Interaction& in) {
    SplitCoordinates c;
    c.P = s.pa + s.pb;
    c.X = 0.5 * (s.xa + s.xb);
    c.x = s.xa - s.xb;
    c.p = 0.5 * (s.pa - s.pb);
    c.energy.ecm = 0.25 * c.P * c.P;
    c.energy.er = c.p * c.p + potential(c.x, in);
    return c;
}

ClassicalState join_coords(double P, double X, double p, double x) {
    return {X + 0.5 * x, X - 0.5 * x, 0.5 * P + p, 0.5 * P - p};
}

std::pair<double, double> closed_form_positions(double t, double er, double ecm, double v0,
                                                double alpha) {
    const ClassicalState s = closed_form_state(t, er, ecm, v0, alpha);
    return {s.xa, s.xb};
}

ClassicalState closed_form_state(double t, double er, double ecm, double v0, double alpha) {
    require_collision_branch(er, v0);
    if (!(ecm >= 0.0) || !(alpha > 0.0)) {
        throw DomainError("closed form requires Ecm >= 0 and alpha > 0");
    }
    const double amplitude = std::sqrt(v0 / er - 1.0);
    const double rate = alpha * std::sqrt(4.0 * er);
    const double drift = std::sqrt(ecm) * t;
    const double tau = rate * t;
    ClassicalState s;
    s.xa = drift - asinh_scaled_cosh(amplitude, -tau) / (2.0 * alpha);
    s.xb = drift + asinh_scaled_cosh(amplitude, tau) / (2.0 * alpha);
    // d/dt asinh(A cosh tau) = rate A sinh tau / sqrt(1 + A^2 cosh^2 tau)
    //                        = rate A tanh tau / sqrt(sech^2 tau + A^2)
    const double shape = amplitude * std::tanh(tau) / std::sqrt(sech2(tau) + amplitude * amplitude);
    const double relative_speed = 0.5 * rate / alpha * shape; // sqrt(Er) * shape
    s.pa = std::sqrt(ecm) - relative_speed;
    s.pb = std::sqrt(ecm) + relative_speed;
    return s;
}

double turning_separation(double er, double v0, double alpha) {
    require_collision_branch(er, v0);
    return std::asinh(std::sqrt(v0 / er - 1.0)) / alpha;
}

Trajectory integrate(const ClassicalState& initial, const Interaction& in,
                     const IntegrationSpec& spec) {
    if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) {
        throw DomainError("integration step dt must be positive");
    }
    if (!(spec.duration >= 0.0) || !std::isfinite(spec.duration)) {
        throw DomainError("integration duration must be non-negative");
    }
    const double steps_real = std::round(spec.duration / spec.dt);
    if (steps_real > static_cast<double>(kMaxSteps)) {
        throw DomainError("integration would exceed the maximum step count");
    }
    const auto steps = static_cast<std::size_t>(steps_real);
    const std::size_t stride = spec.stride == 0 ? 1 : spec.stride;

    Trajectory traj;
    traj.t.reserve(steps / stride + 2);
    traj.states.reserve(steps / stride + 2);
    traj.t.push_back(spec.t0);
    traj.states.push_back(initial);

    ClassicalState s = initial;
    const double h = spec.dt;
    for (std::size_t i = 1; i <= steps; ++i) {
        const ClassicalState k1 = derivative(s, in);
        const ClassicalState k2 = derivative(axpy(s, 0.5 * h, k1), in);
        const ClassicalState k3 = derivative(axpy(s, 0.5 * h, k2), in);
        const ClassicalState k4 = derivative(axpy(s, h, k3), in);
        s.xa += h / 6.0 * (k1.xa + 2.0 * k2.xa + 2.0 * k3.xa + k4.xa);
        s.xb += h / 6.0 * (k1.xb + 2.0 * k2.xb + 2.0 * k3.xb + k4.xb);
        s.pa += h / 6.0 * (k1.pa + 2.0 * k2.pa + 2.0 * k3.pa + k4.pa);
        s.pb += h / 6.0 * (k1.pb + 2.0 * k2.pb + 2.0 * k3.pb + k4.pb);
        if (i % stride == 0 || i == steps) {
            traj.t.push_back(spec.t0 + static_cast<double>(i) * h);
            traj.states.push_back(s);
        }
    }
    return traj;
}

Regime classify(double er, double v0) {
    if (std::abs(er - v0) <= 1e-12 * std::abs(v0)) {
        return Regime::separatrix;
    }
    return er < v0 ? Regime::below_separatrix : Regime::above_separatrix;
}

const char* to_string(Regime r) {
    switch (r) {
    case Regime::below_separatrix:
        return "below-separatrix";
    case Regime::separatrix:
        return "separatrix";
    case Regime::above_separatrix:
        return "above-separatrix";
    }
    return "unknown";
}

std::vector<PortraitCurve> phase_portrait(const Interaction& in, std::span<const double> energies,
                                          std::span<const double> xgrid) {
    if (!(in.v0 > 0.0) || !(in.alpha > 0.0)) {
        throw DomainError("phase portrait needs v0 > 0 and alpha > 0");
    }
    std::vector<double> levels(energies.begin(), energies.end());
    bool has_separatrix = false;
    for (double e : levels) {
        if (!(e > 0.0) || !std::isfinite(e)) {
            throw DomainError("phase portrait energies must be positive");
        }
        has_separatrix |= classify(e, in.v0) == Regime::separatrix;
    }
    if (!has_separatrix) {
        levels.push_back(in.v0);
    }

    std::vector<PortraitCurve> curves;
    curves.reserve(levels.size());
    for (double e : levels) {
        PortraitCurve c;
        c.energy = e;
        c.regime = classify(e, in.v0);
        c.is_separatrix = c.regime == Regime::separatrix;
        if (c.regime == Regime::below_separatrix) {
            c.turning_x = std::asinh(std::sqrt(in.v0 / e - 1.0)) / in.alpha;
        } else if (c.regime == Regime::above_separatrix) {
            c.min_abs_p = std::sqrt(e - in.v0);
        } else {
            c.min_abs_p = 0.0;
        }
        c.x.assign(xgrid.begin(), xgrid.end());
        c.p_pos.reserve(xgrid.size());
        c.allowed.reserve(xgrid.size());
        for (double x : xgrid) {
            const double kinetic = c.is_separatrix ? in.v0 * std::pow(std::tanh(in.alpha * x), 2)
                                                   : e - potential(x, in);
            c.allowed.push_back(kinetic >= 0.0);
            c.p_pos.push_back(kinetic > 0.0 ? std::sqrt(kinetic) : 0.0);
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

} // namespace flyq::classical
