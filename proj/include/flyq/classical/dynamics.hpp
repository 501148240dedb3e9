#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace flyq::classical {

// Natural units: mass m = 1, lengths in omega0, energies in E0, momenta in
// sqrt(m E0), times in omega0 sqrt(m / E0). The two-electron Hamiltonian is
//   H = pA^2/2 + pB^2/2 + v0 sech^2(alpha (xA - xB)).

struct Interaction {
    double v0 = 0.0;    // [E0]
    double alpha = 1.0; // [1/omega0]
};

struct ClassicalState {
    double xa = 0.0;
    double xb = 0.0;
    double pa = 0.0;
    double pb = 0.0;
};

struct EnergySplit {
    double ecm = 0.0; // P^2 / 4
    double er = 0.0;  // p^2 + v0 sech^2(alpha x)
    double total() const { return ecm + er; }
};

/// Center-of-mass (P, X) and relative (p, x) coordinates:
/// P = pA + pB, X = (xA + xB)/2, x = xA - xB, p = (pA - pB)/2.
struct SplitCoordinates {
    double P = 0.0;
    double X = 0.0;
    double p = 0.0;
    double x = 0.0;
    EnergySplit energy;
};

double potential(double separation, const Interaction& in);
double hamiltonian(const ClassicalState& s, const Interaction& in);

SplitCoordinates split_coords(const ClassicalState& s, const Interaction& in);
ClassicalState join_coords(double P, double X, double p, double x);

/// Closed-form collision for 0 < Er < v0, centered at t = 0:
///   xA = sqrt(Ecm) t - asinh[sqrt(v0/Er - 1) cosh(-2 alpha sqrt(Er) t)] / (2 alpha)
///   xB = sqrt(Ecm) t + asinh[sqrt(v0/Er - 1) cosh(+2 alpha sqrt(Er) t)] / (2 alpha)
/// Throws DomainError when Er <= 0 or Er >= v0.
std::pair<double, double> closed_form_positions(double t, double er, double ecm, double v0,
                                                double alpha);

/// Positions and momenta (pA = dxA/dt, pB = dxB/dt) of the same closed form.
ClassicalState closed_form_state(double t, double er, double ecm, double v0, double alpha);

/// Distance of closest approach (1/alpha) asinh sqrt(v0/Er - 1).
double turning_separation(double er, double v0, double alpha);

struct Trajectory {
    std::vector<double> t;
    std::vector<ClassicalState> states;
};

struct IntegrationSpec {
    double t0 = 0.0;
    double dt = 1e-3;
    double duration = 0.0;
    std::size_t stride = 1; // keep every stride-th step (t0 and the end always kept)
};

inline constexpr std::size_t kMaxSteps = 200'000'000;

/// Fixed-step classical RK4 on Hamilton's equations. Times are t0 + i dt.
/// Throws DomainError for dt <= 0, negative duration or more than kMaxSteps.
Trajectory integrate(const ClassicalState& initial, const Interaction& in,
                     const IntegrationSpec& spec);

enum class Regime { below_separatrix, separatrix, above_separatrix };

/// below iff Er < v0, with |Er - v0| <= 1e-12 v0 counted as the separatrix.
Regime classify(double er, double v0);

const char* to_string(Regime r);

struct PortraitCurve {
    double energy = 0.0;
    Regime regime = Regime::below_separatrix;
    bool is_separatrix = false;
    std::optional<double> turning_x; // below the separatrix: |x| where p = 0
    std::optional<double> min_abs_p; // above the separatrix: |p| at x = 0
    std::vector<double> x;
    std::vector<double> p_pos; // +sqrt(Er - v0 sech^2(alpha x)), 0 where forbidden
    std::vector<bool> allowed;
};

/// Relative-motion phase-space contours p(x) = +-sqrt(Er - v0 sech^2(alpha x))
/// on a shared x grid; the separatrix Er = v0 is appended when absent.
/// Throws DomainError for non-positive energies.
std::vector<PortraitCurve> phase_portrait(const Interaction& in, std::span<const double> energies,
                                          std::span<const double> xgrid);

} // namespace flyq::classical
