// Acceptance suite: one line per criterion, non-zero exit if any fails.
#include "flyq/classical/dynamics.hpp"
#include "flyq/cli/app.hpp"
#include "flyq/gaas/pipeline.hpp"
#include "flyq/qubit/audit.hpp"
#include "flyq/qubit/gate.hpp"
#include "flyq/qubit/network.hpp"
#include "flyq/qubit/state.hpp"
#include "flyq/qubit/sweep.hpp"
#include "flyq/scatter/amplitudes.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace flyq;

namespace {

constexpr double pi = std::numbers::pi;

// Tolerances
constexpr double kTolE0Rel = 5e-3;
constexpr double kTolWindowRel = 1e-3;
constexpr double kTolDeltaKRel = 3e-2;
constexpr double kTolDeltaTheta = 0.01;
constexpr double kTolLowK = 1e-4;
constexpr double kTolUnitarity = 1e-10;
constexpr double kTolClosedFormRel = 1e-8;
constexpr double kTolTrajectory = 1e-6;
constexpr double kTolMomentum = 1e-6;
constexpr double kTolTurning = 1e-9;
constexpr double kTolGate = 1e-12;
constexpr double kTolConcurrence = 1e-12;
constexpr double kTolQuarter = 1e-9;
constexpr double kTolAudit = 1e-12;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome e0_units() {
    const double e0 = gaas::derive_units({});
    const double rel = std::abs(e0 - 0.000355) / 0.000355;
    return {rel <= kTolE0Rel, fmt("E0 = %.6e eV, rel. dev. %.2e (tol %.1e)", e0, rel, kTolE0Rel)};
}

Outcome channel() {
    const gaas::ChannelWindow w = gaas::channel_window({});
    const double r1 = std::abs(w.e_min - 61.7) / 61.7;
    const double r2 = std::abs(w.e_max - 246.8) / 246.8;
    return {r1 <= kTolWindowRel && r2 <= kTolWindowRel,
            fmt("window = (%.4f, %.4f) E0, worst rel. dev. %.2e", w.e_min, w.e_max,
                std::max(r1, r2))};
}

Outcome delta_k() {
    gaas::MaterialConfig cfg;
    cfg.delta_e = 1.0;
    const gaas::Kinematics k = gaas::thermal_kinematics(cfg);
    // surd oracle: (sqrt(151 - pi^2 25/4) - sqrt(149 - pi^2 25/4)) / 40 nm
    const double emin = pi * pi * 25.0 / 4.0;
    const double surd = (std::sqrt(151.0 - emin) - std::sqrt(149.0 - emin)) / 40.0;
    const double rel = std::abs(k.delta_k_per_nm - 0.0027) / 0.0027;
    const bool surd_ok = std::abs(k.delta_k_per_nm - surd) <= 1e-12 * surd;
    return {rel <= kTolDeltaKRel && surd_ok,
            fmt("delta_k = %.6f nm^-1 (surd %.6f), rel. dev. from 0.0027 = %.2e", k.delta_k_per_nm,
                surd, rel)};
}

Outcome delta_theta() {
    const auto t0 = std::chrono::steady_clock::now();
    const gaas::EntanglerReport r = gaas::entangler_report({});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double dev = std::abs(r.delta_theta - 0.13);
    return {dev <= kTolDeltaTheta && secs < 1.0,
            fmt("delta_theta = %.5f rad at T = 4 K (|dev| %.4f, tol %.2f)", r.delta_theta, dev,
                kTolDeltaTheta) +
                fmt(", %.3f ms", secs * 1e3)};
}

Outcome low_k() {
    const scatter::AmplitudePair a = scatter::amplitudes({1e-6, 32.14, 2.0});
    const double dr = std::abs(a.R + 1.0);
    const double t = std::abs(a.T);
    return {dr < kTolLowK && t < kTolLowK, fmt("k = 1e-6: |R+1| = %.3e, |T| = %.3e", dr, t)};
}

Outcome unitarity() {
    const auto ks = scatter::log_grid(1e-4, 10.0, 400);
    double worst_u = 0.0;
    double worst_cf = 0.0;
    std::size_t points = 0;
    for (double v0 : {5.0, 32.14, 100.0}) {
        for (double alpha : {1.0, 2.0, 4.0}) {
            const scatter::Barrier b{v0, alpha};
            for (double k : ks) {
                const scatter::ScatterParams p{k, v0, alpha};
                const scatter::AmplitudePair a = scatter::amplitudes(p);
                const double t2 = std::norm(a.T);
                worst_u = std::max(worst_u, std::abs(std::norm(a.R) + t2 - 1.0));
                // closed form; for a weak barrier (real s) cosh(pi lambda)
                // continues to cos(pi sqrt(1 - X) / 2)
                double cf;
                if (scatter::strong_barrier(b)) {
                    cf = scatter::closed_form_T2(p);
                } else {
                    const double sh = std::sinh(pi * k / alpha);
                    const double c = std::cos(0.5 * pi * std::sqrt(1.0 - 2.0 * v0 / (alpha * alpha)));
                    cf = sh * sh / (sh * sh + c * c);
                }
                worst_cf = std::max(worst_cf, std::abs(t2 - cf) / cf);
                ++points;
            }
        }
    }
    return {worst_u <= kTolUnitarity && worst_cf <= kTolClosedFormRel && points == 3600,
            fmt("%.0f points: max ||R|^2+|T|^2-1| = %.2e, max rel. |T|^2 vs closed form = %.2e",
                static_cast<double>(points), worst_u, worst_cf)};
}

Outcome shape() {
    const auto ks = scatter::log_grid(1e-4, 2.0, 400);
    const auto rows = scatter::phase_sweep({32.14, 2.0}, ks);
    bool phase_down = true, r2_down = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        phase_down = phase_down && rows[i].arg_r < rows[i - 1].arg_r;
        r2_down = r2_down && rows[i].r2 < rows[i - 1].r2;
    }
    const double start = std::abs(rows.front().arg_r - pi);
    return {phase_down && r2_down && start < 1e-3,
            fmt("arg R: %.6f -> %.6f (start |dev from pi| %.1e)", rows.front().arg_r,
                rows.back().arg_r, start) +
                (phase_down ? ", arg R decreasing" : ", arg R NOT monotone") +
                (r2_down ? ", |R|^2 decreasing" : ", |R|^2 NOT monotone")};
}

Outcome trajectory() {
    const double v0 = 32.14, alpha = 2.0, er = v0 / 2, ecm = 100.0, t0 = -20.0;
    const classical::Interaction in{v0, alpha};
    const classical::ClassicalState s0 = classical::closed_form_state(t0, er, ecm, v0, alpha);
    const classical::Trajectory tr = classical::integrate(s0, in, {t0, 1e-3, 40.0, 1});
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        const auto [xa, xb] = classical::closed_form_positions(tr.t[i], er, ecm, v0, alpha);
        worst = std::max({worst, std::abs(tr.states[i].xa - xa), std::abs(tr.states[i].xb - xb)});
    }
    const classical::ClassicalState& s1 = tr.states.back();
    const double exch = std::max(std::abs(s1.pa - s0.pb), std::abs(s1.pb - s0.pa));
    // turning separation against the closed-form distance at t = 0
    const auto [xa0, xb0] = classical::closed_form_positions(0.0, er, ecm, v0, alpha);
    const double oracle = std::asinh(std::sqrt(v0 / er - 1.0)) / alpha;
    const double turn = std::max(std::abs(classical::turning_separation(er, v0, alpha) - oracle),
                                 std::abs((xb0 - xa0) - oracle));
    return {worst < kTolTrajectory && exch < kTolMomentum && turn < kTolTurning,
            fmt("max |x_rk4 - x_exact| = %.2e, momentum exchange err = %.2e, turning err = %.1e",
                worst, exch, turn)};
}

Outcome gate_algebra() {
    using namespace qubit;
    double worst = 0.0;
    const GateKind kinds[] = {GateKind::QA, GateKind::QB, GateKind::QA3, GateKind::QB3};
    for (GateKind k : kinds) {
        const Gate g = make_gate(k);
        worst = std::max(worst, unitarity_defect(g.entries()));
        worst = std::max(worst, max_abs_difference(g.power(4).entries(), identity4()));
    }
    worst = std::max(worst, max_abs_difference(make_gate(GateKind::QA).power(2).entries(),
                                               not_gate(Qubit::A).entries()));
    worst = std::max(worst, max_abs_difference(make_gate(GateKind::QB).power(2).entries(),
                                               not_gate(Qubit::B).entries()));
    const Gate n = compose(testing_network_spec(Gate::identity()));
    const Gate qbqa = make_gate(GateKind::QB) * make_gate(GateKind::QA);
    worst = std::max(worst, max_abs_difference(n.entries(), qbqa.entries()));
    const TwoQubitState out = apply(n, TwoQubitState::basis(Basis::k11));
    double quarter = 0.0;
    for (int i = 1; i <= 4; ++i) {
        quarter = std::max(quarter, std::abs(basis_probability(out, i) - 0.25));
    }
    return {worst < kTolGate && quarter < kTolGate,
            fmt("max algebra defect = %.2e, max |P - 1/4| = %.2e", worst, quarter)};
}

Outcome separability() {
    using namespace qubit;
    const auto grid = linspace(0.0, 2 * pi, 50);
    // uniform product state (|1> + |0>)(|1> + |0>) / 2
    const TwoQubitState plus = TwoQubitState::product(1.0, 1.0, 1.0, 1.0);
    std::size_t agree = 0, total = 0, non = 0;
    for (double phi1 : grid) {
        for (double phi2 : grid) {
            for (double theta : grid) {
                const VParams p{phi1, phi2, theta};
                const bool by_rule = classify_v(p) == Entanglement::non_entangling;
                const Gate v = make_v(p);
                const bool by_structure = factorizes(v);
                const bool by_concurrence = concurrence(apply(v, plus)) < kTolConcurrence;
                agree += (by_rule == by_structure && by_rule == by_concurrence);
                non += by_rule;
                ++total;
            }
        }
    }
    return {agree == total && non > 0,
            fmt("%.0f / %.0f grid points agree (%.0f non-entangling)", static_cast<double>(agree),
                static_cast<double>(total), static_cast<double>(non))};
}

Outcome quarter_bound() {
    using namespace qubit;
    double worst = 0.0;
    for (Convention c : kAllConventions) {
        const SweepGrid grid{pi, pi, 1, 0.0, 2 * pi, 20001};
        const SweepTable t = sweep(SweepMode::phi1, grid, {c});
        for (const SweepRow& r : t.rows) {
            worst = std::max(worst, r.non_entangling.probabilities[static_cast<int>(Basis::k01)]);
        }
    }
    return {worst <= 0.25 + kTolQuarter,
            fmt("max P(|0,1>) over 20001 phi1 values, all conventions = %.12f", worst)};
}

Outcome audit() {
    using namespace qubit;
    const AuditReport rep = convention_audit();
    const std::string text = audit_text(rep);
    const cplx I{0.0, 1.0};
    // oracles from Q_B Q_A |1,1> = (i/2, 1/2, 1/2, -i/2)
    auto is = [](const Amplitudes4& a, cplx c11) {
        double d = std::abs(a[0] - c11);
        for (std::size_t i = 1; i < 4; ++i) d = std::max(d, std::abs(a[i]));
        return d < kTolAudit;
    };
    const AuditCase& lit = rep.cases.at(0);
    const AuditCase& rev = rep.cases.at(1);
    const bool o1 = is(lit.entangling_output, I);
    const bool o2 = is(rev.entangling_output, -I);
    const bool o3 = is(rev.non_entangling_output, 1.0);
    const bool stated =
        text.find("conclusion: no audited convention reproduces the claimed e^{i*1.5*pi}|0,1>") !=
        std::string::npos;
    const bool none = !rep.any_matches_entangling_claim && !rep.any_matches_non_entangling_claim;
    return {o1 && o2 && o3 && stated && none,
            std::string("i|1,1> ") + (o1 ? "ok" : "MISSING") + ", -i|1,1> " +
                (o2 ? "ok" : "MISSING") + ", +|1,1> " + (o3 ? "ok" : "MISSING") +
                ", no-match statement " + (stated && none ? "present" : "MISSING")};
}

Outcome determinism() {
    const std::vector<std::vector<std::string>> commands{
        {"gates", "--theta-steps", "201"},
        {"gates", "--mode", "phi1", "--theta-steps", "51", "--phi1-steps", "51"},
        {"gates", "--convention", "audit"},
        {"scatter"},
        {"classical"},
        {"pipeline"},
    };
    std::size_t same = 0;
    for (const auto& c : commands) {
        std::ostringstream a, b, ea, eb;
        const int ra = cli::run(c, a, ea);
        const int rb = cli::run(c, b, eb);
        same += (ra == 0 && rb == 0 && a.str() == b.str() && !a.str().empty());
    }
    return {same == commands.size(),
            fmt("%.0f / %.0f commands byte-identical across two runs", static_cast<double>(same),
                static_cast<double>(commands.size()))};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"E0 unit", e0_units},
        {"channel window", channel},
        {"thermal delta_k", delta_k},
        {"phase error delta_theta", delta_theta},
        {"k -> 0 limit", low_k},
        {"unitarity sweep and closed-form |T|^2", unitarity},
        {"reflection phase and probability shape", shape},
        {"RK4 vs closed-form trajectory", trajectory},
        {"gate algebra", gate_algebra},
        {"separability classification", separability},
        {"1/4 bound", quarter_bound},
        {"convention audit", audit},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
