#include "flyq/cli/app.hpp"

#include "flyq/classical/dynamics.hpp"
#include "flyq/cli/config_file.hpp"
#include "flyq/cli/csv.hpp"
#include "flyq/error.hpp"
#include "flyq/qubit/audit.hpp"
#include "flyq/qubit/sweep.hpp"
#include "flyq/scatter/amplitudes.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace flyq::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bad argument values detected after parsing (exit code 1).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw UsageError(std::string(name) + " must be a finite number");
    }
}

void require_range(double lo, double hi, long long steps, const char* name) {
    require_finite(lo, name);
    require_finite(hi, name);
    if (!(lo < hi)) {
        throw UsageError(std::string(name) + ": min must be smaller than max");
    }
    if (steps < 2) {
        throw UsageError(std::string(name) + ": steps must be at least 2");
    }
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) {
                       return std::isspace(c);
                   }),
                   item.end());
        double v = 0.0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size() ||
            !std::isfinite(v)) {
            throw UsageError("malformed number '" + item + "' in list '" + text + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw UsageError("empty number list");
    }
    return values;
}

qubit::SweepMode parse_mode(const std::string& s) {
    if (s == "fig3") {
        return qubit::SweepMode::fig3;
    }
    if (s == "fig4") {
        return qubit::SweepMode::fig4;
    }
    if (s == "phi1") {
        return qubit::SweepMode::phi1;
    }
    throw UsageError("unknown sweep mode '" + s + "' (fig3, fig4, phi1)");
}

qubit::Convention parse_convention(const std::string& s) {
    for (qubit::Convention c : qubit::kAllConventions) {
        if (s == qubit::to_string(c)) {
            return c;
        }
    }
    throw UsageError("unknown convention '" + s +
                     "' (literal, reversed-v, swapped-basis, q-swap, audit)");
}

// Writes to --out when given (plus a .meta sidecar), otherwise to `fallback`.
void emit(const RunConfig& cfg, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
    if (cfg.out.empty()) {
        body(fallback);
        return;
    }
    {
        std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot open output file '" + cfg.out + "'");
        }
        body(file);
        if (!file) {
            throw IoError("failed writing '" + cfg.out + "'");
        }
    }
    std::ofstream meta(cfg.out + ".meta", std::ios::binary | std::ios::trunc);
    if (!meta) {
        throw IoError("cannot open metadata file '" + cfg.out + ".meta'");
    }
    meta << "generator = flyq\n";
    meta << "arguments =";
    for (const std::string& a : cfg.arguments) {
        meta << ' ' << a;
    }
    meta << '\n';
    if (cfg.command == Command::gates) {
        meta << "simd = " << cfg.gates.simd << '\n';
    }
}

void run_gates(const RunConfig& cfg, std::ostream& out) {
    const GatesOptions& g = cfg.gates;
    if (g.convention == "audit") {
        const qubit::AuditReport report = qubit::convention_audit();
        const std::string text = qubit::audit_text(report);
        if (!g.report.empty()) {
            std::ofstream file(g.report, std::ios::binary | std::ios::trunc);
            if (!file) {
                throw IoError("cannot open report file '" + g.report + "'");
            }
            file << text;
        }
        if (!cfg.out.empty()) {
            emit(cfg, out, [&](std::ostream& os) { os << qubit::audit_csv(report); });
        }
        if (g.report.empty() && cfg.out.empty()) {
            out << text;
        }
        return;
    }

    const qubit::SweepMode mode = parse_mode(g.mode);
    qubit::SweepOptions opts;
    opts.convention = parse_convention(g.convention);
    const auto level = simd::parse_level(g.simd);
    if (!level) {
        throw UsageError("unknown SIMD level '" + g.simd + "' (auto, scalar, avx2)");
    }
    if (!simd::available(*level)) {
        throw UsageError("SIMD level '" + g.simd + "' is not available on this machine");
    }
    opts.simd = *level;

    require_range(g.theta_min, g.theta_max, g.theta_steps, "theta");
    qubit::SweepGrid grid;
    grid.theta_min = g.theta_min;
    grid.theta_max = g.theta_max;
    grid.theta_steps = static_cast<std::size_t>(g.theta_steps);
    if (mode == qubit::SweepMode::phi1) {
        require_range(g.phi1_min, g.phi1_max, g.phi1_steps, "phi1");
        grid.phi1_min = g.phi1_min;
        grid.phi1_max = g.phi1_max;
        grid.phi1_steps = static_cast<std::size_t>(g.phi1_steps);
    }
    const qubit::SweepTable table = qubit::sweep(mode, grid, opts);

    emit(cfg, out, [&](std::ostream& os) {
        CsvWriter csv(os);
        const auto probs = [](std::vector<CsvWriter::Field>& f, const qubit::NetworkOutput& o) {
            for (double p : o.probabilities) {
                f.emplace_back(p);
            }
        };
        switch (mode) {
        case qubit::SweepMode::fig3:
            csv.header({"theta", "P11_ent", "P10_ent", "P01_ent", "P00_ent", "P11_non", "P10_non",
                        "P01_non", "P00_non", "probA1_ent", "probA1_non", "tvd"});
            for (const qubit::SweepRow& r : table.rows) {
                std::vector<CsvWriter::Field> f{r.theta};
                probs(f, r.entangling);
                probs(f, r.non_entangling);
                f.insert(f.end(), {r.entangling.prob_a1, r.non_entangling.prob_a1, r.tvd});
                csv.row(f);
            }
            break;
        case qubit::SweepMode::fig4:
            csv.header({"theta", "probA1_ent", "probA0_ent", "probA1_non", "probA0_non", "tvd"});
            for (const qubit::SweepRow& r : table.rows) {
                csv.row({r.theta, r.entangling.prob_a1, r.entangling.prob_a0,
                         r.non_entangling.prob_a1, r.non_entangling.prob_a0, r.tvd});
            }
            break;
        case qubit::SweepMode::phi1:
            csv.header({"theta", "phi1", "phi2", "P11_ent", "P10_ent", "P01_ent", "P00_ent",
                        "P11_non", "P10_non", "P01_non", "P00_non", "probA1_ent", "probA1_non",
                        "tvd"});
            for (const qubit::SweepRow& r : table.rows) {
                std::vector<CsvWriter::Field> f{r.theta, r.phi1, r.phi2};
                probs(f, r.entangling);
                probs(f, r.non_entangling);
                f.insert(f.end(), {r.entangling.prob_a1, r.non_entangling.prob_a1, r.tvd});
                csv.row(f);
            }
            break;
        }
    });
}

void run_scatter(const RunConfig& cfg, std::ostream& out) {
    const ScatterOptions& s = cfg.scatter;
    require_range(s.k_min, s.k_max, s.k_steps, "k");
    require_finite(s.v0, "v0");
    require_finite(s.alpha, "alpha");
    if (!(s.k_min > 0.0)) {
        throw UsageError("k: min must be positive");
    }
    std::vector<double> grid;
    if (s.spacing == "log") {
        grid = scatter::log_grid(s.k_min, s.k_max, static_cast<std::size_t>(s.k_steps));
    } else if (s.spacing == "linear") {
        grid = qubit::linspace(s.k_min, s.k_max, static_cast<std::size_t>(s.k_steps));
    } else {
        throw UsageError("unknown k spacing '" + s.spacing + "' (log, linear)");
    }
    const scatter::Barrier barrier{s.v0, s.alpha};
    scatter::validate(barrier);
    const std::vector<scatter::PhaseRow> rows = scatter::phase_sweep(barrier, grid);
    emit(cfg, out, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"k", "argR", "R2", "T2"});
        for (const scatter::PhaseRow& r : rows) {
            csv.row({r.k, r.arg_r, r.r2, r.t2});
        }
    });
}

void write_trajectory(const ClassicalOptions& c, const classical::Interaction& in) {
    const double er = c.er > 0.0 ? c.er : 0.5 * in.v0;
    require_finite(er, "er");
    require_finite(c.ecm, "ecm");
    require_finite(c.dt, "dt");
    require_finite(c.t_span, "t-span");
    if (!(c.t_span > 0.0)) {
        throw UsageError("t-span must be positive");
    }
    if (c.stride < 1) {
        throw UsageError("stride must be at least 1");
    }
    if (!(c.ecm > er)) {
        throw UsageError("ecm must exceed er so both electrons move forward");
    }
    const double t0 = -c.t_span;
    const classical::Regime regime = classical::classify(er, in.v0);
    if (regime == classical::Regime::separatrix) {
        throw DomainError("trajectories are undefined on the separatrix (infinite approach time)");
    }
    const bool exact = regime == classical::Regime::below_separatrix;
    const classical::ClassicalState initial =
        exact ? classical::closed_form_state(t0, er, c.ecm, in.v0, in.alpha)
              : classical::join_coords(2.0 * std::sqrt(c.ecm), std::sqrt(c.ecm) * t0,
                                       std::sqrt(er), 2.0 * std::sqrt(er) * t0);
    const classical::Trajectory traj = classical::integrate(
        initial, in, {t0, c.dt, 2.0 * c.t_span, static_cast<std::size_t>(c.stride)});

    std::ofstream file(c.trajectory_out, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open trajectory file '" + c.trajectory_out + "'");
    }
    CsvWriter csv(file);
    if (exact) {
        csv.header({"t", "xA_rk4", "xB_rk4", "pA_rk4", "pB_rk4", "xA_exact", "xB_exact",
                    "pA_exact", "pB_exact"});
    } else {
        csv.header({"t", "xA_rk4", "xB_rk4", "pA_rk4", "pB_rk4"});
    }
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const classical::ClassicalState& s = traj.states[i];
        std::vector<CsvWriter::Field> f{traj.t[i], s.xa, s.xb, s.pa, s.pb};
        if (exact) {
            const classical::ClassicalState e =
                classical::closed_form_state(traj.t[i], er, c.ecm, in.v0, in.alpha);
            f.insert(f.end(), {e.xa, e.xb, e.pa, e.pb});
        }
        csv.row(f);
    }
}

void run_classical(const RunConfig& cfg, std::ostream& out) {
    const ClassicalOptions& c = cfg.classical;
    require_finite(c.v0, "v0");
    require_finite(c.alpha, "alpha");
    require_range(c.x_min, c.x_max, c.x_steps, "x");
    const classical::Interaction in{c.v0, c.alpha};
    if (!(in.v0 > 0.0) || !(in.alpha > 0.0)) {
        throw DomainError("v0 and alpha must be positive");
    }
    std::vector<double> energies;
    if (c.energies.empty()) {
        for (double f : {0.25, 0.5, 0.75, 1.25, 1.5, 2.0}) {
            energies.push_back(f * in.v0);
        }
    } else {
        energies = parse_number_list(c.energies);
    }
    const std::vector<double> xs =
        qubit::linspace(c.x_min, c.x_max, static_cast<std::size_t>(c.x_steps));
    const std::vector<classical::PortraitCurve> curves = classical::phase_portrait(in, energies, xs);

    if (!c.trajectory_out.empty()) {
        write_trajectory(c, in);
    }

    emit(cfg, out, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"energy", "regime", "is_separatrix", "x", "p_pos", "p_neg", "allowed"});
        for (const classical::PortraitCurve& curve : curves) {
            for (std::size_t i = 0; i < curve.x.size(); ++i) {
                csv.row({curve.energy, std::string(classical::to_string(curve.regime)),
                         static_cast<long long>(curve.is_separatrix), curve.x[i], curve.p_pos[i],
                         -curve.p_pos[i], static_cast<long long>(curve.allowed[i])});
            }
        }
    });
}

void run_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    gaas::MaterialConfig m = cfg.material;
    if (cfg.relative == "full") {
        m.relative = scatter::RelativeMomentum::full_difference;
    } else if (cfg.relative == "half") {
        m.relative = scatter::RelativeMomentum::half_difference;
    } else {
        throw UsageError("unknown relative-momentum rule '" + cfg.relative + "' (full, half)");
    }
    if (cfg.delta_e_set) {
        m.delta_e = cfg.delta_e;
    }
    const gaas::EntanglerReport report = gaas::entangler_report(m);
    for (const std::string& w : report.warnings) {
        err << "warning: " << w << '\n';
    }
    emit(cfg, out, [&](std::ostream& os) { os << gaas::render(report, m); });
}

void add_output(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out, "Output file (default: standard output)");
}

struct Parser {
    CLI::App app{"Entanglement-testing network and Coulomb entangler simulations", "flyq"};
    CLI::App* gates = nullptr;
    CLI::App* scatter = nullptr;
    CLI::App* classical = nullptr;
    CLI::App* pipeline = nullptr;
    CLI::Option* delta_e = nullptr;

    explicit Parser(RunConfig& cfg) {
        app.option_defaults()->take_last();
        app.require_subcommand(1);
        app.add_option("--config", "Plain-text key = value file; flags override its values");

        gates = app.add_subcommand("gates", "Network sweeps (theta, phi1) and the convention audit");
        gates->add_option("--mode", cfg.gates.mode, "fig3 | fig4 | phi1");
        gates->add_option("--convention", cfg.gates.convention,
                          "literal | reversed-v | swapped-basis | q-swap | audit");
        gates->add_option("--theta-min", cfg.gates.theta_min);
        gates->add_option("--theta-max", cfg.gates.theta_max);
        gates->add_option("--theta-steps", cfg.gates.theta_steps);
        gates->add_option("--phi1-min", cfg.gates.phi1_min);
        gates->add_option("--phi1-max", cfg.gates.phi1_max);
        gates->add_option("--phi1-steps", cfg.gates.phi1_steps);
        gates->add_option("--simd", cfg.gates.simd, "auto | scalar | avx2");
        gates->add_option("--report", cfg.gates.report, "Audit text report file");
        add_output(gates, cfg);

        scatter = app.add_subcommand("scatter", "Reflection phase and probability versus k");
        scatter->add_option("--k-min", cfg.scatter.k_min, "[1/omega0]");
        scatter->add_option("--k-max", cfg.scatter.k_max, "[1/omega0]");
        scatter->add_option("--k-steps", cfg.scatter.k_steps);
        scatter->add_option("--spacing", cfg.scatter.spacing, "log | linear");
        scatter->add_option("--v0", cfg.scatter.v0, "[E0]");
        scatter->add_option("--alpha", cfg.scatter.alpha, "[1/omega0]");
        add_output(scatter, cfg);

        classical = app.add_subcommand("classical", "Relative-motion phase portrait and trajectories");
        classical->add_option("--v0", cfg.classical.v0, "[E0]");
        classical->add_option("--alpha", cfg.classical.alpha, "[1/omega0]");
        classical->add_option("--energies", cfg.classical.energies, "Comma list of Er [E0]");
        classical->add_option("--x-min", cfg.classical.x_min);
        classical->add_option("--x-max", cfg.classical.x_max);
        classical->add_option("--x-steps", cfg.classical.x_steps);
        classical->add_option("--trajectory-out", cfg.classical.trajectory_out,
                              "RK4 vs closed-form trajectory CSV");
        classical->add_option("--er", cfg.classical.er, "Relative energy [E0] (default v0/2)");
        classical->add_option("--ecm", cfg.classical.ecm, "Center-of-mass energy [E0]");
        classical->add_option("--dt", cfg.classical.dt);
        classical->add_option("--t-span", cfg.classical.t_span, "Integrate over [-t, t]");
        classical->add_option("--stride", cfg.classical.stride, "Keep every n-th step");
        add_output(classical, cfg);

        pipeline = app.add_subcommand("pipeline", "GaAs entangler report");
        pipeline->add_option("--omega0", cfg.material.omega0_nm, "Length unit [nm]");
        pipeline->add_option("--mass-ratio", cfg.material.m_ratio, "m*/m_e");
        pipeline->add_option("--width", cfg.material.width_nm, "Lead width [nm]");
        pipeline->add_option("--fermi", cfg.material.fermi, "[E0]");
        pipeline->add_option("--temperature", cfg.material.temperature_k, "[K]");
        pipeline->add_option("--v0", cfg.material.v0, "[E0]");
        pipeline->add_option("--alpha-inv", cfg.material.alpha_inv, "[omega0]");
        delta_e = pipeline->add_option("--delta-e", cfg.delta_e, "Override k_B T [E0]");
        pipeline->add_option("--relative", cfg.relative, "full | half");
        add_output(pipeline, cfg);
    }

    CLI::App* find(const std::string& name) const {
        for (CLI::App* s : {gates, scatter, classical, pipeline}) {
            if (s->get_name() == name) {
                return s;
            }
        }
        return nullptr;
    }
};

// Removes --config from the argument list and returns its value.
std::string take_config_path(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config requires a file path");
            }
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i + 2));
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return path;
}

RunConfig parse(const std::vector<std::string>& raw, std::ostream& out, bool& help_shown) {
    RunConfig cfg = default_config();
    cfg.arguments = raw;
    std::vector<std::string> args = raw;
    const std::string config_path = take_config_path(args);
    ConfigEntries entries;
    if (!config_path.empty()) {
        entries = load_config_file(config_path);
    }

    Parser p(cfg);
    // Subcommand: first argument, or `command = ...` in the config file.
    std::string command;
    if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
        command = args.front();
    } else {
        for (const auto& [k, v] : entries) {
            if (k == "command") {
                command = v;
                args.insert(args.begin(), v);
            }
        }
    }
    if (CLI::App* sub = p.find(command)) {
        std::vector<std::string> injected;
        for (const auto& [k, v] : entries) {
            if (k == "command") {
                continue;
            }
            if (sub->get_option_no_throw("--" + k) == nullptr || k == "help") {
                throw ConfigError(config_path + ": unknown key '" + k + "' for '" + command + "'");
            }
            injected.push_back("--" + k);
            injected.push_back(v);
        }
        args.insert(args.begin() + 1, injected.begin(), injected.end());
    } else {
        for (const auto& [k, v] : entries) {
            if (k != "command") {
                throw ConfigError(config_path + ": key '" + k + "' given without a subcommand");
            }
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        p.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << p.app.help();
        help_shown = true;
        return cfg;
    } catch (const CLI::CallForAllHelp&) {
        out << p.app.help("", CLI::AppFormatMode::All);
        help_shown = true;
        return cfg;
    }
    if (p.gates->parsed()) {
        cfg.command = Command::gates;
    } else if (p.scatter->parsed()) {
        cfg.command = Command::scatter;
    } else if (p.classical->parsed()) {
        cfg.command = Command::classical;
    } else {
        cfg.command = Command::pipeline;
    }
    cfg.delta_e_set = p.delta_e->count() > 0;
    if (cfg.delta_e_set) {
        require_finite(cfg.delta_e, "delta-e");
    }
    return cfg;
}

} // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.gates.theta_max = kTwoPi;
    cfg.gates.phi1_max = kTwoPi;
    return cfg;
}

void execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.command) {
    case Command::gates:
        run_gates(cfg, out);
        return;
    case Command::scatter:
        run_scatter(cfg, out);
        return;
    case Command::classical:
        run_classical(cfg, out);
        return;
    case Command::pipeline:
        run_pipeline(cfg, out, err);
        return;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        bool help_shown = false;
        const RunConfig cfg = parse(args, out, help_shown);
        if (help_shown) {
            return kExitOk;
        }
        execute(cfg, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace flyq::cli
