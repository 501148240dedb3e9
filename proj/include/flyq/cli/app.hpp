#pragma once

#include "flyq/gaas/pipeline.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace flyq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

enum class Command { gates, scatter, classical, pipeline };

struct GatesOptions {
    std::string mode = "fig3";              // fig3 | fig4 | phi1
    std::string convention = "literal";     // literal | reversed-v | swapped-basis | q-swap | audit
    double theta_min = 0.0;
    double theta_max = 0.0;                 // set to 2 pi by default_config()
    long long theta_steps = 201;
    double phi1_min = 0.0;
    double phi1_max = 0.0;                  // 2 pi
    long long phi1_steps = 201;
    std::string simd = "auto";
    std::string report;                     // audit text destination
};

struct ScatterOptions {
    double k_min = 1e-4;
    double k_max = 2.0;
    long long k_steps = 400;
    std::string spacing = "log";            // log | linear
    double v0 = 32.14;
    double alpha = 2.0;
};

struct ClassicalOptions {
    double v0 = 32.14;
    double alpha = 2.0;
    std::string energies;                   // comma list [E0]; empty = multiples of v0
    double x_min = -3.0;
    double x_max = 3.0;
    long long x_steps = 241;
    std::string trajectory_out;
    double er = 0.0;                        // 0 = v0 / 2
    double ecm = 100.0;
    double dt = 1e-3;
    double t_span = 20.0;
    long long stride = 100;
};

struct RunConfig {
    Command command = Command::gates;
    GatesOptions gates;
    ScatterOptions scatter;
    ClassicalOptions classical;
    gaas::MaterialConfig material;
    std::string relative = "full";          // full | half
    bool delta_e_set = false;
    double delta_e = 0.0;
    std::string out;
    std::vector<std::string> arguments;     // as given, for the .meta sidecar
};

RunConfig default_config();

/// Parses and executes. `args` excludes the program name. Data goes to
/// `out` (or the --out file), diagnostics to `err`. Returns kExitOk,
/// kExitUsage (bad flags, config or argument values) or kExitDomain
/// (numerical domain errors and I/O failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-validated configuration; throws on failure.
void execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace flyq::cli
