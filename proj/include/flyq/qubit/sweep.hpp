#pragma once

#include "flyq/qubit/network.hpp"
#include "flyq/simd/dispatch.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace flyq::qubit {

/// fig3/fig4: non-entangling gate splits theta evenly (phi1 = phi2 = theta/2).
/// phi1:      non-entangling gate uses phi2 = theta - phi1 over a 2D grid.
enum class SweepMode { fig3, fig4, phi1 };

/// Inclusive uniform ranges. In phi1 mode the table is theta-major.
struct SweepGrid {
    double theta_min = 0.0;
    double theta_max = 0.0;
    std::size_t theta_steps = 0;
    double phi1_min = 0.0;
    double phi1_max = 0.0;
    std::size_t phi1_steps = 1;
};

/// Inclusive uniform sampling; steps == 1 yields {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t steps);

struct NetworkOutput {
    std::array<double, 4> probabilities{}; // basis order |1,1>, |1,0>, |0,1>, |0,0>
    double prob_a1 = 0.0;
    double prob_a0 = 0.0;
};

struct SweepRow {
    double theta = 0.0;
    double phi1 = 0.0; // phi1 of the non-entangling gate
    double phi2 = 0.0; // phi2 of the non-entangling gate
    NetworkOutput entangling;
    NetworkOutput non_entangling;
    double tvd = 0.0; // 1/2 sum |p_i - q_i|
};

struct SweepTable {
    SweepMode mode = SweepMode::fig3;
    Convention convention = Convention::literal;
    std::vector<SweepRow> rows;
};

struct SweepOptions {
    Convention convention = Convention::literal;
    simd::SimdLevel simd = simd::best_available();
    Basis input = Basis::k11;
};

/// Evaluates both network variants on every grid point. Throws
/// std::invalid_argument for an empty grid or theta outside [0, 2 pi].
SweepTable sweep(SweepMode mode, const SweepGrid& grid, const SweepOptions& options = {});

double total_variation(const std::array<double, 4>& p, const std::array<double, 4>& q);

} // namespace flyq::qubit
