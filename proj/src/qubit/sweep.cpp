#include "flyq/qubit/sweep.hpp"

#include "flyq/simd/network_batch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace flyq::qubit {

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < steps; ++i) {
        out.push_back(i + 1 == steps ? hi
                                     : lo + span * static_cast<double>(i) /
                                                static_cast<double>(steps - 1));
    }
    return out;
}

double total_variation(const std::array<double, 4>& p, const std::array<double, 4>& q) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        sum += std::abs(p[i] - q[i]);
    }
    return 0.5 * sum;
}

namespace {

void fill_phases(simd::ComplexColumns& cols, std::size_t i, const Amplitudes4& diag) {
    for (std::size_t j = 0; j < 4; ++j) {
        cols.set(j, i, diag[j]);
    }
}

std::vector<NetworkOutput> evaluate(const simd::BatchNetwork& net,
                                    const simd::ComplexColumns& phases, simd::SimdLevel level) {
    const std::size_t n = phases.size();
    simd::ComplexColumns amps(n);
    simd::network_batch(net, phases.view(), amps.view(), level);
    std::array<std::vector<double>, 4> prob;
    std::array<std::span<double>, 4> prob_view;
    for (std::size_t j = 0; j < 4; ++j) {
        prob[j].assign(n, 0.0);
        prob_view[j] = prob[j];
    }
    simd::squared_modulus(std::as_const(amps).view(), prob_view, level);

    std::vector<NetworkOutput> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i].probabilities[j] = prob[j][i];
        }
        out[i].prob_a1 = prob[0][i] + prob[1][i];
        out[i].prob_a0 = prob[2][i] + prob[3][i];
    }
    return out;
}

} // namespace

SweepTable sweep(SweepMode mode, const SweepGrid& grid, const SweepOptions& options) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const std::size_t phi_steps = mode == SweepMode::phi1 ? grid.phi1_steps : 1;
    if (grid.theta_steps == 0 || phi_steps == 0) {
        throw std::invalid_argument("sweep grid is empty");
    }
    if (!(grid.theta_min >= 0.0) || !(grid.theta_max <= two_pi + 1e-12) ||
        grid.theta_min > grid.theta_max) {
        throw std::invalid_argument("theta range must lie inside [0, 2 pi]");
    }

    const std::vector<double> thetas = linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
    const std::vector<double> phis = mode == SweepMode::phi1
                                         ? linspace(grid.phi1_min, grid.phi1_max, phi_steps)
                                         : std::vector<double>{0.0};

    SweepTable table;
    table.mode = mode;
    table.convention = options.convention;
    table.rows.resize(thetas.size() * phis.size());

    simd::ComplexColumns ent_phases(table.rows.size());
    simd::ComplexColumns non_phases(table.rows.size());
    std::size_t i = 0;
    for (double theta : thetas) {
        for (double phi1 : phis) {
            SweepRow& row = table.rows[i];
            row.theta = theta;
            if (mode == SweepMode::phi1) {
                row.phi1 = phi1;
                row.phi2 = theta - phi1;
            } else {
                row.phi1 = 0.5 * theta;
                row.phi2 = 0.5 * theta;
            }
            fill_phases(ent_phases, i, entangler_diagonal({0.0, 0.0, theta}, options.convention));
            fill_phases(non_phases, i,
                        entangler_diagonal({row.phi1, row.phi2, theta}, options.convention));
            ++i;
        }
    }

    const NetworkLayout layout = network_layout(options.convention);
    const simd::BatchNetwork net{
        layout.outer, layout.middle,
        multiply(layout.inner, TwoQubitState::basis(options.input).amplitudes())};

    const std::vector<NetworkOutput> ent = evaluate(net, ent_phases, options.simd);
    const std::vector<NetworkOutput> non = evaluate(net, non_phases, options.simd);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        table.rows[r].entangling = ent[r];
        table.rows[r].non_entangling = non[r];
        table.rows[r].tvd = total_variation(ent[r].probabilities, non[r].probabilities);
    }
    return table;
}

} // namespace flyq::qubit
