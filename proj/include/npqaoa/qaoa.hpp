#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "npqaoa/qubo.hpp"
#include "npqaoa/statevector.hpp"

namespace npqaoa {

// The 2p variational angles of a p-layer ansatz. Flat layout for optimizers
// is [gamma_1..gamma_p, beta_1..beta_p].
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t layers() const { return gammas.size(); }

    static QaoaParams zeros(std::size_t p) {
        QaoaParams params;
        params.gammas.assign(p, 0.0);
        params.betas.assign(p, 0.0);
        return params;
    }

    // Initial angles drawn uniformly from (-pi, pi), gammas first.
    static QaoaParams random(std::size_t p, Rng& rng) {
        QaoaParams params;
        params.gammas.reserve(p);
        params.betas.reserve(p);
        for (std::size_t k = 0; k < p; ++k) {
            params.gammas.push_back(rng.uniform(-std::numbers::pi, std::numbers::pi));
        }
        for (std::size_t k = 0; k < p; ++k) {
            params.betas.push_back(rng.uniform(-std::numbers::pi, std::numbers::pi));
        }
        return params;
    }

    static QaoaParams from_flat(std::span<const double> flat) {
        if (flat.size() % 2 != 0) {
            throw std::invalid_argument("QaoaParams: flat vector must have even length");
        }
        const std::size_t p = flat.size() / 2;
        QaoaParams params;
        params.gammas.assign(flat.begin(), flat.begin() + p);
        params.betas.assign(flat.begin() + p, flat.end());
        return params;
    }

    std::vector<double> to_flat() const {
        std::vector<double> flat;
        flat.reserve(gammas.size() + betas.size());
        flat.insert(flat.end(), gammas.begin(), gammas.end());
        flat.insert(flat.end(), betas.begin(), betas.end());
        return flat;
    }
};

// Rotation angles realizing one cost layer at a given gamma. `rzz` follows
// the model's flat upper-triangular pair order.
struct CostLayerAngles {
    std::vector<double> rz;
    std::vector<double> rzz;
};

// Per-qubit RZ angle (1/2)(linear_i + sum_{j != i} quad_ij) gamma and
// per-pair RZZ angle (1/4) quad_ij gamma.
inline CostLayerAngles cost_layer_angles(const QuboModel& model, double gamma) {
    CostLayerAngles angles;
    angles.rz.resize(model.n);
    angles.rzz.reserve(model.quad_flat.size());
    for (std::size_t i = 0; i < model.n; ++i) {
        double coeff = static_cast<double>(model.linear[i]);
        for (std::size_t j = 0; j < model.n; ++j) {
            if (j == i) continue;
            coeff += static_cast<double>(i < j ? model.quad(i, j) : model.quad(j, i));
        }
        angles.rz[i] = 0.5 * coeff * gamma;
    }
    for (std::int64_t q : model.quad_flat) {
        angles.rzz.push_back(0.25 * static_cast<double>(q) * gamma);
    }
    return angles;
}

// RX angle applied uniformly on every qubit of a mixer layer.
inline double mixer_angle(double beta) { return 2.0 * beta; }

// Uniform initialization, then p repetitions of cost layer (RZ by ascending
// qubit, RZZ by ascending pair) and mixer layer (RX by ascending qubit).
inline StateVector run_ansatz(const QuboModel& model, const QaoaParams& params) {
    if (params.gammas.size() != params.betas.size()) {
        throw std::invalid_argument("run_ansatz: gamma/beta layer counts differ");
    }
    StateVector state = init_uniform(model.n);
    for (std::size_t layer = 0; layer < params.layers(); ++layer) {
        const CostLayerAngles angles = cost_layer_angles(model, params.gammas[layer]);
        for (std::size_t q = 0; q < model.n; ++q) {
            state.apply_rz(q, angles.rz[q]);
        }
        std::size_t pair = 0;
        for (std::size_t i = 0; i < model.n; ++i) {
            for (std::size_t j = i + 1; j < model.n; ++j) {
                state.apply_rzz(i, j, angles.rzz[pair++]);
            }
        }
        const double theta = mixer_angle(params.betas[layer]);
        for (std::size_t q = 0; q < model.n; ++q) {
            state.apply_rx(q, theta);
        }
    }
    return state;
}

// Exact expected energy of the ansatz state. No shot noise: the expectation
// comes straight from the amplitudes, so optimizer comparisons are
// deterministic and repeatable.
inline double objective(const QuboModel& model, const QaoaParams& params) {
    const std::vector<double> energies = energy_table(model);
    return expectation_diag(run_ansatz(model, params), energies);
}

// Shot-based estimator of the same expectation, kept for experiments with
// measurement noise. Not used by the benchmark paths.
inline double objective_sampled(const QuboModel& model, const QaoaParams& params,
                                std::size_t shots, Rng& rng) {
    const std::vector<double> energies = energy_table(model);
    const StateVector state = run_ansatz(model, params);
    double total = 0.0;
    for (std::uint64_t k : sample_indices(state, shots, rng)) {
        total += energies[k];
    }
    return total / static_cast<double>(shots);
}

// Measurement budget for the final solution read-out:
// floor(log10(2^n)) = floor(n log10 2), clamped to at least one draw.
inline std::size_t sample_count(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("sample_count: n must be at least 1");
    }
    const auto s = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * std::log10(2.0)));
    return s < 1 ? 1 : s;
}

// Result of sampling the tuned circuit: the best drawn partition plus the
// counters a benchmark row needs.
struct QaoaOutcome {
    PartitionSolution best;
    QaoaParams params;
    double objective_value = 0.0;
    std::size_t evaluations = 0;
    std::size_t samples_taken = 0;
    double wall_time_s = 0.0;
};

// Draws sample_count(n) bitstrings from the final state and keeps the one
// with minimal energy (ties toward the smallest big-endian index).
// `evaluations_used` lets callers carry the optimizer's objective-call count
// into the outcome.
inline QaoaOutcome finalize(const QuboModel& model, const QaoaParams& params,
                            Rng& rng, std::size_t evaluations_used = 0) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> energies = energy_table(model);
    const StateVector state = run_ansatz(model, params);

    QaoaOutcome outcome;
    outcome.params = params;
    outcome.evaluations = evaluations_used;
    outcome.samples_taken = sample_count(model.n);
    outcome.objective_value = expectation_diag(state, energies);

    std::uint64_t best_index = 0;
    double best_energy = 0.0;
    bool first = true;
    for (std::uint64_t k : sample_indices(state, outcome.samples_taken, rng)) {
        const double e = energies[k];
        if (first || e < best_energy || (e == best_energy && k < best_index)) {
            best_index = k;
            best_energy = e;
            first = false;
        }
    }
    outcome.best = make_solution(model.instance, index_to_bits(best_index, model.n));

    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    outcome.wall_time_s = std::max(elapsed.count(), 1e-9);
    return outcome;
}

}  // namespace npqaoa
