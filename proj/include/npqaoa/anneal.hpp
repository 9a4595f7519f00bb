#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "npqaoa/qubo.hpp"
#include "npqaoa/rng.hpp"

namespace npqaoa {

// Settings for the classical annealing baseline. A non-positive t_hi asks
// for the automatic scale 10 * max_i(|linear_i| + sum_j quad_ij), an upper
// estimate of the largest single-flip energy change.
struct AnnealConfig {
    std::size_t reads = 1000;
    std::size_t sweeps = 1000;
    double t_hi = 0.0;
    double t_lo = 0.1;
    std::uint64_t seed = 0;
};

inline void validate_anneal(const AnnealConfig& cfg) {
    if (cfg.reads < 1) {
        throw std::invalid_argument("anneal: reads must be at least 1");
    }
    if (cfg.t_hi > 0.0 && !(cfg.t_hi > cfg.t_lo)) {
        throw std::invalid_argument("anneal: need t_hi > t_lo");
    }
    if (!(cfg.t_lo > 0.0)) {
        throw std::invalid_argument("anneal: need t_lo > 0");
    }
}

struct AnnealDiagnostics {
    std::vector<std::int64_t> read_energies;  // best energy of each read
};

namespace detail {

inline double auto_t_hi(const QuboModel& model) {
    std::int64_t worst = 1;
    for (std::size_t i = 0; i < model.n; ++i) {
        std::int64_t mag = std::abs(model.linear[i]);
        for (std::size_t j = 0; j < model.n; ++j) {
            if (j == i) continue;
            mag += i < j ? model.quad(i, j) : model.quad(j, i);
        }
        worst = std::max(worst, mag);
    }
    return 10.0 * static_cast<double>(worst);
}

// One read: random start, then `sweeps` passes of single-bit-flip
// Metropolis moves under a geometric cooling schedule from t_hi to t_lo.
// Returns the best assignment seen during the read. `on_sweep` (when set)
// observes the state index after every sweep.
inline std::pair<Bitstring, std::int64_t> metropolis_read(
    const QuboModel& model, std::size_t sweeps, double t_hi, double t_lo, Rng& rng,
    const std::function<void(std::uint64_t)>& on_sweep = {}) {
    const std::size_t n = model.n;
    Bitstring state(n);
    for (std::size_t q = 0; q < n; ++q) {
        state[q] = static_cast<std::uint8_t>(rng.below(2));
    }
    // local fields: flipping bit q changes the energy by (1 - 2 z_q) * field_q
    std::vector<std::int64_t> field(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::int64_t f = model.linear[q];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == q || !state[j]) continue;
            f += q < j ? model.quad(q, j) : model.quad(j, q);
        }
        field[q] = f;
    }
    std::int64_t current = qubo_value(model, state);
    Bitstring best = state;
    std::int64_t best_energy = current;

    const double ratio = t_hi > 0.0 ? t_lo / t_hi : 1.0;
    for (std::size_t s = 0; s < sweeps; ++s) {
        const double frac = sweeps > 1
                                ? static_cast<double>(s) / static_cast<double>(sweeps - 1)
                                : 1.0;
        const double temperature = t_hi * std::pow(ratio, frac);
        for (std::size_t q = 0; q < n; ++q) {
            const std::int64_t delta = (1 - 2 * std::int64_t{state[q]}) * field[q];
            bool accept = delta <= 0;
            if (!accept) {
                accept = rng.uniform01() <
                         std::exp(-static_cast<double>(delta) / temperature);
            }
            if (!accept) continue;
            const std::int64_t sign = state[q] ? -1 : 1;
            state[q] ^= 1u;
            current += delta;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == q) continue;
                field[j] += sign * (q < j ? model.quad(q, j) : model.quad(j, q));
            }
            if (current < best_energy) {
                best_energy = current;
                best = state;
            }
        }
        if (on_sweep) on_sweep(bits_to_index(state));
    }
    return {std::move(best), best_energy};
}

}  // namespace detail

// Best-of-`reads` single-flip Metropolis annealing on the QUBO. Each read
// draws its RNG stream from (seed, read index), so reads are independent
// and the result does not depend on scheduling.
inline PartitionSolution simulated_anneal(const QuboModel& model,
                                          const AnnealConfig& cfg,
                                          AnnealDiagnostics* diag = nullptr) {
    validate_anneal(cfg);
    const double t_hi = cfg.t_hi > 0.0 ? cfg.t_hi : detail::auto_t_hi(model);
    if (!(t_hi > cfg.t_lo)) {
        throw std::invalid_argument("anneal: need t_hi > t_lo");
    }

    Bitstring best;
    std::int64_t best_energy = 0;
    bool first = true;
    for (std::size_t read = 0; read < cfg.reads; ++read) {
        Rng rng(derive_seed(cfg.seed, {read}));
        auto [bits, energy] =
            detail::metropolis_read(model, cfg.sweeps, t_hi, cfg.t_lo, rng);
        if (diag) diag->read_energies.push_back(energy);
        if (first || energy < best_energy) {
            best = std::move(bits);
            best_energy = energy;
            first = false;
        }
    }
    return make_solution(model.instance, std::move(best));
}

// Provably optimal partition, choosing the cheaper exact method: full
// enumeration for small variable counts, otherwise subset-sum reachability
// when the element total allows it.
inline PartitionSolution exact_best(const NppInstance& instance) {
    validate_instance(instance);
    if (instance.size() <= 12) {
        return brute_force_best(instance);
    }
    if (instance.total() <= 10000000) {
        return dp_best_partition(instance);
    }
    throw capability_error(
        "exact_best: instance exceeds both exact-method bounds (n > 12 and c > 1e7)");
}

}  // namespace npqaoa
