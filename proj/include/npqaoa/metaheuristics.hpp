#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "npqaoa/optimizer.hpp"
#include "npqaoa/rng.hpp"

namespace npqaoa {

// Differential evolution, rand/1/bin. Synchronous generations: every trial
// vector is built from the incoming population and all RNG draws happen
// before any trial is evaluated, so evaluations could run concurrently
// without changing the result. Selection replaces the target when the trial
// cost is less than or equal to it.
inline OptimizerTrace optimize_de(const ObjectiveSpec& obj,
                                  const OptimizerConfig& cfg, Rng& rng,
                                  OptimizerDiagnostics* diag = nullptr) {
    validate_objective(obj);
    if (cfg.population < 4) {
        throw std::invalid_argument(
            "optimize_de: population must be at least 4 (target plus three partners)");
    }
    if (!(cfg.de_weight >= 0.0) || cfg.de_weight >= 2.0) {
        throw std::invalid_argument("optimize_de: weight F must lie in [0, 2)");
    }
    if (!(cfg.de_crossover >= 0.0) || cfg.de_crossover > 1.0) {
        throw std::invalid_argument("optimize_de: crossover CR must lie in [0, 1]");
    }

    const std::size_t n = cfg.population;
    const std::size_t dim = obj.dimension;
    OptimizerTrace trace;

    std::vector<std::vector<double>> pop(n);
    std::vector<double> costs(n);
    for (std::size_t i = 0; i < n; ++i) {
        pop[i] = detail::random_point(obj.bounds, rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        costs[i] = obj.evaluate(pop[i]);
        ++trace.evaluations;
        detail::record_best(trace, pop[i], costs[i]);
    }
    trace.best_costs.push_back(trace.best_cost);
    if (diag) diag->generation_costs.push_back(costs);

    std::vector<std::vector<double>> trials(n, std::vector<double>(dim));
    for (std::size_t iter = 0; iter < cfg.iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r1 = i, r2 = i, r3 = i;
            while (r1 == i) r1 = rng.below(n);
            while (r2 == i || r2 == r1) r2 = rng.below(n);
            while (r3 == i || r3 == r1 || r3 == r2) r3 = rng.below(n);

            const std::size_t forced = rng.below(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                double v = pop[r1][d] + cfg.de_weight * (pop[r2][d] - pop[r3][d]);
                v = detail::clamp_to(v, obj.bounds[d]);
                const bool cross = rng.uniform01() <= cfg.de_crossover || d == forced;
                trials[i][d] = cross ? v : pop[i][d];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double trial_cost = obj.evaluate(trials[i]);
            ++trace.evaluations;
            detail::record_best(trace, trials[i], trial_cost);
            if (trial_cost <= costs[i]) {
                pop[i] = trials[i];
                costs[i] = trial_cost;
            }
        }
        trace.best_costs.push_back(trace.best_cost);
        if (diag) diag->generation_costs.push_back(costs);
    }
    return trace;
}

namespace detail {

inline std::vector<double> decode_chromosome(const std::vector<std::uint8_t>& bits,
                                             const std::vector<Bounds>& bounds,
                                             std::size_t bits_per_gene) {
    std::vector<double> x(bounds.size());
    const double denom =
        static_cast<double>((std::uint64_t{1} << bits_per_gene) - 1);
    for (std::size_t d = 0; d < bounds.size(); ++d) {
        std::uint64_t g = 0;
        for (std::size_t b = 0; b < bits_per_gene; ++b) {
            g = (g << 1) | bits[d * bits_per_gene + b];
        }
        const double span = bounds[d].hi - bounds[d].lo;
        x[d] = denom == 0.0 ? bounds[d].lo
                            : bounds[d].lo + static_cast<double>(g) * span / denom;
    }
    return x;
}

}  // namespace detail

// Genetic algorithm over binary chromosomes of length dimension * ga_bits.
// Roulette-wheel parent selection on fitness 1/(1 + cost), uniform
// crossover, per-bit mutation, generational replacement where the previous
// elite displaces the worst offspring (its cost is cached, not re-spent), so
// every generation costs exactly `population` evaluations.
inline OptimizerTrace optimize_ga(const ObjectiveSpec& obj,
                                  const OptimizerConfig& cfg, Rng& rng,
                                  OptimizerDiagnostics* diag = nullptr) {
    validate_objective(obj);
    if (cfg.population < 2) {
        throw std::invalid_argument("optimize_ga: population must be at least 2");
    }
    if (cfg.ga_bits < 1 || cfg.ga_bits > 32) {
        throw std::invalid_argument("optimize_ga: bits per gene must lie in [1, 32]");
    }
    if (cfg.ga_mutation > 1.0) {
        throw std::invalid_argument("optimize_ga: mutation rate must be at most 1");
    }

    const std::size_t n = cfg.population;
    const std::size_t length = obj.dimension * cfg.ga_bits;
    const double mutation_rate =
        cfg.ga_mutation < 0.0 ? 1.0 / static_cast<double>(length) : cfg.ga_mutation;

    OptimizerTrace trace;
    using Chromosome = std::vector<std::uint8_t>;
    std::vector<Chromosome> pop(n, Chromosome(length));
    std::vector<double> costs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < length; ++b) {
            pop[i][b] = static_cast<std::uint8_t>(rng.below(2));
        }
    }
    std::vector<std::vector<double>> decoded(n);
    for (std::size_t i = 0; i < n; ++i) {
        decoded[i] = detail::decode_chromosome(pop[i], obj.bounds, cfg.ga_bits);
        costs[i] = obj.evaluate(decoded[i]);
        ++trace.evaluations;
        detail::record_best(trace, decoded[i], costs[i]);
    }
    trace.best_costs.push_back(trace.best_cost);
    if (diag) diag->generation_costs.push_back(costs);

    for (std::size_t iter = 0; iter < cfg.iterations; ++iter) {
        const std::size_t elite_idx = static_cast<std::size_t>(
            std::min_element(costs.begin(), costs.end()) - costs.begin());
        const Chromosome elite = pop[elite_idx];
        const double elite_cost = costs[elite_idx];

        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = 1.0 / (1.0 + costs[i]);
        }

        std::vector<Chromosome> children(n, Chromosome(length));
        for (std::size_t i = 0; i < n; ++i) {
            const Chromosome& p1 = pop[detail::pick_weighted(weights, rng)];
            const Chromosome& p2 = pop[detail::pick_weighted(weights, rng)];
            for (std::size_t b = 0; b < length; ++b) {
                children[i][b] = rng.uniform01() <= 0.5 ? p1[b] : p2[b];
            }
            for (std::size_t b = 0; b < length; ++b) {
                if (rng.uniform01() < mutation_rate) {
                    children[i][b] ^= 1u;
                }
            }
        }

        std::vector<double> child_costs(n);
        for (std::size_t i = 0; i < n; ++i) {
            decoded[i] = detail::decode_chromosome(children[i], obj.bounds, cfg.ga_bits);
            child_costs[i] = obj.evaluate(decoded[i]);
            ++trace.evaluations;
            detail::record_best(trace, decoded[i], child_costs[i]);
        }
        const std::size_t worst_idx = static_cast<std::size_t>(
            std::max_element(child_costs.begin(), child_costs.end()) -
            child_costs.begin());
        if (elite_cost < child_costs[worst_idx]) {
            children[worst_idx] = elite;
            child_costs[worst_idx] = elite_cost;
        }
        pop = std::move(children);
        costs = std::move(child_costs);
        trace.best_costs.push_back(trace.best_cost);
        if (diag) diag->generation_costs.push_back(costs);
    }
    return trace;
}

// Particle swarm with inertia plus cognitive/social pulls, fresh uniform
// draws per component. Velocities start at zero, are clamped to the box
// width per dimension, and positions are clamped to the box. Personal and
// global bests update on <= comparisons.
inline OptimizerTrace optimize_pso(const ObjectiveSpec& obj,
                                   const OptimizerConfig& cfg, Rng& rng,
                                   OptimizerDiagnostics* diag = nullptr) {
    validate_objective(obj);
    if (cfg.population < 1) {
        throw std::invalid_argument("optimize_pso: population must be at least 1");
    }
    if (cfg.pso_inertia < 0.0 || cfg.pso_cognitive < 0.0 || cfg.pso_social < 0.0) {
        throw std::invalid_argument("optimize_pso: coefficients must be non-negative");
    }

    const std::size_t n = cfg.population;
    const std::size_t dim = obj.dimension;
    OptimizerTrace trace;

    std::vector<std::vector<double>> pos(n), vel(n, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> pbest(n);
    std::vector<double> costs(n), pbest_cost(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[i] = detail::random_point(obj.bounds, rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        costs[i] = obj.evaluate(pos[i]);
        ++trace.evaluations;
        detail::record_best(trace, pos[i], costs[i]);
        pbest[i] = pos[i];
        pbest_cost[i] = costs[i];
    }
    std::vector<double> gbest = pbest[0];
    double gbest_cost = pbest_cost[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (pbest_cost[i] <= gbest_cost) {
            gbest = pbest[i];
            gbest_cost = pbest_cost[i];
        }
    }
    trace.best_costs.push_back(trace.best_cost);
    if (diag) diag->generation_costs.push_back(costs);

    for (std::size_t iter = 0; iter < cfg.iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                const double span = obj.bounds[d].hi - obj.bounds[d].lo;
                double v = cfg.pso_inertia * vel[i][d] +
                           cfg.pso_cognitive * r1 * (pbest[i][d] - pos[i][d]) +
                           cfg.pso_social * r2 * (gbest[d] - pos[i][d]);
                v = std::clamp(v, -span, span);
                vel[i][d] = v;
                pos[i][d] = detail::clamp_to(pos[i][d] + v, obj.bounds[d]);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            costs[i] = obj.evaluate(pos[i]);
            ++trace.evaluations;
            detail::record_best(trace, pos[i], costs[i]);
            if (costs[i] <= pbest_cost[i]) {
                pbest[i] = pos[i];
                pbest_cost[i] = costs[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (pbest_cost[i] <= gbest_cost) {
                gbest = pbest[i];
                gbest_cost = pbest_cost[i];
            }
        }
        trace.best_costs.push_back(trace.best_cost);
        if (diag) diag->generation_costs.push_back(costs);
    }
    if (diag) diag->final_pbest_costs = pbest_cost;
    return trace;
}

// Ant colony over a per-dimension discretization: each of the K bin centers
// per dimension carries a pheromone level and a desirability derived from
// the best cost previously observed through that bin (1 for untried bins).
// Ants pick one bin per dimension with probability proportional to
// tau^alpha * eta^beta; after each wave the table evaporates by (1 - rho)
// and every ant deposits 1/(1 + cost) on its chosen bins. Wave 0 samples the
// uniform initial table and plays the role the initial population has in the
// other methods, so the run costs population * (iterations + 1) evaluations.
inline OptimizerTrace optimize_aco(const ObjectiveSpec& obj,
                                   const OptimizerConfig& cfg, Rng& rng,
                                   OptimizerDiagnostics* diag = nullptr) {
    validate_objective(obj);
    if (cfg.population < 1) {
        throw std::invalid_argument("optimize_aco: population must be at least 1");
    }
    if (cfg.aco_bins < 1) {
        throw std::invalid_argument("optimize_aco: need at least one bin per dimension");
    }
    if (!(cfg.aco_evaporation > 0.0) || cfg.aco_evaporation > 1.0) {
        throw std::invalid_argument("optimize_aco: evaporation must lie in (0, 1]");
    }
    if (!(cfg.aco_tau0 > 0.0)) {
        throw std::invalid_argument("optimize_aco: initial pheromone must be positive");
    }
    if (cfg.aco_alpha < 0.0 || cfg.aco_beta < 0.0) {
        throw std::invalid_argument("optimize_aco: alpha and beta must be non-negative");
    }
    const std::size_t n = cfg.population;
    const std::size_t dim = obj.dimension;
    const std::size_t bins = cfg.aco_bins;
    if (bins > 4000000 / std::max<std::size_t>(dim, 1)) {
        throw capability_error("optimize_aco: pheromone table too large");
    }

    std::vector<std::vector<double>> centers(dim, std::vector<double>(bins));
    for (std::size_t d = 0; d < dim; ++d) {
        const double span = obj.bounds[d].hi - obj.bounds[d].lo;
        for (std::size_t k = 0; k < bins; ++k) {
            centers[d][k] = obj.bounds[d].lo +
                            (static_cast<double>(k) + 0.5) * span /
                                static_cast<double>(bins);
        }
    }
    std::vector<std::vector<double>> tau(dim, std::vector<double>(bins, cfg.aco_tau0));
    constexpr double kUnseen = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best_seen(dim, std::vector<double>(bins, kUnseen));

    OptimizerTrace trace;
    std::vector<double> weights(bins), probs(bins);
    std::vector<std::vector<std::size_t>> choices(n, std::vector<std::size_t>(dim));
    std::vector<double> wave_costs(n);
    std::vector<double> point(dim);

    for (std::size_t wave = 0; wave <= cfg.iterations; ++wave) {
        // All choices first: the table is frozen for the whole wave, so the
        // wave's evaluations are order-independent.
        for (std::size_t ant = 0; ant < n; ++ant) {
            for (std::size_t d = 0; d < dim; ++d) {
                double total = 0.0;
                bool usable = true;
                for (std::size_t k = 0; k < bins; ++k) {
                    const double eta =
                        best_seen[d][k] == kUnseen ? 1.0 : 1.0 / (1.0 + best_seen[d][k]);
                    const double w =
                        std::pow(tau[d][k], cfg.aco_alpha) * std::pow(eta, cfg.aco_beta);
                    if (!std::isfinite(w) || w < 0.0) usable = false;
                    weights[k] = w;
                    total += w;
                }
                if (!usable || total <= 0.0) {
                    std::fill(probs.begin(), probs.end(),
                              1.0 / static_cast<double>(bins));
                } else {
                    for (std::size_t k = 0; k < bins; ++k) probs[k] = weights[k] / total;
                }
                if (diag) {
                    double sum = 0.0;
                    for (double p : probs) sum += p;
                    diag->aco_max_prob_error =
                        std::max(diag->aco_max_prob_error, std::abs(sum - 1.0));
                }
                const double u = rng.uniform01();
                double acc = 0.0;
                std::size_t pick = bins - 1;
                for (std::size_t k = 0; k < bins; ++k) {
                    acc += probs[k];
                    if (u < acc) {
                        pick = k;
                        break;
                    }
                }
                choices[ant][d] = pick;
            }
        }
        for (std::size_t ant = 0; ant < n; ++ant) {
            for (std::size_t d = 0; d < dim; ++d) {
                point[d] = centers[d][choices[ant][d]];
            }
            wave_costs[ant] = obj.evaluate(point);
            ++trace.evaluations;
            detail::record_best(trace, point, wave_costs[ant]);
        }
        for (std::size_t ant = 0; ant < n; ++ant) {
            for (std::size_t d = 0; d < dim; ++d) {
                double& seen = best_seen[d][choices[ant][d]];
                seen = std::min(seen, wave_costs[ant]);
            }
        }
        for (std::size_t d = 0; d < dim; ++d) {
            for (std::size_t k = 0; k < bins; ++k) {
                tau[d][k] *= 1.0 - cfg.aco_evaporation;
            }
        }
        for (std::size_t ant = 0; ant < n; ++ant) {
            const double deposit = 1.0 / (1.0 + wave_costs[ant]);
            for (std::size_t d = 0; d < dim; ++d) {
                tau[d][choices[ant][d]] += deposit;
            }
        }
        if (diag) {
            for (std::size_t d = 0; d < dim; ++d) {
                for (std::size_t k = 0; k < bins; ++k) {
                    diag->aco_min_pheromone =
                        std::min(diag->aco_min_pheromone, tau[d][k]);
                }
            }
            diag->generation_costs.push_back(wave_costs);
        }
        trace.best_costs.push_back(trace.best_cost);
    }
    if (diag) diag->aco_pheromone = tau;
    return trace;
}

}  // namespace npqaoa
