#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "npqaoa/qaoa.hpp"
#include "npqaoa/rng.hpp"

namespace npqaoa {

struct Bounds {
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
};

// A black-box minimization target: a pure cost function over a box.
// `evaluate` must be deterministic; every optimizer here relies on it.
struct ObjectiveSpec {
    std::size_t dimension = 0;
    std::function<double(const std::vector<double>&)> evaluate;
    std::vector<Bounds> bounds;
};

inline ObjectiveSpec make_objective(
    std::size_t dimension, std::function<double(const std::vector<double>&)> fn,
    Bounds box = Bounds{}) {
    ObjectiveSpec spec;
    spec.dimension = dimension;
    spec.evaluate = std::move(fn);
    spec.bounds.assign(dimension, box);
    return spec;
}

inline void validate_objective(const ObjectiveSpec& spec) {
    if (spec.dimension == 0) {
        throw std::invalid_argument("objective dimension must be at least 1");
    }
    if (!spec.evaluate) {
        throw std::invalid_argument("objective has no evaluate function");
    }
    if (spec.bounds.size() != spec.dimension) {
        throw std::invalid_argument("objective bounds size mismatch");
    }
    for (const Bounds& b : spec.bounds) {
        if (!(b.lo <= b.hi)) {
            throw std::invalid_argument("objective bounds need lo <= hi");
        }
    }
}

// Shared optimizer settings plus the per-algorithm knobs. Defaults follow
// the canonical published values for each method.
struct OptimizerConfig {
    std::size_t population = 10;
    std::size_t iterations = 50;
    std::uint64_t seed = 0;

    // differential evolution
    double de_weight = 0.8;     // F in (0, 2)
    double de_crossover = 0.9;  // CR in [0, 1]

    // genetic algorithm
    std::size_t ga_bits = 16;   // bits per encoded parameter
    double ga_mutation = -1.0;  // per-bit flip rate; negative selects 1/L

    // particle swarm
    double pso_inertia = 0.729;
    double pso_cognitive = 1.49445;
    double pso_social = 1.49445;

    // ant colony
    double aco_alpha = 1.0;
    double aco_beta = 2.0;
    double aco_evaporation = 0.1;  // rho in (0, 1]
    double aco_tau0 = 1.0;
    std::size_t aco_bins = 32;     // bins per dimension
};

// Per-run instrumentation: best-so-far trajectory plus the final answer.
// `best_costs` gets one entry per recorded step (initial population where
// the method has one, then one per iteration) and never increases.
struct OptimizerTrace {
    std::vector<double> best_costs;
    std::size_t evaluations = 0;
    std::vector<double> best_point;
    double best_cost = std::numeric_limits<double>::infinity();
};

// Optional deep instrumentation for property tests.
struct OptimizerDiagnostics {
    // Population cost vectors, one row per recorded generation (DE, GA, PSO).
    std::vector<std::vector<double>> generation_costs;
    // PSO personal bests at termination.
    std::vector<double> final_pbest_costs;
    // ACO: worst normalization error over all choice points, smallest
    // pheromone after any update, and the final pheromone table.
    double aco_max_prob_error = 0.0;
    double aco_min_pheromone = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> aco_pheromone;
};

namespace detail {

inline double clamp_to(double x, const Bounds& b) {
    return std::clamp(x, b.lo, b.hi);
}

inline void clamp_point(std::vector<double>& x, const std::vector<Bounds>& bounds) {
    for (std::size_t d = 0; d < x.size(); ++d) {
        x[d] = clamp_to(x[d], bounds[d]);
    }
}

inline std::vector<double> random_point(const std::vector<Bounds>& bounds, Rng& rng) {
    std::vector<double> x(bounds.size());
    for (std::size_t d = 0; d < bounds.size(); ++d) {
        x[d] = rng.uniform(bounds[d].lo, bounds[d].hi);
    }
    return x;
}

// Fitness-proportional pick. Falls back to a uniform pick when the weights
// cannot form a distribution (all zero, or any non-finite entry).
inline std::size_t pick_weighted(const std::vector<double>& weights, Rng& rng) {
    double total = 0.0;
    bool usable = !weights.empty();
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            usable = false;
            break;
        }
        total += w;
    }
    if (!usable || total <= 0.0) {
        return rng.below(weights.size());
    }
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

inline void record_best(OptimizerTrace& trace, const std::vector<double>& point,
                        double cost) {
    if (cost < trace.best_cost) {
        trace.best_cost = cost;
        trace.best_point = point;
    }
}

}  // namespace detail

// Pre-packaged test objectives, also used by the benchmark property suite.
inline ObjectiveSpec sphere_objective(std::size_t dimension) {
    return make_objective(dimension, [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    });
}

inline ObjectiveSpec rastrigin_objective(std::size_t dimension) {
    return make_objective(dimension, [](const std::vector<double>& x) {
        double s = 10.0 * static_cast<double>(x.size());
        for (double v : x) {
            s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        }
        return s;
    });
}

// The variational QAOA objective: expected energy as a function of the flat
// [gammas, betas] vector, boxed to (-pi, pi) per angle. The energy table is
// computed once and shared across evaluations.
inline ObjectiveSpec make_qaoa_objective(const QuboModel& model, std::size_t layers) {
    if (layers == 0) {
        throw std::invalid_argument("make_qaoa_objective: need at least one layer");
    }
    auto shared_model = std::make_shared<const QuboModel>(model);
    auto table = std::make_shared<const std::vector<double>>(energy_table(model));
    return make_objective(
        2 * layers, [shared_model, table](const std::vector<double>& flat) {
            const QaoaParams params = QaoaParams::from_flat(flat);
            return expectation_diag(run_ansatz(*shared_model, params), *table);
        });
}

}  // namespace npqaoa
