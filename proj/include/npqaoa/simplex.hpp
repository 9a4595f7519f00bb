#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "npqaoa/optimizer.hpp"

namespace npqaoa {

// Nelder-Mead simplex search, the derivative-free stand-in for a standard
// QAOA optimizer. Coefficients: reflection 1, expansion 2, contraction 1/2,
// shrink 1/2. Starts from a random point in the box; every candidate is
// clamped to the box before evaluation. Stops when the evaluation budget
// population * iterations is spent or the simplex diameter drops below
// 1e-8. The start point is always evaluated once, so a zero budget still
// yields a result.
inline OptimizerTrace optimize_simplex(const ObjectiveSpec& obj,
                                       const OptimizerConfig& cfg, Rng& rng,
                                       OptimizerDiagnostics* /*diag*/ = nullptr) {
    validate_objective(obj);
    const std::size_t dim = obj.dimension;
    const std::size_t budget = cfg.population * cfg.iterations;

    OptimizerTrace trace;
    auto eval = [&](std::vector<double> x, std::vector<double>& stored) {
        detail::clamp_point(x, obj.bounds);
        const double cost = obj.evaluate(x);
        ++trace.evaluations;
        detail::record_best(trace, x, cost);
        stored = std::move(x);
        return cost;
    };

    std::vector<std::vector<double>> verts;
    std::vector<double> costs;
    verts.reserve(dim + 1);
    costs.reserve(dim + 1);

    std::vector<double> start = detail::random_point(obj.bounds, rng);
    {
        std::vector<double> stored;
        const double c = eval(start, stored);
        verts.push_back(std::move(stored));
        costs.push_back(c);
    }
    trace.best_costs.push_back(trace.best_cost);

    for (std::size_t d = 0; d < dim && trace.evaluations < budget; ++d) {
        std::vector<double> v = verts[0];
        const double step = 0.25 * (obj.bounds[d].hi - obj.bounds[d].lo);
        v[d] = v[d] + step <= obj.bounds[d].hi ? v[d] + step : v[d] - step;
        std::vector<double> stored;
        const double c = eval(v, stored);
        verts.push_back(std::move(stored));
        costs.push_back(c);
    }
    if (verts.size() < dim + 1) {
        return trace;  // budget exhausted while building the simplex
    }

    auto order = [&] {
        std::vector<std::size_t> idx(verts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });
        std::vector<std::vector<double>> v2(verts.size());
        std::vector<double> c2(verts.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            v2[k] = std::move(verts[idx[k]]);
            c2[k] = costs[idx[k]];
        }
        verts = std::move(v2);
        costs = std::move(c2);
    };

    while (trace.evaluations < budget) {
        order();
        double diameter = 0.0;
        for (std::size_t j = 1; j <= dim; ++j) {
            for (std::size_t d = 0; d < dim; ++d) {
                diameter = std::max(diameter, std::abs(verts[j][d] - verts[0][d]));
            }
        }
        if (diameter < 1e-8) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t d = 0; d < dim; ++d) {
                centroid[d] += verts[j][d];
            }
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        const std::vector<double>& worst = verts[dim];
        std::vector<double> reflected(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            reflected[d] = centroid[d] + (centroid[d] - worst[d]);
        }
        std::vector<double> xr;
        const double fr = eval(reflected, xr);

        if (fr < costs[0] && trace.evaluations < budget) {
            std::vector<double> expanded(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                expanded[d] = centroid[d] + 2.0 * (xr[d] - centroid[d]);
            }
            std::vector<double> xe;
            const double fe = eval(expanded, xe);
            if (fe < fr) {
                verts[dim] = std::move(xe);
                costs[dim] = fe;
            } else {
                verts[dim] = std::move(xr);
                costs[dim] = fr;
            }
        } else if (fr < costs[dim - 1]) {
            verts[dim] = std::move(xr);
            costs[dim] = fr;
        } else if (trace.evaluations < budget) {
            const bool outside = fr < costs[dim];
            std::vector<double> contracted(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                const double toward = outside ? xr[d] : verts[dim][d];
                contracted[d] = centroid[d] + 0.5 * (toward - centroid[d]);
            }
            std::vector<double> xc;
            const double fc = eval(contracted, xc);
            if (fc < (outside ? fr : costs[dim])) {
                verts[dim] = std::move(xc);
                costs[dim] = fc;
            } else {
                for (std::size_t j = 1; j <= dim && trace.evaluations < budget; ++j) {
                    std::vector<double> shrunk(dim);
                    for (std::size_t d = 0; d < dim; ++d) {
                        shrunk[d] = verts[0][d] + 0.5 * (verts[j][d] - verts[0][d]);
                    }
                    std::vector<double> xs;
                    costs[j] = eval(shrunk, xs);
                    verts[j] = std::move(xs);
                }
            }
        }
        trace.best_costs.push_back(trace.best_cost);
    }
    return trace;
}

}  // namespace npqaoa
