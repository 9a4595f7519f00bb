#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "npqaoa/npp.hpp"

namespace npqaoa {

// Quadratic form constant + sum_i linear_i z_i + sum_{i<j} quad_ij z_i z_j,
// the expansion of (c - 2 sum_i a_i z_i)^2 over binary z. All coefficients
// are exact integers. The pairwise terms are stored strictly upper
// triangular, flattened in ascending (i, j) order.
struct QuboModel {
    std::size_t n = 0;
    std::int64_t constant = 0;
    std::vector<std::int64_t> linear;
    std::vector<std::int64_t> quad_flat;
    NppInstance instance;

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    }

    // Q_ij for i < j.
    std::int64_t quad(std::size_t i, std::size_t j) const {
        return quad_flat[pair_index(i, j)];
    }
};

namespace detail {

inline std::int64_t narrow_or_throw(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error(what);
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Expansion of (c - 2 sum a_i x_i)^2 using x_i^2 = x_i:
//   constant = c^2, linear_i = 4 a_i^2 - 4 c a_i, quad_ij = 8 a_i a_j.
inline QuboModel build_qubo(const NppInstance& instance) {
    validate_instance(instance);
    const std::size_t n = instance.size();
    const __int128 c = instance.total();

    QuboModel model;
    model.n = n;
    model.instance = instance;
    model.constant = detail::narrow_or_throw(c * c, "build_qubo: constant overflows");
    model.linear.reserve(n);
    model.quad_flat.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        const __int128 a = instance.values[i];
        model.linear.push_back(
            detail::narrow_or_throw(4 * a * a - 4 * c * a,
                                    "build_qubo: linear coefficient overflows"));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const __int128 q =
                __int128{8} * instance.values[i] * instance.values[j];
            model.quad_flat.push_back(
                detail::narrow_or_throw(q, "build_qubo: pair coefficient overflows"));
        }
    }
    return model;
}

// Evaluates the quadratic form at a binary assignment. Equals
// energy(instance, bits) for every assignment; accumulation runs in 128-bit
// so partial sums cannot wrap.
inline std::int64_t qubo_value(const QuboModel& model, const Bitstring& bits) {
    if (bits.size() != model.n) {
        throw std::invalid_argument("bitstring length does not match model size");
    }
    __int128 total = model.constant;
    for (std::size_t i = 0; i < model.n; ++i) {
        if (!bits[i]) continue;
        total += model.linear[i];
        for (std::size_t j = i + 1; j < model.n; ++j) {
            if (bits[j]) total += model.quad(i, j);
        }
    }
    return detail::narrow_or_throw(total, "qubo_value: overflow");
}

// Energies of all 2^n basis states, indexed big-endian (variable 0 is the
// most significant bit). Values are exact squared differences, well inside
// double precision by the instance-total bound.
inline std::vector<double> energy_table(const QuboModel& model) {
    const std::size_t n = model.n;
    if (n > 24) {
        throw capability_error("energy_table: instance too large (n > 24)");
    }
    const std::size_t count = std::size_t{1} << n;
    const std::int64_t c = model.instance.total();
    std::vector<std::int64_t> sums(count);
    sums[0] = 0;
    for (std::size_t k = 1; k < count; ++k) {
        const int bit = std::countr_zero(k);
        const std::size_t var = n - 1 - static_cast<std::size_t>(bit);
        sums[k] = sums[k & (k - 1)] + model.instance.values[var];
    }
    std::vector<double> energies(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::int64_t d = c - 2 * sums[k];
        energies[k] = static_cast<double>(d * d);
    }
    return energies;
}

}  // namespace npqaoa
