#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "npqaoa/errors.hpp"
#include "npqaoa/rng.hpp"

namespace npqaoa {

// Binary assignment, one byte per variable, index i = variable i.
using Bitstring = std::vector<std::uint8_t>;

// Largest element total we accept: floor(sqrt(2^63 - 1)), so that the
// squared set-sum difference (and the QUBO constant c^2) fits in int64.
inline constexpr std::int64_t kMaxInstanceTotal = 3037000499;

// A number-partitioning instance: the positive integers to split into two
// subsets with minimal set-sum difference. `seed` records how the values
// were generated, when they were generated at all.
struct NppInstance {
    std::vector<std::int64_t> values;
    std::optional<std::uint64_t> seed;

    std::size_t size() const { return values.size(); }

    std::int64_t total() const {
        std::int64_t c = 0;
        for (std::int64_t a : values) c += a;
        return c;
    }
};

inline void validate_instance(const NppInstance& instance) {
    if (instance.values.empty()) {
        throw std::invalid_argument("instance needs at least one value");
    }
    std::int64_t c = 0;
    for (std::int64_t a : instance.values) {
        if (a < 1) {
            throw std::invalid_argument("instance values must be positive");
        }
        if (a > kMaxInstanceTotal - c) {
            throw std::invalid_argument(
                "instance total too large for exact 64-bit energies");
        }
        c += a;
    }
}

// One evaluated partition: side sums, absolute difference, squared
// difference (the QUBO energy), and the approximation ratio
// R = max(side sums) / (c / 2) >= 1.
struct PartitionSolution {
    Bitstring bits;
    std::int64_t subset_sum = 0;  // sum over values with bit 1
    std::int64_t diff = 0;        // |c - 2 * subset_sum|
    std::int64_t energy = 0;      // diff^2
    double ratio = 1.0;           // R
};

inline std::int64_t subset_sum(const NppInstance& instance, const Bitstring& bits) {
    if (bits.size() != instance.size()) {
        throw std::invalid_argument("bitstring length does not match instance size");
    }
    std::int64_t t = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) t += instance.values[i];
    }
    return t;
}

// (c - 2 * sum_{z_i = 1} a_i)^2, evaluated exactly in integers.
inline std::int64_t energy(const NppInstance& instance, const Bitstring& bits) {
    validate_instance(instance);
    const std::int64_t d = instance.total() - 2 * subset_sum(instance, bits);
    return d * d;
}

// R = max(b1, b2) / (c / 2) where b1 is the bit-1 side sum and b2 = c - b1.
inline double quality_ratio(const NppInstance& instance, const Bitstring& bits) {
    validate_instance(instance);
    const std::int64_t c = instance.total();
    const std::int64_t b1 = subset_sum(instance, bits);
    const std::int64_t b2 = c - b1;
    return 2.0 * static_cast<double>(std::max(b1, b2)) / static_cast<double>(c);
}

inline PartitionSolution make_solution(const NppInstance& instance, Bitstring bits) {
    validate_instance(instance);
    PartitionSolution sol;
    sol.subset_sum = subset_sum(instance, bits);
    const std::int64_t c = instance.total();
    sol.diff = std::abs(c - 2 * sol.subset_sum);
    sol.energy = sol.diff * sol.diff;
    sol.ratio = 2.0 * static_cast<double>(std::max(sol.subset_sum, c - sol.subset_sum)) /
                static_cast<double>(c);
    sol.bits = std::move(bits);
    return sol;
}

// Big-endian index convention used throughout: variable 0 is the most
// significant bit of the basis-state index.
inline Bitstring index_to_bits(std::uint64_t index, std::size_t n) {
    Bitstring bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
    }
    return bits;
}

inline std::uint64_t bits_to_index(const Bitstring& bits) {
    std::uint64_t k = 0;
    for (std::uint8_t b : bits) k = (k << 1) | (b & 1u);
    return k;
}

// n values drawn independently and uniformly from [lo, hi]. Pure function
// of (n, seed, lo, hi); the draw sequence is pinned by tests.
inline NppInstance generate_instance(std::size_t n, std::uint64_t seed,
                                     std::int64_t lo, std::int64_t hi) {
    if (n == 0) {
        throw std::invalid_argument("generate_instance: n must be at least 1");
    }
    if (lo < 1 || lo > hi) {
        throw std::invalid_argument("generate_instance: need 1 <= lo <= hi");
    }
    NppInstance instance;
    instance.seed = seed;
    instance.values.reserve(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        instance.values.push_back(rng.uniform_int(lo, hi));
    }
    validate_instance(instance);
    return instance;
}

// Exhaustive minimum-energy partition over all 2^n assignments. Ties are
// broken toward the smallest big-endian index so outputs are reproducible.
inline PartitionSolution brute_force_best(const NppInstance& instance) {
    validate_instance(instance);
    const std::size_t n = instance.size();
    if (n > 24) {
        throw capability_error("brute_force_best: instance too large (n > 24)");
    }
    const std::int64_t c = instance.total();
    const std::uint64_t count = 1ull << n;

    // Gray-code walk: one value added or removed per step, O(1) each.
    std::uint64_t gray = 0;
    std::int64_t sum = 0;
    std::int64_t best_energy = c * c;  // assignment 0 (empty subset)
    std::uint64_t best_index = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int bit = std::countr_zero(k);
        const std::uint64_t mask = 1ull << bit;
        gray ^= mask;
        const std::size_t var = n - 1 - static_cast<std::size_t>(bit);
        sum += (gray & mask) ? instance.values[var] : -instance.values[var];
        const std::int64_t d = c - 2 * sum;
        const std::int64_t e = d * d;
        if (e < best_energy || (e == best_energy && gray < best_index)) {
            best_energy = e;
            best_index = gray;
        }
    }
    return make_solution(instance, index_to_bits(best_index, n));
}

namespace detail {

// Subset-sum reachability rows, one word-parallel bitset per prefix of the
// value list. rows.back() covers the whole instance.
inline std::vector<std::vector<std::uint64_t>> reachable_sum_rows(
    const NppInstance& instance) {
    const std::int64_t c = instance.total();
    const std::size_t words = static_cast<std::size_t>(c / 64) + 1;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(instance.size());
    std::vector<std::uint64_t> cur(words, 0);
    cur[0] = 1;  // empty subset
    for (std::int64_t a : instance.values) {
        const std::size_t word_shift = static_cast<std::size_t>(a / 64);
        const unsigned bit_shift = static_cast<unsigned>(a % 64);
        std::vector<std::uint64_t> next(cur);
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t shifted = 0;
            if (w >= word_shift) {
                shifted = cur[w - word_shift] << bit_shift;
                if (bit_shift != 0 && w > word_shift) {
                    shifted |= cur[w - word_shift - 1] >> (64 - bit_shift);
                }
            }
            next[w] |= shifted;
        }
        cur = next;
        rows.push_back(std::move(next));
    }
    return rows;
}

inline bool sum_reachable(const std::vector<std::uint64_t>& row, std::int64_t s) {
    return (row[static_cast<std::size_t>(s / 64)] >> (s % 64)) & 1u;
}

}  // namespace detail

// Minimal achievable set-sum difference by pseudo-polynomial subset-sum
// reachability. Exact for any n, bounded by the element total instead of
// the variable count.
inline std::int64_t dp_best_diff(const NppInstance& instance) {
    validate_instance(instance);
    const std::int64_t c = instance.total();
    if (c > 10000000) {
        throw capability_error("dp_best_diff: element total too large (c > 1e7)");
    }
    const std::size_t words = static_cast<std::size_t>(c / 64) + 1;
    std::vector<std::uint64_t> reach(words, 0);
    reach[0] = 1;
    for (std::int64_t a : instance.values) {
        const std::size_t word_shift = static_cast<std::size_t>(a / 64);
        const unsigned bit_shift = static_cast<unsigned>(a % 64);
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t shifted = 0;
            if (w >= word_shift) {
                shifted = reach[w - word_shift] << bit_shift;
                if (bit_shift != 0 && w > word_shift) {
                    shifted |= reach[w - word_shift - 1] >> (64 - bit_shift);
                }
            }
            reach[w] |= shifted;
        }
    }
    for (std::int64_t s = c / 2; s >= 0; --s) {
        if (detail::sum_reachable(reach, s)) {
            return c - 2 * s;
        }
    }
    return c;  // unreachable: 0 is always a subset sum
}

// Optimal partition recovered from the reachability table. Same optimum as
// brute_force_best but without its tie-break guarantee.
inline PartitionSolution dp_best_partition(const NppInstance& instance) {
    validate_instance(instance);
    const std::int64_t c = instance.total();
    if (c > 10000000) {
        throw capability_error("dp_best_partition: element total too large (c > 1e7)");
    }
    const auto rows = detail::reachable_sum_rows(instance);
    std::int64_t target = 0;
    for (std::int64_t s = c / 2; s >= 0; --s) {
        if (detail::sum_reachable(rows.back(), s)) {
            target = s;
            break;
        }
    }
    const std::size_t n = instance.size();
    Bitstring bits(n, 0);
    for (std::size_t i = n; i-- > 1;) {
        if (!detail::sum_reachable(rows[i - 1], target)) {
            bits[i] = 1;
            target -= instance.values[i];
        }
    }
    bits[0] = target != 0;
    return make_solution(instance, std::move(bits));
}

}  // namespace npqaoa
