#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "npqaoa/npp.hpp"
#include "npqaoa/rng.hpp"

namespace npqaoa {

// Dense n-qubit pure state. Amplitude index is read big-endian: qubit 0 is
// the most significant bit of the basis-state index. Gate conventions are
// exp(-i theta G / 2) for G in {Z, Z(x)Z, X}.
class StateVector {
public:
    static constexpr std::size_t kMaxQubits = 20;

    explicit StateVector(std::size_t n)
        : n_(n), amps_(check_width(n), {0.0, 0.0}) {}

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    std::complex<double>& amp(std::size_t k) { return amps_[k]; }
    const std::complex<double>& amp(std::size_t k) const { return amps_[k]; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    // Number of gate applications so far, for layer-count checks.
    std::size_t gate_count() const { return gates_; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

    // Diagonal phase: e^{-i theta/2} on |0>, e^{+i theta/2} on |1> of qubit q.
    void apply_rz(std::size_t q, double theta) {
        const std::uint64_t mask = qubit_mask(q);
        const auto phase0 = std::polar(1.0, -theta / 2);
        const auto phase1 = std::polar(1.0, theta / 2);
        for (std::size_t k = 0; k < amps_.size(); ++k) {
            amps_[k] *= (k & mask) ? phase1 : phase0;
        }
        ++gates_;
    }

    // Diagonal phase: e^{-i theta/2} when bits q1, q2 agree, e^{+i theta/2}
    // when they differ.
    void apply_rzz(std::size_t q1, std::size_t q2, double theta) {
        if (q1 == q2) {
            throw std::invalid_argument("apply_rzz: qubit indices must differ");
        }
        const std::uint64_t m1 = qubit_mask(q1);
        const std::uint64_t m2 = qubit_mask(q2);
        const auto phase_equal = std::polar(1.0, -theta / 2);
        const auto phase_diff = std::polar(1.0, theta / 2);
        for (std::size_t k = 0; k < amps_.size(); ++k) {
            const bool b1 = (k & m1) != 0;
            const bool b2 = (k & m2) != 0;
            amps_[k] *= (b1 == b2) ? phase_equal : phase_diff;
        }
        ++gates_;
    }

    // Mixes amplitude pairs differing in bit q by
    //   [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]].
    void apply_rx(std::size_t q, double theta) {
        const std::uint64_t mask = qubit_mask(q);
        const double c = std::cos(theta / 2);
        const std::complex<double> ms(0.0, -std::sin(theta / 2));
        for (std::size_t k = 0; k < amps_.size(); ++k) {
            if (k & mask) continue;
            const std::size_t k1 = k | mask;
            const auto a0 = amps_[k];
            const auto a1 = amps_[k1];
            amps_[k] = c * a0 + ms * a1;
            amps_[k1] = ms * a0 + c * a1;
        }
        ++gates_;
    }

private:
    static std::size_t check_width(std::size_t n) {
        if (n < 1 || n > kMaxQubits) {
            throw capability_error("StateVector: qubit count must be in [1, 20]");
        }
        return std::size_t{1} << n;
    }

    std::uint64_t qubit_mask(std::size_t q) const {
        if (q >= n_) {
            throw std::invalid_argument("qubit index out of range");
        }
        return std::uint64_t{1} << (n_ - 1 - q);
    }

    std::size_t n_;
    std::vector<std::complex<double>> amps_;
    std::size_t gates_ = 0;
};

// Equal superposition of all basis states, amplitude 2^(-n/2) each.
inline StateVector init_uniform(std::size_t n) {
    StateVector state(n);
    const double a = std::pow(2.0, -static_cast<double>(n) / 2.0);
    for (std::size_t k = 0; k < state.dim(); ++k) {
        state.amp(k) = a;
    }
    return state;
}

// sum_k |amp_k|^2 * energies[k], accumulated in ascending index order so the
// result is reproducible.
inline double expectation_diag(const StateVector& state,
                               std::span<const double> energies) {
    if (energies.size() != state.dim()) {
        throw std::invalid_argument("expectation_diag: energy table size mismatch");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k) {
        total += std::norm(state.amp(k)) * energies[k];
    }
    return total;
}

// `shots` independent basis-state draws from the |amp|^2 distribution.
inline std::vector<std::uint64_t> sample_indices(const StateVector& state,
                                                 std::size_t shots, Rng& rng) {
    if (shots < 1) {
        throw std::invalid_argument("sample_indices: shots must be at least 1");
    }
    std::vector<double> cumulative(state.dim());
    double acc = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k) {
        acc += std::norm(state.amp(k));
        cumulative[k] = acc;
    }
    const double total = cumulative.back();
    std::vector<std::uint64_t> draws;
    draws.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t k =
            it == cumulative.end() ? state.dim() - 1
                                   : static_cast<std::size_t>(it - cumulative.begin());
        draws.push_back(k);
    }
    return draws;
}

inline std::vector<Bitstring> sample(const StateVector& state, std::size_t shots,
                                     Rng& rng) {
    std::vector<Bitstring> out;
    out.reserve(shots);
    for (std::uint64_t k : sample_indices(state, shots, rng)) {
        out.push_back(index_to_bits(k, state.num_qubits()));
    }
    return out;
}

}  // namespace npqaoa
