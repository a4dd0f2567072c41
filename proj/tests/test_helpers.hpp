#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qpm/circuit.hpp"
#include "qpm/gate.hpp"

// Test-side oracles, deliberately built from first principles: the full
// 2^n x 2^n matrix of a gate is assembled by index permutation around the
// gate's own 2^k x 2^k matrix and multiplied densely, with no code shared
// with the simulator's stride kernels.
namespace testutil {

using qpm::cdouble;
using qpm::GateKind;
using qpm::GateOp;

// The 2^k x 2^k matrix of an op over its own qubit list (sub-index bit b =
// op.qubits[b]).
inline std::vector<cdouble> gate_matrix(const GateOp& op) {
    const std::uint64_t dim = std::uint64_t(1) << op.qubits.size();
    std::vector<cdouble> u(dim * dim, 0.0);
    const auto at = [&](std::uint64_t r, std::uint64_t c) -> cdouble& { return u[r * dim + c]; };
    switch (op.kind) {
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        at(0, 0) = s; at(0, 1) = s; at(1, 0) = s; at(1, 1) = -s;
        break;
    }
    case GateKind::X:
        at(0, 1) = 1.0; at(1, 0) = 1.0;
        break;
    case GateKind::Ry:
        at(0, 0) = std::cos(op.angle / 2); at(0, 1) = -std::sin(op.angle / 2);
        at(1, 0) = std::sin(op.angle / 2); at(1, 1) = std::cos(op.angle / 2);
        break;
    case GateKind::Rz:
        at(0, 0) = std::exp(cdouble(0, -op.angle / 2));
        at(1, 1) = std::exp(cdouble(0, op.angle / 2));
        break;
    case GateKind::ControlledX: {
        // target is the last listed qubit = highest sub-index bit
        const std::uint64_t tbit = dim >> 1;
        const std::uint64_t cmask = tbit - 1;
        for (std::uint64_t c = 0; c < dim; ++c) {
            const std::uint64_t r = (c & cmask) == cmask ? (c ^ tbit) : c;
            at(r, c) = 1.0;
        }
        break;
    }
    case GateKind::ControlledPhase:
        for (std::uint64_t c = 0; c < dim; ++c)
            at(c, c) = (c == dim - 1) ? std::exp(cdouble(0, op.angle)) : 1.0;
        break;
    case GateKind::DenseUnitary:
        return op.matrix;
    }
    return u;
}

// Full-space matrix: entry (r, c) is the gate matrix entry over the acted
// bits when the untouched bits of r and c agree, else 0.
inline std::vector<cdouble> embed_full(const GateOp& op, std::uint32_t num_qubits) {
    const std::uint64_t full = std::uint64_t(1) << num_qubits;
    const std::vector<cdouble> u = gate_matrix(op);
    const std::uint64_t sub_dim = std::uint64_t(1) << op.qubits.size();
    std::uint64_t qmask = 0;
    for (auto q : op.qubits)
        qmask |= std::uint64_t(1) << q;

    const auto sub_index = [&](std::uint64_t i) {
        std::uint64_t s = 0;
        for (std::size_t b = 0; b < op.qubits.size(); ++b)
            s |= ((i >> op.qubits[b]) & 1u) << b;
        return s;
    };

    std::vector<cdouble> m(full * full, 0.0);
    for (std::uint64_t r = 0; r < full; ++r)
        for (std::uint64_t c = 0; c < full; ++c)
            if ((r & ~qmask) == (c & ~qmask))
                m[r * full + c] = u[sub_index(r) * sub_dim + sub_index(c)];
    return m;
}

inline std::vector<cdouble> matvec(const std::vector<cdouble>& m, const std::vector<cdouble>& v) {
    const std::uint64_t n = v.size();
    std::vector<cdouble> out(n, 0.0);
    for (std::uint64_t r = 0; r < n; ++r)
        for (std::uint64_t c = 0; c < n; ++c)
            out[r] += m[r * n + c] * v[c];
    return out;
}

inline std::vector<cdouble> apply_brute(const GateOp& op, std::uint32_t num_qubits,
                                        const std::vector<cdouble>& v) {
    return matvec(embed_full(op, num_qubits), v);
}

inline double max_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Largest amplitude difference after rotating away one global phase.
inline double max_diff_up_to_phase(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        overlap += std::conj(a[i]) * b[i];
    const cdouble phase = std::abs(overlap) < 1e-15 ? cdouble(1.0) : overlap / std::abs(overlap);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] * phase - b[i]));
    return worst;
}

inline std::vector<cdouble> random_state(std::uint32_t num_qubits, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cdouble> v(std::uint64_t(1) << num_qubits);
    double norm2 = 0.0;
    for (auto& a : v) {
        a = cdouble(normal(gen), normal(gen));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : v)
        a *= inv;
    return v;
}

// Haar-ish random unitary: modified Gram-Schmidt on a complex Gaussian
// matrix. Good enough as test input; unitarity is what matters.
inline std::vector<cdouble> random_unitary(std::uint64_t dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<cdouble>> cols(dim, std::vector<cdouble>(dim));
    for (auto& col : cols)
        for (auto& x : col)
            x = cdouble(normal(gen), normal(gen));
    for (std::uint64_t c = 0; c < dim; ++c) {
        for (std::uint64_t prev = 0; prev < c; ++prev) {
            cdouble proj = 0.0;
            for (std::uint64_t r = 0; r < dim; ++r)
                proj += std::conj(cols[prev][r]) * cols[c][r];
            for (std::uint64_t r = 0; r < dim; ++r)
                cols[c][r] -= proj * cols[prev][r];
        }
        double norm2 = 0.0;
        for (const auto& x : cols[c])
            norm2 += std::norm(x);
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : cols[c])
            x *= inv;
    }
    std::vector<cdouble> u(dim * dim);
    for (std::uint64_t r = 0; r < dim; ++r)
        for (std::uint64_t c = 0; c < dim; ++c)
            u[r * dim + c] = cols[c][r];
    return u;
}

// Random circuit over the serializable gate set.
inline qpm::Circuit random_serializable_circuit(std::uint32_t num_qubits, std::uint32_t num_ops,
                                                std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> pick_kind(0, 5);
    std::uniform_int_distribution<std::uint32_t> pick_qubit(0, num_qubits - 1);
    std::uniform_real_distribution<double> pick_angle(-2 * std::numbers::pi, 2 * std::numbers::pi);

    const auto distinct_qubits = [&](std::uint32_t count) {
        std::vector<std::uint32_t> all(num_qubits);
        for (std::uint32_t i = 0; i < num_qubits; ++i)
            all[i] = i;
        std::shuffle(all.begin(), all.end(), gen);
        all.resize(count);
        return all;
    };

    std::vector<GateOp> ops;
    for (std::uint32_t i = 0; i < num_ops; ++i) {
        switch (pick_kind(gen)) {
        case 0: ops.push_back(GateOp::h(pick_qubit(gen))); break;
        case 1: ops.push_back(GateOp::x(pick_qubit(gen))); break;
        case 2: ops.push_back(GateOp::ry(pick_qubit(gen), pick_angle(gen))); break;
        case 3: ops.push_back(GateOp::rz(pick_qubit(gen), pick_angle(gen))); break;
        case 4: {
            const std::uint32_t max_controls = std::min(num_qubits - 1, 5u);
            std::uniform_int_distribution<std::uint32_t> pick_controls(
                1, std::max(1u, max_controls));
            auto qs = distinct_qubits(std::min(pick_controls(gen) + 1, num_qubits));
            const std::uint32_t target = qs.back();
            qs.pop_back();
            ops.push_back(GateOp::controlled_x(std::move(qs), target));
            break;
        }
        default: {
            std::uniform_int_distribution<std::uint32_t> pick_count(1, std::min(num_qubits, 4u));
            ops.push_back(GateOp::controlled_phase(distinct_qubits(pick_count(gen)),
                                                   pick_angle(gen)));
            break;
        }
        }
    }
    return qpm::Circuit(num_qubits, std::move(ops), "random");
}

} // namespace testutil
