#include "qpm/qibam.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qpm/circuit.hpp"
#include "qpm/rng.hpp"

namespace qpm {

namespace {

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw Error(Errc::GammaOutOfRange, "gamma = " + std::to_string(gamma) +
                                               ", required 0 < gamma < 1");
}

// 2|psi0><psi0| - I, applied algebraically. Norm-preserving, so the
// from_amplitudes check is a cheap invariant guard.
StateVector reflect_about(const StateVector& state, const std::vector<cdouble>& psi0) {
    const auto& psi = state.amplitudes();
    cdouble overlap = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        overlap += std::conj(psi0[i]) * psi[i];
    std::vector<cdouble> out(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        out[i] = 2.0 * overlap * psi0[i] - psi[i];
    return StateVector::from_amplitudes(std::move(out));
}

} // namespace

std::vector<double> query_state(const DistributedQuery& q) {
    check_gamma(q.gamma);
    if (q.d < 1 || q.d > StateVector::kMaxQubits)
        throw Error(Errc::DimensionTooLarge, "d = " + std::to_string(q.d));
    const std::uint64_t dim = std::uint64_t(1) << q.d;
    if (q.center >= dim)
        throw Error(Errc::InvalidParameters, "center outside the data space");
    std::vector<double> amp(dim);
    // amplitude depends only on the Hamming weight h of x XOR center
    std::vector<double> by_weight(q.d + 1);
    for (std::uint32_t h = 0; h <= q.d; ++h)
        by_weight[h] = std::sqrt(std::pow(q.gamma, h) * std::pow(1.0 - q.gamma, q.d - h));
    for (std::uint64_t x = 0; x < dim; ++x)
        amp[x] = by_weight[std::popcount(x ^ q.center)];
    return amp;
}

GateOp build_query_oracle(const DistributedQuery& q, std::uint32_t first_qubit) {
    if (q.d > 12)
        throw Error(Errc::DimensionTooLarge,
                    "d = " + std::to_string(q.d) + " exceeds the dense-oracle ceiling of 12");
    const std::vector<double> b = query_state(q);
    const std::uint64_t dim = b.size();
    std::vector<cdouble> matrix(dim * dim);
    for (std::uint64_t r = 0; r < dim; ++r)
        for (std::uint64_t c = 0; c < dim; ++c)
            matrix[r * dim + c] = (r == c ? 1.0 : 0.0) - 2.0 * b[r] * b[c];
    std::vector<std::uint32_t> qubits(q.d);
    std::iota(qubits.begin(), qubits.end(), first_qubit);
    // unitary by construction: a reflection about a unit vector
    return GateOp::dense_unitary_unchecked(std::move(qubits), std::move(matrix));
}

std::vector<GateOp> build_memory_oracle(const QuantumDatabase& db, const Dna& query) {
    if (2 * query.size() != db.q_d)
        throw Error(Errc::LengthMismatch, "query of " + std::to_string(query.size()) +
                                              " bases vs data register of " +
                                              std::to_string(db.q_d) + " qubits");
    const std::uint32_t n = db.num_qubits();
    const std::uint64_t encq = encode_pattern(query);
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<GateOp> ops;
    for (const auto& [tag, bits] : db.memories) {
        if (tag >= db.tag_space())
            throw Error(Errc::LayoutInvalid, "tag " + std::to_string(tag) + " out of range");
        // the memory's location after Hamming evolution
        const std::uint64_t joint = ((bits ^ encq) << db.q_t) | tag;
        const auto dress = [&] {
            for (std::uint32_t qb = 0; qb < n; ++qb)
                if (!((joint >> qb) & 1u))
                    ops.push_back(GateOp::x(qb));
        };
        dress();
        ops.push_back(GateOp::controlled_phase(all, std::numbers::pi));
        dress();
    }
    return ops;
}

std::vector<GateOp> build_diffusion(std::uint32_t num_qubits) {
    if (num_qubits < 1)
        throw Error(Errc::QubitCountOutOfRange, "diffusion over 0 qubits");
    std::vector<std::uint32_t> all(num_qubits);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<GateOp> ops;
    for (auto q : all)
        ops.push_back(GateOp::h(q));
    for (auto q : all)
        ops.push_back(GateOp::x(q));
    ops.push_back(GateOp::controlled_phase(all, std::numbers::pi));
    for (auto q : all)
        ops.push_back(GateOp::x(q));
    for (auto q : all)
        ops.push_back(GateOp::h(q));
    return ops;
}

std::uint64_t grover_iterations(std::uint64_t space_size, std::uint64_t num_solutions) {
    if (num_solutions < 1)
        throw Error(Errc::NoSolutions, "num_solutions = 0");
    if (num_solutions >= space_size)
        throw Error(Errc::SolutionsExceedSpace,
                    std::to_string(num_solutions) + " solutions in a space of " +
                        std::to_string(space_size));
    const double ratio = static_cast<double>(space_size) / static_cast<double>(num_solutions);
    return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

AlignmentResult align(const Dna& reference, const Dna& query, const QueryConfig& cfg,
                      const std::vector<std::uint32_t>& exclusions) {
    if (query.size() > reference.size())
        throw Error(Errc::QueryTooLong, std::to_string(query.size()) + " bases vs reference of " +
                                            std::to_string(reference.size()));
    check_gamma(cfg.gamma);
    if (cfg.shots < 1)
        throw Error(Errc::ZeroShots, "shots must be >= 1");

    const QuantumDatabase db = make_database(reference, query.size(), exclusions);
    if (db.num_qubits() > StateVector::kMaxQubits)
        throw Error(Errc::QubitCeilingExceeded,
                    std::to_string(db.num_qubits()) + " qubits needed, ceiling is " +
                        std::to_string(StateVector::kMaxQubits));

    std::uint64_t k = 0;
    if (const auto* fixed = std::get_if<Fixed>(&cfg.iterations)) {
        k = fixed->k;
    } else if (const auto* auto_known = std::get_if<AutoKnown>(&cfg.iterations)) {
        // a single window leaves nothing to amplify
        k = db.q_t == 0 ? 0 : grover_iterations(db.tag_space(), auto_known->num_solutions);
    } else {
        throw Error(Errc::InvalidParameters, "the randomized policy is driven by boyer_search");
    }

    StateVector state = execute(build_qpd_circuit(db), StateVector(db.num_qubits()));
    state = execute(build_hamming_evolution(query, db), std::move(state));
    const std::vector<cdouble> psi0 = state.amplitudes();

    if (k >= 1) {
        const GateOp oracle = build_query_oracle({db.q_d, cfg.gamma, 0}, db.q_t);
        std::vector<GateOp> memory_ops;
        if (cfg.schedule == Schedule::EzhovTwoPhase && k >= 2)
            memory_ops = build_memory_oracle(db, query);
        for (std::uint64_t r = 0; r < k; ++r) {
            if (r == 0 || cfg.schedule == Schedule::SingleQuery) {
                state.apply(oracle);
            } else {
                for (const auto& op : memory_ops)
                    state.apply(op);
            }
            state = reflect_about(state, psi0);
        }
    }

    std::vector<std::uint32_t> tag_qubits(db.q_t);
    std::iota(tag_qubits.begin(), tag_qubits.end(), 0u);

    AlignmentResult result;
    result.tag_probabilities = state.marginal(tag_qubits);
    result.histogram = state.sample(tag_qubits, cfg.shots, cfg.seed);

    const std::uint64_t encq = encode_pattern(query);
    for (const auto& [tag, bits] : db.memories)
        result.classical_distances[tag] =
            static_cast<std::uint32_t>(std::popcount(bits ^ encq));

    result.ranking.resize(result.tag_probabilities.size());
    std::iota(result.ranking.begin(), result.ranking.end(), 0u);
    std::stable_sort(result.ranking.begin(), result.ranking.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return result.tag_probabilities[a] > result.tag_probabilities[b];
                     });

    double best_p = -1.0;
    for (const auto& [tag, bits] : db.memories) {
        if (result.tag_probabilities[tag] > best_p) {
            best_p = result.tag_probabilities[tag];
            result.best_index = tag;
        }
    }
    return result;
}

BoyerResult boyer_search(const Dna& reference, const Dna& query, const QueryConfig& cfg) {
    const auto* policy = std::get_if<BoyerRandomized>(&cfg.iterations);
    if (!policy)
        throw Error(Errc::InvalidParameters, "boyer_search needs the BoyerRandomized policy");
    if (policy->max_rounds == 0)
        throw Error(Errc::MaxRoundsExceeded, "max_rounds = 0");

    const ClassicalAlignment truth = classical_align(reference, query);
    const QuantumDatabase db = make_database(reference, query.size());
    double m = 1.0;
    const double cap = std::sqrt(static_cast<double>(db.tag_space()));

    BoyerResult best{0, false, policy->max_rounds};
    std::uint32_t best_distance = std::numeric_limits<std::uint32_t>::max();
    bool have_best = false;

    for (std::uint32_t round = 0; round < policy->max_rounds; ++round) {
        SplitMix64 rng(mix_seed(policy->seed, round));
        const std::uint64_t k = rng.next_below(static_cast<std::uint64_t>(std::ceil(m)));

        QueryConfig sub = cfg;
        sub.iterations = Fixed{k};
        sub.shots = 1;
        sub.seed = rng.next();
        const AlignmentResult res = align(reference, query, sub);
        const std::uint64_t tag = res.histogram.begin()->first;

        // spurious tags have no window and can never verify
        const auto it = res.classical_distances.find(static_cast<std::uint32_t>(tag));
        const std::uint32_t distance =
            it == res.classical_distances.end() ? std::numeric_limits<std::uint32_t>::max()
                                                : it->second;
        if (!have_best || distance < best_distance) {
            best.tag = tag;
            best_distance = distance;
            have_best = true;
        }
        if (distance == truth.min_distance)
            return {tag, true, round + 1};
        m = std::min(m * 1.2, cap);
    }
    return best;
}

} // namespace qpm
