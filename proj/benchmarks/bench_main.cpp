#include <benchmark/benchmark.h>

#include "qpm/dna.hpp"
#include "qpm/qasm.hpp"
#include "qpm/qibam.hpp"
#include "test_helpers.hpp"

using namespace qpm;

namespace {

void BM_HadamardKernel(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    StateVector s(n);
    std::uint32_t q = 0;
    for (auto _ : state) {
        s.apply(GateOp::h(q));
        q = (q + 1) % n;
        benchmark::DoNotOptimize(s.amplitude(0));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}
BENCHMARK(BM_HadamardKernel)->Arg(16)->Arg(18)->Arg(20);

void BM_MultiControlledX(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    StateVector s(n);
    for (std::uint32_t q = 0; q < n; ++q)
        s.apply(GateOp::h(q));
    const GateOp op = GateOp::controlled_x({0, 1, 2, 3}, n - 1);
    for (auto _ : state) {
        s.apply(op);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}
BENCHMARK(BM_MultiControlledX)->Arg(16)->Arg(20);

void BM_DenseUnitary4(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    StateVector s(n);
    for (std::uint32_t q = 0; q < n; ++q)
        s.apply(GateOp::h(q));
    const GateOp op =
        GateOp::dense_unitary_unchecked({0, 2, 4, 6}, testutil::random_unitary(16, 5));
    for (auto _ : state) {
        s.apply(op);
        benchmark::DoNotOptimize(s.amplitude(0));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}
BENCHMARK(BM_DenseUnitary4)->Arg(12)->Arg(16);

void BM_AlignPipeline(benchmark::State& state) {
    const Dna ref = Dna::from_string("AATTGTCTAGGCGACC");
    const Dna query = Dna::from_string("CA");
    QueryConfig cfg;
    cfg.iterations = Fixed{static_cast<std::uint64_t>(state.range(0))};
    cfg.shots = 1024;
    for (auto _ : state) {
        const auto res = align(ref, query, cfg);
        benchmark::DoNotOptimize(res.best_index);
    }
}
BENCHMARK(BM_AlignPipeline)->Arg(1)->Arg(3);

void BM_SerializeParse(benchmark::State& state) {
    const Circuit circuit = testutil::random_serializable_circuit(8, 200, 33);
    for (auto _ : state) {
        const Circuit back = parse(serialize(circuit));
        benchmark::DoNotOptimize(back.num_qubits());
    }
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_SerializeParse);

void BM_Sampling(benchmark::State& state) {
    StateVector s(10);
    for (std::uint32_t q = 0; q < 10; ++q)
        s.apply(GateOp::h(q));
    s.apply(GateOp::ry(3, 0.7));
    const std::vector<std::uint32_t> qubits{0, 1, 2, 3, 4};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto hist = s.sample(qubits, 100000, ++seed);
        benchmark::DoNotOptimize(hist.size());
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_Sampling);

} // namespace

BENCHMARK_MAIN();
