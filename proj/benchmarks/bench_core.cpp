#include <benchmark/benchmark.h>

#include "fixlog/semantics.hpp"
#include "fixlog/verify.hpp"

using namespace fixlog;

namespace {

GroundProgram corpus_program(std::uint64_t seed, int atoms, int clauses, double neg) {
    CorpusSpec spec{seed, atoms, clauses, 3, neg, false};
    return generate_corpus(spec, 1).front();
}

const GroundProgram& game_program() {
    static GroundProgram g = ground_program(
        parse_program("win(X) :- move(X,Y), not win(Y).\nmove(a,b).\nmove(b,a).\nmove(b,c).\n"),
        0);
    return g;
}

} // namespace

static void BM_GlOperator(benchmark::State& state) {
    GroundProgram g = corpus_program(1, static_cast<int>(state.range(0)), 24, 0.5);
    Interpretation i(g.base().size());
    for (AtomIndex a = 0; a < g.base().size(); a += 2) i.add(a);
    for (auto _ : state) benchmark::DoNotOptimize(gl_operator(g, i));
}
BENCHMARK(BM_GlOperator)->Arg(10)->Arg(16);

static void BM_FixpointCompletion(benchmark::State& state) {
    GroundProgram g = corpus_program(2, static_cast<int>(state.range(0)), 24, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(fixpoint_completion(g).fix.size());
}
BENCHMARK(BM_FixpointCompletion)->Arg(10)->Arg(16);

static void BM_StableBruteforce(benchmark::State& state) {
    GroundProgram g = corpus_program(3, 10, 15, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(stable_models_bruteforce(g).models.size());
}
BENCHMARK(BM_StableBruteforce);

static void BM_WellFounded(benchmark::State& state) {
    const GroundProgram& g = game_program();
    for (auto _ : state) benchmark::DoNotOptimize(well_founded_model(g).true_set().count());
}
BENCHMARK(BM_WellFounded);

static void BM_ContractionExhaustive(benchmark::State& state) {
    CorpusSpec spec{4, 8, 12, 3, 0.5, true};
    GroundProgram g = generate_corpus(spec, 1).front();
    LevelMapping l = std::get<LevelMapping>(find_local_stratification(g));
    ContractionOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(contraction_report(g, l, opts).pairs_checked);
}
BENCHMARK(BM_ContractionExhaustive);

static void BM_Ground(benchmark::State& state) {
    Program p = parse_program(
        "win(X) :- move(X,Y), not win(Y).\nmove(a,b).\nmove(b,a).\nmove(b,c).\n"
        "move(c,d).\nmove(d,e).\nmove(e,a).\n");
    for (auto _ : state) benchmark::DoNotOptimize(ground_program(p, 0).clauses().size());
}
BENCHMARK(BM_Ground);

BENCHMARK_MAIN();
