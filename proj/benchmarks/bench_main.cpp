#include <benchmark/benchmark.h>

#include "poolshot/corpus.hpp"
#include "poolshot/oracle.hpp"
#include "poolshot/prover.hpp"

using namespace poolshot;

namespace {

const CodeSequence kSix{1, 1, 2, 3, 3, 2};
const CodeSequence kTen{1, 1, 1, 1, 2, 1, 1, 1, 1, 2};

void BM_EncloseSin(benchmark::State& state) {
  const Precision p{static_cast<int>(state.range(0))};
  const RationalAngle a{parse_rational("37.123456")};
  for (auto _ : state) benchmark::DoNotOptimize(enclose_sin(a, p));
}
BENCHMARK(BM_EncloseSin)->Arg(7)->Arg(15)->Arg(30);

void BM_Unfold(benchmark::State& state) {
  const AngleAssignment asg = assign_angles(kTen, Angle::X, Angle::Y);
  const Triangle tri(70, 60);
  for (auto _ : state) benchmark::DoNotOptimize(unfold(kTen, asg, tri, Precision{7}));
}
BENCHMARK(BM_Unfold);

void BM_TestII(benchmark::State& state) {
  const AngleAssignment asg = assign_angles(kTen, Angle::X, Angle::Y);
  const Triangle tri(70, 60);
  Tower t = unfold(kTen, asg, tri, Precision{7});
  ShootingVector w = shooting_vector(kTen, asg, tri, t);
  for (auto _ : state) benchmark::DoNotOptimize(test_II(t, w));
}
BENCHMARK(BM_TestII);

void BM_ShootingVectorSymbolic(benchmark::State& state) {
  const AngleAssignment asg = assign_angles(kSix, Angle::X, Angle::Y);
  Tower t = unfold(kSix, asg, Triangle(50, 50), Precision{7});
  for (auto _ : state) benchmark::DoNotOptimize(tower_shooting_vector(t));
}
BENCHMARK(BM_ShootingVectorSymbolic);

void BM_CertifySquare(benchmark::State& state) {
  auto sys = region_system(kTen, assign_angles(kTen, Angle::X, Angle::Y));
  sys->ensure_complete();
  const Square sq{70, 60, ratio(1, 100)};
  for (auto _ : state) benchmark::DoNotOptimize(certify_square(*sys, sq, Precision{7}));
}
BENCHMARK(BM_CertifySquare);

void BM_RegionSystem(benchmark::State& state) {
  auto corpus = corpus_codes(load_corpus(POOLSHOT_DATA_DIR "/strip_corpus.txt"));
  const CodeSequence& code = corpus.at(static_cast<size_t>(state.range(0)));
  const AngleAssignment asg = assign_angles(code, Angle::X, Angle::Y);
  for (auto _ : state) {
    auto sys = region_system(code, asg);
    sys->ensure_complete();
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_RegionSystem)->Arg(0)->Arg(60)->Arg(133)->Unit(benchmark::kMillisecond);

void BM_FindOrbit(benchmark::State& state) {
  const AngleAssignment asg = assign_angles(kTen, Angle::X, Angle::Y);
  const Triangle tri(70, 60);
  for (auto _ : state) benchmark::DoNotOptimize(find_orbit(tri, kTen, asg));
}
BENCHMARK(BM_FindOrbit);

void BM_AcuteCover(benchmark::State& state) {
  const std::vector<Point2> target{{50, 60}, {70, 55}, {65, 75}};
  CoverOptions opt;
  opt.max_depth = static_cast<int>(state.range(0));
  const std::vector<CodeSequence> corpus{{1, 1, 1}, kTen};
  for (auto _ : state) benchmark::DoNotOptimize(cover(target, corpus, opt));
}
BENCHMARK(BM_AcuteCover)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
