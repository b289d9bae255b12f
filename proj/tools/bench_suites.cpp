// Compares the parallel trial kernel against the serial reference: identical
// per-index results (bit-for-bit digests) and the wall-clock ratio.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "rikit/corpus.hpp"
#include "rikit/parallel.hpp"
#include "rikit/space.hpp"

using namespace rikit;

namespace {

using Runner = void (*)(int, const std::function<void(int)>&);

struct BenchResult {
  double seconds;
  uint64_t digest;
};

// One trial: three quasinorms of a seeded random layout, folded into a
// bit-stable digest so parallel and serial runs can be compared exactly.
BenchResult run_kernel(Runner runner, int trials, uint64_t seed) {
  const auto sqrt_shape = shapefn::power_shape(Rat(1), Rat(1, 2));
  const auto weak = spaces::SpaceSpec::weak_marcinkiewicz(sqrt_shape);
  const auto strong = spaces::SpaceSpec::marcinkiewicz(sqrt_shape);
  const auto lorentz = spaces::SpaceSpec::lorentz(ExtRat(Rat(2)), ExtRat(Rat(1)));
  std::vector<uint64_t> slots(static_cast<size_t>(trials), 0);

  const auto t0 = std::chrono::steady_clock::now();
  runner(trials, [&](int i) {
    corpus::Rng rng(corpus::trial_seed(seed, static_cast<uint64_t>(i)));
    const auto f = corpus::random_compact_step(rng, 8);
    uint64_t h = 0;
    for (const auto* spec : {&weak, &strong, &lorentz}) {
      const double v = spaces::norm(*spec, f).value();
      uint64_t bits;
      static_assert(sizeof(bits) == sizeof(v));
      __builtin_memcpy(&bits, &v, sizeof(bits));
      h = (h ^ bits) * 0x100000001b3ULL;
    }
    slots[static_cast<size_t>(i)] = h;
  });
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  uint64_t digest = 0xcbf29ce484222325ULL;
  for (const uint64_t s : slots) digest = (digest ^ s) * 0x100000001b3ULL;
  return {dt, digest};
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 4000;
  const uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
  if (trials < 1) {
    std::fprintf(stderr, "usage: bench_suites [trials] [seed]\n");
    return 2;
  }

  std::printf("workers: %d, trials: %d, seed: %llu\n", parallel::max_parallelism(), trials,
              static_cast<unsigned long long>(seed));
  const BenchResult serial = run_kernel(&parallel::run_indexed_serial, trials, seed);
  const BenchResult par = run_kernel(&parallel::run_indexed, trials, seed);
  std::printf("serial:   %8.3fs  digest %016llx\n", serial.seconds,
              static_cast<unsigned long long>(serial.digest));
  std::printf("parallel: %8.3fs  digest %016llx\n", par.seconds,
              static_cast<unsigned long long>(par.digest));
  if (par.digest != serial.digest) {
    std::printf("MISMATCH: parallel kernel diverged from the serial reference\n");
    return 1;
  }
  std::printf("speedup:  %.2fx, results identical\n",
              par.seconds > 0 ? serial.seconds / par.seconds : 0.0);
  return 0;
}
