// Serial reference kernels vs their OpenMP counterparts.

#include "coarse/aggregation.hpp"
#include "coarse/choice.hpp"
#include "coarse/criteria.hpp"
#include "coarse/storage.hpp"

#include "support/generators.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace coarse;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void compare(const char* name, const std::function<void(Exec)>& fn, int reps = 3) {
  const double s = seconds([&] { fn(Exec::serial); }, reps);
  const double p = seconds([&] { fn(Exec::parallel); }, reps);
  std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  testgen::Rng rng(99);

  const auto cube = bitCubeCriteria(4);
  const auto wide = testgen::randomCriteriaSet(rng, 16, 3, 4);
  compare("buildMaxChoice bit cube n=16", [&](Exec e) { buildMaxChoice(cube, e); });
  compare("buildMaxChoice random n=16", [&](Exec e) { buildMaxChoice(wide, e); });

  const auto c = buildMaxChoice(wide);
  compare("choiceClasses n=16", [&](Exec e) { choiceClasses(c, e); }, 1);
  compare("rationalizable n=16", [&](Exec e) { rationalizable(c, e); });
  compare("condorcetConsistent n=16", [&](Exec e) { condorcetConsistent(c, e); });

  const auto binary = testgen::randomBinaryCriteriaSet(rng, 16, 6);
  WeightProfile w{{3, 2, 2, 1, 1, 1}};
  compare("aggregateChoice n=16", [&](Exec e) { aggregateChoice(binary, w, e); });

  std::vector<CriteriaSet> sets;
  for (int i = 0; i < 5000; ++i) sets.push_back(testgen::randomCriteriaSet(rng, testgen::uniform(rng, 2, 8), 3, 3));
  compare("theoremBatch 5000 sets", [&](Exec e) { theoremBatch(sets, e); });

  compare("radixSweep n<=200000 k<=20", [&](Exec e) { radixSweep(CostModel::linear(1), 20, 200000, e); });
  compare("binaryAlwaysOptimal k^2 n<=10^6", [&](Exec e) { binaryAlwaysOptimal(CostModel::power(2), 20, 1000000, e); });
  return 0;
}
