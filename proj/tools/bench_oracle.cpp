// Compares the OpenMP prefix-partitioned oracle kernels against the serial
// reference on identical workloads and checks the tables match exactly.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clumpstat/oracle.hpp"

using namespace clumpstat;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 18;
  long samples = argc > 2 ? std::atol(argv[2]) : 200000;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "\n";

  Alphabet binary("ab");
  TextModel model = TextModel::bernoulli(binary, {rat(1, 3), rat(2, 3)});
  auto set = ReducedWordSet::validate({"aba", "bba"}, binary);

  {
    std::cout << "exhaustive joint distribution, n = " << n << " ("
              << text_count(binary, n) << " texts)\n";
    auto t0 = Clock::now();
    auto serial = exhaustive_distribution_serial(model, set, n, Statistic::Joint,
                                                 0, uint64_t(1) << 30);
    auto t1 = Clock::now();
    auto parallel = exhaustive_distribution(model, set, n, Statistic::Joint, 0,
                                            uint64_t(1) << 30);
    auto t2 = Clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::cout << "  serial:   " << ts << " s\n"
              << "  parallel: " << tp << " s  (speedup " << ts / tp << "x)\n"
              << "  tables identical: " << (serial == parallel ? "yes" : "NO")
              << ", total probability " << rat_string(parallel.total()) << "\n";
    if (!(serial == parallel)) return 1;
  }

  {
    std::cout << "monte carlo, n = 500, " << samples << " samples\n";
    auto t0 = Clock::now();
    auto mc = monte_carlo(model, set, 500, samples, 7, Statistic::ClumpCount);
    auto t1 = Clock::now();
    std::cout << "  sampled in " << seconds(t0, t1) << " s, mean clump count "
              << mc.mean << " (se " << mc.mean_se << ")\n";
  }
  return 0;
}
