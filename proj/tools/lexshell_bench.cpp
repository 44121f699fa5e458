// Times the corpus kernels with the serial reference path (jobs = 1)
// against the OpenMP path, and prints the speedup.

#include <chrono>
#include <cstdio>

#include "lexshell/verifier.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double timed(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench(const char* name, int rank, int max_n, int jobs) {
  using namespace lexshell;
  double serial = timed([&] {
    Corpus c = enumerate_up_to(rank, max_n, 1);
    based_matroids(c, 1);
    verify_structure(c, 1);
  });
  double parallel = timed([&] {
    Corpus c = enumerate_up_to(rank, max_n, jobs);
    based_matroids(c, jobs);
    verify_structure(c, jobs);
  });
  std::printf("%-28s serial %8.3fs   %d jobs %8.3fs   speedup %.2fx\n", name,
              serial, jobs, parallel, serial / parallel);
}

}  // namespace

int main() {
  int jobs = lexshell::default_jobs();
  std::printf("jobs available: %d\n", jobs);
  bench("rank-3 corpus (n <= 6)", 3, 6, jobs);
  bench("rank-4 corpus (n <= 7)", 4, 7, jobs);
  return 0;
}
