// Serial reference path against the OpenMP kernels. Prints one row per kernel.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <vector>

#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/extremal.hpp"
#include "simplex_sections/parallel.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/spectral.hpp"

using namespace simplex_sections;

namespace {

double best_of(int reps, const std::function<double(Execution)>& f, Execution exec, double& value) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    value = f(exec);
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  const Direction a(Vec{0.8, 0.1, -0.3, 0.4, -0.2, 0.25});
  const auto s5 = SimplexSpec::regular(5);
  const auto h6 = SubspaceBasis::hyperplane(special_max_direction(6));
  const std::vector<std::pair<const char*, std::function<double(Execution)>>> kernels{
      {"mc_slab_volume n=5 2^21", [&](Execution e) { return mc_slab_volume(s5, a, 1e-3, 1 << 21, 1, e).value; }},
      {"mc_exponential_check n=6 2^19", [&](Execution e) { return mc_exponential_check(h6, 1 << 19, 1, e).value; }},
      {"verify_noncentral_bound n=7 2e4",
       [](Execution e) { return verify_noncentral_bound(7, 0.5, 20000, 1, e).extreme; }},
      {"verify_kdim_bound n=6 k=4 400", [](Execution e) { return verify_kdim_bound(6, 4, 400, 1, e).max_general_ratio; }},
  };
  std::printf("threads %d\n%-34s %12s %12s %8s %s\n", max_threads(), "kernel", "serial ms", "parallel ms", "speedup",
              "identical");
  for (const auto& [name, f] : kernels) {
    double vs = 0.0, vp = 0.0;
    const double ts = best_of(reps, f, Execution::Serial, vs);
    const double tp = best_of(reps, f, Execution::Parallel, vp);
    std::printf("%-34s %12.2f %12.2f %8.2f %s\n", name, ts, tp, ts / tp, vs == vp ? "yes" : "NO");
  }
}
