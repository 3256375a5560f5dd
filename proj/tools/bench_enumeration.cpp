// Times the OpenMP enumeration kernels against their serial references on a
// planted instance and its encoded polynomial system, checking that both
// produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fracgb/encode.hpp"
#include "fracgb/oracle.hpp"
#include "fracgb/tailor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int literals = 20;
  int predicates = 60;
  std::uint64_t seed = 1;
  if (argc > 1) literals = std::atoi(argv[1]);
  if (argc > 2) predicates = std::atoi(argv[2]);
  if (argc > 3) seed = std::strtoull(argv[3], nullptr, 10);

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; both columns run serially\n");
#endif
  std::printf("instance: not2, %d literals, %d predicates, seed %llu\n\n", literals, predicates,
              static_cast<unsigned long long>(seed));

  const auto [inst, planted] = fracgb::generate_satisfiable(fracgb::Kind::Not2, literals, predicates, seed);

  fracgb::BruteMaxResult serial_max, parallel_max;
  const double t_max_serial = time_ms([&] { serial_max = fracgb::brute_max_fraction_serial(inst); });
  const double t_max_parallel = time_ms([&] { parallel_max = fracgb::brute_max_fraction(inst); });
  const bool max_equal = serial_max.best_satisfied == parallel_max.best_satisfied &&
                         serial_max.witness == parallel_max.witness;
  std::printf("%-24s %10.1f ms %10.1f ms   speedup %4.2fx   %s\n", "brute_max_fraction",
              t_max_serial, t_max_parallel, t_max_serial / t_max_parallel,
              max_equal ? "results match" : "MISMATCH");

  const fracgb::TailorResult tailored = fracgb::tailor(inst);
  const fracgb::PolynomialSystem sys = fracgb::encode(tailored.instance, 32003);
  std::vector<std::uint32_t> serial_variety, parallel_variety;
  const double t_var_serial =
      time_ms([&] { serial_variety = fracgb::brute_variety_serial(sys.all_polys(), sys.num_vars); });
  const double t_var_parallel =
      time_ms([&] { parallel_variety = fracgb::brute_variety(sys.all_polys(), sys.num_vars); });
  std::printf("%-24s %10.1f ms %10.1f ms   speedup %4.2fx   %s\n", "brute_variety", t_var_serial,
              t_var_parallel, t_var_serial / t_var_parallel,
              serial_variety == parallel_variety ? "results match" : "MISMATCH");
  std::printf("\nvariety points: %zu of 2^%d\n", serial_variety.size(), sys.num_vars);

  return (max_equal && serial_variety == parallel_variety) ? 0 : 1;
}
