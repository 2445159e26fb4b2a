// Benchmark comparing the serial reference kernels against the OpenMP
// parallel kernels for both enumeration strategies.  Results are printed
// as a plain table; pass --quick to run with smaller sizes (used in CI).

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pavenum/enumeration.hpp"
#include "pavenum/patterns_catalog.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_once(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
  double best = time_once(fn);
  for (int i = 1; i < reps; ++i) best = std::min(best, time_once(fn));
  return best;
}

struct Row {
  std::string kernel;
  std::string cls;
  int n;
  double serial_ms;
  double parallel_ms;
};

void print_rows(const std::vector<Row>& rows) {
  std::cout << std::left << std::setw(14) << "kernel" << std::setw(10)
            << "class" << std::setw(5) << "n" << std::right << std::setw(14)
            << "serial(ms)" << std::setw(14) << "parallel(ms)" << std::setw(10)
            << "speedup" << '\n';
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(14) << r.kernel << std::setw(10)
              << r.cls << std::setw(5) << r.n << std::right << std::fixed
              << std::setprecision(2) << std::setw(14) << r.serial_ms
              << std::setw(14) << r.parallel_ms << std::setw(10)
              << (r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0)
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--quick") quick = true;
  }

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads: " << omp_get_max_threads()
            << "\n\n";
#else
  std::cout << "OpenMP NOT enabled; both columns run the serial kernel.\n\n";
#endif

  pav::EnumerationLimits limits;
  limits.factorial_cap = 20;
  limits.node_cap = 2'000'000'000ULL;

  const int reps = quick ? 1 : 3;
  const int brute_n = quick ? 9 : 11;
  const int eco_n = quick ? 12 : 16;

  std::vector<Row> rows;

  for (const std::string id : {"CATALAN", "PELL"}) {
    const auto cls = pav::make_class(id);
    Row row{"brute-force", id, brute_n, 0.0, 0.0};
    row.serial_ms = best_of(reps, [&] {
      (void)pav::brute_force_counts_serial(cls, brute_n, limits);
    });
    row.parallel_ms = best_of(
        reps, [&] { (void)pav::brute_force_counts(cls, brute_n, limits); });
    rows.push_back(row);
  }

  for (const std::string id : {"CATALAN", "CAT1", "DIRECT"}) {
    const auto cls =
        pav::make_class(id, id == "CATALAN" ? std::nullopt
                                            : std::optional<int>(6));
    Row row{"eco-walk", id, eco_n, 0.0, 0.0};
    row.serial_ms = best_of(
        reps, [&] { (void)pav::eco_counts_serial(cls, eco_n, limits); });
    row.parallel_ms =
        best_of(reps, [&] { (void)pav::eco_counts(cls, eco_n, limits); });
    rows.push_back(row);
  }

  print_rows(rows);
  return 0;
}
