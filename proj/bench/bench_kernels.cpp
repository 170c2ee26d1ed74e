// Serial vs OpenMP comparison for the two data-parallel kernels: the
// Matsubara sum inside the plane-plane free energy, and row-parallel
// correction curves.  Also asserts that both paths agree bitwise (they use
// ordered reductions, so any difference is a bug).
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "casimir/corrections.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/threading.hpp"

using namespace casimir;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double bench_free_energy(Exec exec, int repeats, double* checksum) {
  lifshitz::Options opts;
  opts.exec = exec;
  const double wp = lifshitz::gold_plasma_frequency();
  std::vector<double> grid;
  for (int i = 0; i < 48; ++i) grid.push_back(0.4e-6 + i * 0.15e-6);
  const auto t0 = Clock::now();
  double acc = 0.0;
  for (int r = 0; r < repeats; ++r) {
    for (double l : grid) {
      acc += lifshitz::free_energy_pp(l, lifshitz::Plasma{wp}, {300.0}, opts);
    }
  }
  *checksum = acc;
  return ms_since(t0) / repeats;
}

double bench_curve(Exec exec, int repeats, double* checksum) {
  std::vector<double> grid;
  for (int i = 0; i < 24; ++i) grid.push_back(1e-6 + i * 0.25e-6);
  const double wp = lifshitz::gold_plasma_frequency();
  const corrections::CurveParams params{};
  const auto t0 = Clock::now();
  double acc = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const auto curve = corrections::correction_curve(
        corrections::GeometryKind::ParallelPlates, params,
        lifshitz::Plasma{wp}, {300.0}, grid, exec);
    for (const auto& row : curve.rows) acc += row.ratio;
  }
  *checksum = acc;
  return ms_since(t0) / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads available: %d\n\n", max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [ms]", "openmp [ms]",
              "speedup");

  double cs, cp;
  const double fe_s = bench_free_energy(Exec::Serial, repeats, &cs);
  const double fe_p = bench_free_energy(Exec::Parallel, repeats, &cp);
  if (cs != cp) {
    std::fprintf(stderr, "FATAL: Matsubara checksum mismatch (%.17g vs %.17g)\n",
                 cs, cp);
    return 1;
  }
  std::printf("%-28s %12.2f %12.2f %8.2fx\n", "matsubara free energy x48",
              fe_s, fe_p, fe_s / fe_p);

  const double cu_s = bench_curve(Exec::Serial, repeats, &cs);
  const double cu_p = bench_curve(Exec::Parallel, repeats, &cp);
  if (cs != cp) {
    std::fprintf(stderr, "FATAL: curve checksum mismatch (%.17g vs %.17g)\n",
                 cs, cp);
    return 1;
  }
  std::printf("%-28s %12.2f %12.2f %8.2fx\n", "correction curve x24 rows",
              cu_s, cu_p, cu_s / cu_p);
  std::printf("\nserial and parallel paths agreed bitwise on both kernels\n");
  return 0;
}
