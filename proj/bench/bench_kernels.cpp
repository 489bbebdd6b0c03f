// Timing comparison of the OpenMP kernels against their serial references:
// full 2^N enumeration and the O(N^2) path sum.

#include <chrono>
#include <cstdio>

#include "stabtherm/exact.hpp"
#include "stabtherm/structures.hpp"
#include "stabtherm/thermo.hpp"

using namespace stabtherm;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial (ms)", "parallel", "speedup");

  {
    const ZHamiltonian h =
        build_graph_hamiltonian(build_structure(StructureSpec::sized(StructureKind::line, 20)));
    volatile double sink = 0;
    const double ts = time_ms([&] { sink = exact_thermo_serial(h, 0.9).chi; }, 3);
    const double tp = time_ms([&] { sink = exact_thermo(h, 0.9).chi; }, 3);
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "enumeration, line N=20", ts, tp, ts / tp);
  }

  {
    const SpinGraph g = build_structure(StructureSpec::leveled(StructureKind::s3, 7));
    volatile double sink = 0;
    const double ts = time_ms([&] { sink = path_thermo_serial(g, 0.8).m2; }, 3);
    const double tp = time_ms([&] { sink = path_thermo(g, 0.8).m2; }, 3);
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "path pair sum, s3 k=7", ts, tp, ts / tp);
  }

  return 0;
}
