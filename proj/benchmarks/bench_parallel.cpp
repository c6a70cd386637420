#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "polylaw/coherence.hpp"
#include "polylaw/parallel.hpp"
#include "polylaw/report.hpp"

// Compares the serial reference path against the work-shared path of the
// enumeration suites. Both must produce byte-identical reports; the timings
// show what the current worker count buys (POLYLAW_THREADS caps it).

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
bool bench(const char* name, F&& run) {
  setenv("POLYLAW_THREADS", "1", 1);
  auto t0 = Clock::now();
  polylaw::report::Report serial = run();
  auto t1 = Clock::now();
  unsetenv("POLYLAW_THREADS");
  auto t2 = Clock::now();
  polylaw::report::Report parallel = run();
  auto t3 = Clock::now();

  double ts = seconds(t0, t1), tp = seconds(t2, t3);
  bool same = serial.to_json() == parallel.to_json();
  std::printf("%-28s serial %8.3fs  parallel %8.3fs (%d workers)  speedup %.2fx  %s\n",
              name, ts, tp, polylaw::parallel::worker_count(),
              tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
  return same;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= bench("pdd3 suite (bound 2)", [] { return polylaw::coherence::check_pdd3(2); });
  ok &= bench("pda suite (bound 3)", [] { return polylaw::coherence::check_pda_local_monos(3); });
  ok &= bench("pdd2 suite (bound 4)", [] { return polylaw::coherence::check_pdd2(4); });
  return ok ? 0 : 1;
}
