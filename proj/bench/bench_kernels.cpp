// Serial reference vs OpenMP kernels, plus the oracle/recurrence gap.
//
//   schreier_bench [--quick]
//
// Exits nonzero if a serial and a parallel run ever disagree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>

#include "schreier/counting.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

namespace {

template <class Fn>
double seconds(const Fn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int mismatches = 0;

void row(const char* what, double serial, double parallel, bool agree) {
  if (!agree) ++mismatches;
  std::printf("%-36s %10.4f %10.4f %7.2fx %s\n", what, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-36s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  for (std::uint64_t n : quick ? std::vector<std::uint64_t>{18} : std::vector<std::uint64_t>{24, 27, 30}) {
    const Ratio r(3, 2);
    Count a, b;
    const double s = seconds([&] { a = count_spq_bruteforce_serial(n, r); });
    const double p = seconds([&] { b = count_spq_bruteforce(n, r); });
    row(("oracle count n=" + std::to_string(n)).c_str(), s, p, a == b);
  }

  {
    const BijectionGrid g{3, 3, quick ? 10u : 14u};
    VerifyReport a, b;
    const double s = seconds([&] { a = verify_phi_G(g, Execution::serial); });
    const double p = seconds([&] { b = verify_phi_G(g, Execution::parallel); });
    row("verify phi_G grid", s, p, a == b);
  }
  {
    const TuranGrid g{quick ? 10u : 50u, quick ? 100u : 500u, 200};
    VerifyReport a, b;
    const double s = seconds([&] { a = verify_turan_identity_grid(g, Execution::serial); });
    const double p = seconds([&] { b = verify_turan_identity_grid(g, Execution::parallel); });
    row("verify turan-identity grid", s, p, a == b);
  }
  {
    const RecurrenceGrid g{6, 6, quick ? 60u : 300u};
    VerifyReport a, b;
    const double s = seconds([&] { a = verify_direct(g, Execution::serial); });
    const double p = seconds([&] { b = verify_direct(g, Execution::parallel); });
    row("verify recurrence-vs-direct grid", s, p, a == b);
  }

  std::printf("\n%-8s %14s %14s\n", "n", "oracle s", "recurrence s");
  const Ratio r(1, 1);
  for (std::uint64_t n = 10; n <= (quick ? 16u : kOracleMaxN); n += 2) {
    Count a, b;
    const double o = seconds([&] { a = count_spq_bruteforce(n, r); });
    const double c = seconds([&] { b = count_spq_recurrence(n, r); });
    if (a != b) ++mismatches;
    std::printf("%-8llu %14.6f %14.6f%s\n", static_cast<unsigned long long>(n), o, c,
                a == b ? "" : "  MISMATCH");
  }
  return mismatches == 0 ? 0 : 1;
}
