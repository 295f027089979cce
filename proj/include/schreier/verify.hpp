#pragma once

// Property grids over the identities, run case by case. Cases are evaluated
// in parallel (OpenMP) or serially; the report is identical either way since
// results are gathered into a vector in case order before aggregation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schreier/counting.hpp"

namespace schreier {

enum class Execution { serial, parallel };

struct VerifyReport {
  std::string suite;
  std::string grid;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_counterexample;

  bool pass() const { return failures == 0; }
  std::string summary() const;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct RecurrenceGrid {
  std::uint64_t p_max = 4;
  std::uint64_t q_max = 4;
  std::uint64_t n_max = 20;
};

// Recurrence vs oracle, for every (p,q,n) in the grid. n_max must respect
// the oracle guard (OracleGuardError otherwise). A non-null base replaces
// the base-case supplier, which is how fault injection is exercised.
VerifyReport verify_recurrence(const RecurrenceGrid& grid, Execution exec = Execution::parallel,
                               const BaseCaseFn* base = nullptr);

// Recurrence vs the binomial sum; no guard.
VerifyReport verify_direct(const RecurrenceGrid& grid, Execution exec = Execution::parallel);

struct BijectionGrid {
  std::uint64_t p_max = 3;
  std::uint64_t q_max = 3;
  std::uint64_t n_max = 14;
};

// For p+q <= n <= n_max: every phi_G bijection (one case per G).
VerifyReport verify_phi_G(const BijectionGrid& grid, Execution exec = Execution::parallel);
// For p+q <= n <= n_max: phi_A bijection and inclusion-exclusion assembly
// against the oracle count, with each layer equal to C(q,i)|S_{n-i}|.
VerifyReport verify_phi_A(const BijectionGrid& grid, Execution exec = Execution::parallel);

struct ScaleGrid {
  std::uint64_t p_max = 3;
  std::uint64_t q_max = 3;
  std::uint64_t n_max = 200;
  std::vector<std::uint64_t> factors{2, 3, 5};
};

// sequence_spq(n_max, (p,q)) == sequence_spq(n_max, (kp,kq)) element-wise.
VerifyReport verify_scale_invariance(const ScaleGrid& grid, Execution exec = Execution::parallel);

struct TuranGrid {
  std::uint64_t p_max = 10;
  std::uint64_t n_max = 100;
  std::uint64_t enumeration_cap = 200;
};

// verify_turan_identity for 1 <= p <= p_max, p <= n <= n_max.
VerifyReport verify_turan_identity_grid(const TuranGrid& grid, Execution exec = Execution::parallel);

struct IntervalGrid {
  std::uint64_t p_max = 10;
  std::uint64_t n_max = 200;
};

// Sr by sum, closed form and enumeration for 1 <= p <= p_max, 1 <= n <= n_max
// (the p > n cells included).
VerifyReport verify_interval_counts(const IntervalGrid& grid, Execution exec = Execution::parallel);

struct TuranEdgeGrid {
  std::uint64_t p_max = 20;
  std::uint64_t n_max = 300;
};

// Formula vs construction for 1 <= p <= p_max, p <= n <= n_max.
VerifyReport verify_turan_edges(const TuranEdgeGrid& grid, Execution exec = Execution::parallel);

}  // namespace schreier
