#pragma once

// Turán graph edge counts and interval-Schreier counts Sr(n, p), tied
// together by Sr(n, p) = T(n+1, p+1) for n >= p.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "schreier/count.hpp"

namespace schreier {

// Balanced partition of n vertices into p parts. Vertices are assigned in
// contiguous blocks, oversized parts first. With p > n the trailing parts
// are empty.
struct TuranSpec {
  std::uint64_t n;
  std::uint64_t parts;
  std::uint64_t residue;  // n - p * floor(n/p): number of oversized parts
  std::vector<std::uint64_t> part_sizes;

  // Part index of vertex v in {1..n}.
  std::uint64_t part_of(std::uint64_t v) const;
};

TuranSpec make_turan_spec(std::uint64_t n, std::uint64_t p);

// (n^2 - sum of squared part sizes) / 2 over the balanced partition.
Count turan_edges_construction(std::uint64_t n, std::uint64_t p);
// (p-1)(n^2 - r^2)/(2p) + C(r,2) with r the residue, for p <= n. Falls back
// to the construction when p > n. Throws std::logic_error if the division
// is not exact.
Count turan_edges_formula(std::uint64_t n, std::uint64_t p);

struct IntervalCountParams {
  std::uint64_t n;
  std::uint64_t p;
  std::uint64_t delta;  // floor((n+1)/(p+1))
};

IntervalCountParams interval_count_params(std::uint64_t n, std::uint64_t p);

// sum_{m=1}^{n} min(p m, n+1-m)
Count interval_count_sum(std::uint64_t n, std::uint64_t p);
// 1 if n = 1; C(n+1, 2) if p > n >= 2; else (p(D+1)D + (n-D+1)(n-D))/2.
Count interval_count_closed(std::uint64_t n, std::uint64_t p);

struct TuranIdentityReport {
  std::uint64_t n;
  std::uint64_t p;
  Count sr_sum;
  Count sr_closed;
  std::optional<Count> sr_enumerated;  // absent when n exceeds the cap
  Count t_formula;
  Count t_construction;
  bool pass;

  std::string str() const;
};

// Computes Sr(n,p) three ways and T(n+1,p+1) two ways. Requires n >= p;
// throws std::invalid_argument otherwise. Enumeration is skipped above
// enumeration_cap.
TuranIdentityReport verify_turan_identity(
    std::uint64_t n, std::uint64_t p,
    std::uint64_t enumeration_cap = std::numeric_limits<std::uint64_t>::max());

}  // namespace schreier
