#pragma once

// Brute-force enumerators. These are the oracles every faster method is
// checked against, so they trade speed for being plainly correct.

#include <cstdint>
#include <variant>
#include <vector>

#include "schreier/count.hpp"
#include "schreier/finite_set.hpp"

namespace schreier {

// Largest n accepted by the S^{p/q}_n oracle (2^(n-1) candidate subsets).
inline constexpr std::uint64_t kOracleMaxN = 30;

// Parameter of the interval family: intervals F with p * min F >= |F|.
struct IntervalBound {
  std::uint64_t p;
  friend bool operator==(const IntervalBound&, const IntervalBound&) = default;
};

struct FamilyListing {
  std::uint64_t n;
  std::variant<Ratio, IntervalBound> params;
  // S^{p/q}_n listings are in bitmask order over {1..n-1}, i.e. colexicographic
  // (compare from the largest element down). Interval listings are
  // lexicographic.
  std::vector<FiniteSet> members;

  std::size_t size() const { return members.size(); }
};

// Colexicographic comparison used for S^{p/q}_n listings.
bool colex_less(const FiniteSet& a, const FiniteSet& b);

// Throws OracleGuardError when n > kOracleMaxN, std::invalid_argument when
// n == 0.
FamilyListing enumerate_spq(std::uint64_t n, const Ratio& r);

// Streaming count over all 2^(n-1) masks; OpenMP-parallel.
Count count_spq_bruteforce(std::uint64_t n, const Ratio& r);
// Serial reference for count_spq_bruteforce.
Count count_spq_bruteforce_serial(std::uint64_t n, const Ratio& r);

FamilyListing enumerate_interval_schreier(std::uint64_t n, std::uint64_t p);
Count count_interval_bruteforce(std::uint64_t n, std::uint64_t p);

}  // namespace schreier
