#include "schreier/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

__extension__ typedef unsigned __int128 Wide;

void check_oracle_n(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("oracle: n must be >= 1");
  if (n > kOracleMaxN) {
    throw OracleGuardError("instance too large for oracle: n = " + std::to_string(n) +
                           " exceeds " + std::to_string(kOracleMaxN));
  }
}

// Bit i of mask selects element i+1; element n is always present.
FiniteSet set_from_mask(std::uint64_t mask, std::uint64_t n) {
  std::vector<Element> v;
  v.reserve(std::popcount(mask) + 1);
  for (std::uint64_t i = 0; i + 1 < n; ++i) {
    if (mask >> i & 1U) v.push_back(i + 1);
  }
  v.push_back(n);
  return FiniteSet(std::move(v));
}

bool mask_is_member(std::uint64_t mask, std::uint64_t n, const Ratio& r) {
  const std::uint64_t size = std::popcount(mask) + 1;
  const std::uint64_t min = mask ? std::countr_zero(mask) + 1 : n;
  return Wide(r.q) * min >= Wide(r.p) * size;
}

}  // namespace

bool colex_less(const FiniteSet& a, const FiniteSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.rbegin(), ea.rend(), eb.rbegin(), eb.rend());
}

FamilyListing enumerate_spq(std::uint64_t n, const Ratio& r) {
  check_oracle_n(n);
  FamilyListing out{n, r, {}};
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    FiniteSet f = set_from_mask(mask, n);
    if (is_in_spq_family(f, r, n)) out.members.push_back(std::move(f));
  }
  return out;
}

Count count_spq_bruteforce_serial(std::uint64_t n, const Ratio& r) {
  check_oracle_n(n);
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (mask_is_member(mask, n, r)) ++total;
  }
  return total;
}

Count count_spq_bruteforce(std::uint64_t n, const Ratio& r) {
  check_oracle_n(n);
  const std::int64_t masks = std::int64_t{1} << (n - 1);
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (masks >= (1 << 16))
  for (std::int64_t mask = 0; mask < masks; ++mask) {
    if (mask_is_member(static_cast<std::uint64_t>(mask), n, r)) ++total;
  }
  return total;
}

FamilyListing enumerate_interval_schreier(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p == 0) throw std::invalid_argument("interval enumeration: n, p must be >= 1");
  FamilyListing out{n, IntervalBound{p}, {}};
  for (Element lo = 1; lo <= n; ++lo) {
    for (Element hi = lo; hi <= n; ++hi) {
      FiniteSet f = FiniteSet::interval(lo, hi);
      if (Wide(p) * f.min() >= f.size()) out.members.push_back(std::move(f));
    }
  }
  return out;
}

Count count_interval_bruteforce(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p == 0) throw std::invalid_argument("interval count: n, p must be >= 1");
  std::uint64_t total = 0;
  for (std::uint64_t lo = 1; lo <= n; ++lo) {
    for (std::uint64_t hi = lo; hi <= n; ++hi) {
      if (Wide(p) * lo >= hi - lo + 1) ++total;
    }
  }
  return total;
}

}  // namespace schreier
