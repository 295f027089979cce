#include "schreier/turan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schreier/counting.hpp"
#include "schreier/enumeration.hpp"

namespace schreier {

using Integer = Count::Integer;

namespace {

void require_positive(std::uint64_t n, std::uint64_t p, const char* what) {
  if (n == 0 || p == 0) throw std::invalid_argument(std::string(what) + ": n and p must be >= 1");
}

}  // namespace

std::uint64_t TuranSpec::part_of(std::uint64_t v) const {
  if (v == 0 || v > n) throw std::out_of_range("TuranSpec::part_of: vertex out of range");
  const std::uint64_t base = n / parts;
  const std::uint64_t idx = v - 1;
  const std::uint64_t big = residue * (base + 1);
  if (idx < big) return idx / (base + 1);
  return residue + (idx - big) / base;
}

TuranSpec make_turan_spec(std::uint64_t n, std::uint64_t p) {
  require_positive(n, p, "make_turan_spec");
  const std::uint64_t base = n / p;
  TuranSpec spec{n, p, n - p * base, {}};
  spec.part_sizes.assign(p, base);
  std::fill_n(spec.part_sizes.begin(), spec.residue, base + 1);
  return spec;
}

Count turan_edges_construction(std::uint64_t n, std::uint64_t p) {
  const TuranSpec spec = make_turan_spec(n, p);
  Integer squares = 0;
  for (std::uint64_t s : spec.part_sizes) squares += Integer(s) * s;
  return Count(Integer((Integer(n) * n - squares) / 2));
}

Count turan_edges_formula(std::uint64_t n, std::uint64_t p) {
  require_positive(n, p, "turan_edges_formula");
  if (p > n) return turan_edges_construction(n, p);
  const std::uint64_t residue = n - p * (n / p);
  const Integer numerator = Integer(p - 1) * (Integer(n) * n - Integer(residue) * residue);
  const Integer denominator = Integer(2) * p;
  if (numerator % denominator != 0) {
    throw std::logic_error("turan_edges_formula: (p-1)(n^2-r^2) not divisible by 2p at n = " +
                           std::to_string(n) + ", p = " + std::to_string(p));
  }
  return Count(Integer(numerator / denominator)) + binomial(residue, 2);
}

IntervalCountParams interval_count_params(std::uint64_t n, std::uint64_t p) {
  require_positive(n, p, "interval_count_params");
  return {n, p, (n + 1) / (p + 1)};
}

Count interval_count_sum(std::uint64_t n, std::uint64_t p) {
  require_positive(n, p, "interval_count_sum");
  Integer total = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    total += std::min(Integer(Integer(p) * m), Integer(n + 1 - m));
  }
  return Count(std::move(total));
}

Count interval_count_closed(std::uint64_t n, std::uint64_t p) {
  const IntervalCountParams params = interval_count_params(n, p);
  if (n == 1) return 1;
  if (p > n) return binomial(n + 1, 2);
  const Integer d = params.delta;
  const Integer twice = Integer(p) * (d + 1) * d + (Integer(n) - d + 1) * (Integer(n) - d);
  return Count(Integer(twice / 2));
}

TuranIdentityReport verify_turan_identity(std::uint64_t n, std::uint64_t p,
                                          std::uint64_t enumeration_cap) {
  require_positive(n, p, "verify_turan_identity");
  if (n < p) {
    throw std::invalid_argument("verify_turan_identity: identity holds for n >= p, got n = " +
                                std::to_string(n) + ", p = " + std::to_string(p));
  }
  TuranIdentityReport rep{n,
                          p,
                          interval_count_sum(n, p),
                          interval_count_closed(n, p),
                          std::nullopt,
                          turan_edges_formula(n + 1, p + 1),
                          turan_edges_construction(n + 1, p + 1),
                          false};
  if (n <= enumeration_cap) rep.sr_enumerated = count_interval_bruteforce(n, p);
  const Count& ref = rep.sr_sum;
  rep.pass = rep.sr_closed == ref && rep.t_formula == ref && rep.t_construction == ref &&
             (!rep.sr_enumerated || *rep.sr_enumerated == ref);
  return rep;
}

std::string TuranIdentityReport::str() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " Sr[sum]=" << sr_sum << " Sr[closed]=" << sr_closed
     << " Sr[enum]=" << (sr_enumerated ? sr_enumerated->str() : std::string("skipped"))
     << " T[formula]=" << t_formula << " T[graph]=" << t_construction
     << (pass ? " pass" : " FAIL");
  return os.str();
}

}  // namespace schreier
