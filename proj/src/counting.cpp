#include "schreier/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schreier {

using Integer = Count::Integer;

Count binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  Integer c = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    c *= n - kk + i;
    c /= i;  // exact: c is C(n-kk+i, i) after this step
  }
  return Count(std::move(c));
}

BinomialPrefixTable::BinomialPrefixTable(std::uint64_t max_row) : max_row_(max_row) {
  rows_.resize(max_row + 1);
  rows_[0] = {Integer(1)};
  for (std::uint64_t row = 1; row <= max_row; ++row) {
    const auto& prev = rows_[row - 1];
    auto& cur = rows_[row];
    cur.resize(row + 1);
    // P(row, k) = P(row-1, k) + P(row-1, k-1); P(row-1, k) saturates at k = row-1.
    cur[0] = 1;
    for (std::uint64_t k = 1; k <= row; ++k) {
      cur[k] = prev[std::min(k, row - 1)] + prev[k - 1];
    }
  }
}

const Integer& BinomialPrefixTable::prefix(std::uint64_t row, std::uint64_t k) const {
  if (row > max_row_) {
    throw std::out_of_range("BinomialPrefixTable: row " + std::to_string(row) + " > " +
                            std::to_string(max_row_));
  }
  return rows_[row][std::min(k, row)];
}

Count count_spq_direct(std::uint64_t n, const Ratio& r, const BinomialPrefixTable& table) {
  if (n == 0) throw std::invalid_argument("count_spq_direct: n must be >= 1");
  __extension__ typedef unsigned __int128 Wide;
  Integer total = Wide(r.q) * n >= r.p ? 1 : 0;
  for (std::uint64_t m = 1; m < n; ++m) {
    // |F| = j + 2 with q m >= p (j + 2)
    const Wide cap = Wide(r.q) * m / r.p;
    if (cap < 2) continue;
    const std::uint64_t free_slots = n - m - 1;
    const Wide max_free = cap - 2;
    const std::uint64_t k =
        max_free >= free_slots ? free_slots : static_cast<std::uint64_t>(max_free);
    total += table.prefix(free_slots, k);
  }
  return Count(std::move(total));
}

Count count_spq_direct(std::uint64_t n, const Ratio& r) {
  const BinomialPrefixTable table(n >= 2 ? n - 2 : 0);
  return count_spq_direct(n, r, table);
}

CountSequence sequence_spq(std::uint64_t n_max, const Ratio& r, const BaseCaseFn& base) {
  CountSequence seq{r, {}};
  seq.values.reserve(n_max + 1);
  seq.values.emplace_back(0);
  const std::uint64_t depth = r.p + r.q;

  std::vector<Integer> signed_binom(r.q + 1);
  for (std::uint64_t k = 1; k <= r.q; ++k) {
    signed_binom[k] = binomial(r.q, static_cast<std::int64_t>(k)).value();
    if (k % 2 == 0) signed_binom[k] = -signed_binom[k];
  }

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (n < depth) {
      seq.values.push_back(base(n, r));
      continue;
    }
    Integer acc = seq.values[n - depth].value();
    for (std::uint64_t k = 1; k <= r.q; ++k) acc += signed_binom[k] * seq.values[n - k].value();
    if (acc < 0) {
      throw std::logic_error("sequence_spq: negative value at n = " + std::to_string(n) +
                             " for " + r.str());
    }
    seq.values.emplace_back(std::move(acc));
  }
  return seq;
}

CountSequence sequence_spq(std::uint64_t n_max, const Ratio& r) {
  const std::uint64_t depth = r.p + r.q;
  const BinomialPrefixTable table(depth >= 3 ? depth - 3 : 0);
  return sequence_spq(n_max, r, [&table](std::uint64_t n, const Ratio& rr) {
    return count_spq_direct(n, rr, table);
  });
}

Count count_spq_recurrence(std::uint64_t n, const Ratio& r) { return sequence_spq(n, r)[n]; }

}  // namespace schreier
