#pragma once

// Exact |S^{p/q}_n| by the linear recurrence
//
//   |S_n| = sum_{k=1}^{q} (-1)^{k+1} C(q,k) |S_{n-k}| + |S_{n-(p+q)}|,  n >= p+q,
//
// and by an independent binomial sum obtained by conditioning on min F = m
// and on the number j of free elements strictly between m and n:
//
//   |S_n| = [q n >= p] + sum_{m=1}^{n-1} sum_{j=0}^{min(n-m-1, floor(qm/p)-2)} C(n-m-1, j).
//
// |S_0| is taken to be 0. Base values 1 <= n < p+q come from the binomial sum.

#include <cstdint>
#include <functional>
#include <vector>

#include "schreier/count.hpp"
#include "schreier/finite_set.hpp"

namespace schreier {

// C(n, k); zero when k < 0 or k > n.
Count binomial(std::uint64_t n, std::int64_t k);

// Partial row sums of Pascal's triangle, sum_{j<=k} C(row, j), for all
// rows up to max_row. Built once with additions only; read-only afterwards.
class BinomialPrefixTable {
 public:
  explicit BinomialPrefixTable(std::uint64_t max_row);

  std::uint64_t max_row() const { return max_row_; }
  // Throws std::out_of_range when row > max_row().
  const Count::Integer& prefix(std::uint64_t row, std::uint64_t k) const;

 private:
  std::uint64_t max_row_;
  std::vector<std::vector<Count::Integer>> rows_;
};

Count count_spq_direct(std::uint64_t n, const Ratio& r);
// Same, reusing a table with max_row() >= n - 2.
Count count_spq_direct(std::uint64_t n, const Ratio& r, const BinomialPrefixTable& table);

struct CountSequence {
  Ratio ratio;
  std::vector<Count> values;  // values[n] for 0 <= n <= n_max

  std::uint64_t n_max() const { return values.size() - 1; }
  const Count& operator[](std::uint64_t n) const { return values.at(n); }
};

// Supplies |S^{p/q}_n| for 1 <= n < p+q.
using BaseCaseFn = std::function<Count(std::uint64_t n, const Ratio& r)>;

// One forward pass of the recurrence. Throws std::logic_error if a step
// would go negative.
CountSequence sequence_spq(std::uint64_t n_max, const Ratio& r);
CountSequence sequence_spq(std::uint64_t n_max, const Ratio& r, const BaseCaseFn& base);

Count count_spq_recurrence(std::uint64_t n, const Ratio& r);

}  // namespace schreier
