#pragma once

// Test-only oracles. Deliberately written without the library: plain
// recursion and loops over std::vector, so they share no code path with the
// implementation under test.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Set = std::vector<std::uint64_t>;

// All subsets of {1..n} with maximum n and q*min >= p*|F|, in the order the
// recursion produces them.
inline std::vector<Set> spq_members(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  std::vector<Set> out;
  Set cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t next) {
    if (next == n) {
      Set f = cur;
      f.push_back(n);
      if (q * f.front() >= p * f.size()) out.push_back(f);
      return;
    }
    rec(next + 1);
    cur.push_back(next);
    rec(next + 1);
    cur.pop_back();
  };
  rec(1);
  return out;
}

inline std::uint64_t spq_count(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  return n == 0 ? 0 : spq_members(n, p, q).size();
}

inline std::uint64_t interval_count(std::uint64_t n, std::uint64_t p) {
  std::uint64_t c = 0;
  for (std::uint64_t len = 1; len <= n; ++len) {
    for (std::uint64_t lo = 1; lo + len - 1 <= n; ++lo) c += p * lo >= len;
  }
  return c;
}

// Round-robin part assignment (vertex v in part v mod p) and an explicit
// loop over vertex pairs.
inline std::uint64_t turan_edges_by_pairs(std::uint64_t n, std::uint64_t p) {
  std::uint64_t e = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) e += (u % p) != (v % p);
  }
  return e;
}

inline std::uint64_t fibonacci(std::uint64_t n) {
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Random nonempty subset of {1..limit}.
inline Set random_set(std::mt19937_64& rng, std::uint64_t limit) {
  Set s;
  std::bernoulli_distribution coin(0.4);
  for (std::uint64_t i = 1; i <= limit; ++i) {
    if (coin(rng)) s.push_back(i);
  }
  if (s.empty()) s.push_back(std::uniform_int_distribution<std::uint64_t>(1, limit)(rng));
  return s;
}

}  // namespace oracle
