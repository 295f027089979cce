#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "schreier/finite_set.hpp"

using namespace schreier;

TEST_CASE("FiniteSet validates and normalizes") {
  const FiniteSet f{3, 1, 2};
  CHECK(f.min() == 1);
  CHECK(f.max() == 3);
  CHECK(f.size() == 3);
  CHECK(f.str() == "{1,2,3}");
  CHECK(f.contains(2));
  CHECK_FALSE(f.contains(4));

  CHECK_THROWS_AS(FiniteSet(std::vector<Element>{}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSet({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSet({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSet::interval(3, 2), std::invalid_argument);
  CHECK(FiniteSet::interval(2, 4) == FiniteSet{2, 3, 4});
}

TEST_CASE("Ratio rejects zero parts and is not reduced") {
  CHECK_THROWS_AS(Ratio(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Ratio(1, 0), std::invalid_argument);
  const Ratio r(2, 4);
  CHECK(r.p == 2);
  CHECK(r.q == 4);
  CHECK(r.scaled(3) == Ratio(6, 12));
  CHECK(r.str() == "2/4");
}

TEST_CASE("is_generalized_schreier") {
  CHECK(is_generalized_schreier({2, 3}, Ratio(1, 1)));
  CHECK_FALSE(is_generalized_schreier({1, 2, 3}, Ratio(1, 1)));
  CHECK(is_generalized_schreier({1, 2}, Ratio(1, 2)));
}

TEST_CASE("is_in_spq_family") {
  CHECK(is_in_spq_family({2, 3}, Ratio(1, 1), 3));
  CHECK_FALSE(is_in_spq_family({2, 3}, Ratio(1, 1), 4));
  CHECK(is_in_spq_family({2, 3, 4}, Ratio(1, 2), 4));
}

TEST_CASE("is_interval") {
  CHECK(is_interval({3}));
  CHECK(is_interval({2, 3, 4}));
  CHECK_FALSE(is_interval({1, 3}));
}

TEST_CASE("predicates on random sets") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<std::uint64_t> param(1, 7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = oracle::random_set(rng, 16);
    const FiniteSet f(raw);
    const Ratio r(param(rng), param(rng));

    const bool expected = r.q * raw.front() >= r.p * raw.size();
    CHECK(is_generalized_schreier(f, r) == expected);
    for (std::uint64_t k : {2, 3, 5, 11}) {
      CHECK(is_generalized_schreier(f, r.scaled(k)) == expected);
    }
    CHECK(is_in_spq_family(f, r, f.max()) == expected);
    CHECK_FALSE(is_in_spq_family(f, r, f.max() + 1));

    bool consecutive = true;
    for (std::size_t i = 1; i < raw.size(); ++i) consecutive &= raw[i] == raw[i - 1] + 1;
    CHECK(is_interval(f) == consecutive);
  }
}

TEST_CASE("predicate arithmetic does not overflow") {
  const Element big = std::uint64_t{1} << 62;
  CHECK(is_generalized_schreier({big, big + 1}, Ratio(big, 4)));
  CHECK_FALSE(is_generalized_schreier({big, big + 1}, Ratio(big, 1)));
}
