#include <doctest.h>

#include "schreier/errors.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

TEST_CASE("suites pass on small grids and count their cases") {
  const auto rec = verify_recurrence({3, 3, 12});
  CHECK(rec.pass());
  CHECK(rec.cases == 3 * 3 * 12);
  CHECK_FALSE(rec.first_counterexample);

  CHECK(verify_direct({4, 4, 60}).pass());

  const auto phiA = verify_phi_A({2, 2, 9});
  CHECK(phiA.pass());
  // n runs from p+q to 9: 8 + 7 + 7 + 6 cells
  CHECK(phiA.cases == 28);

  CHECK(verify_phi_G({2, 2, 9}).pass());
  CHECK(verify_scale_invariance({2, 2, 60, {2, 7}}).pass());
  CHECK(verify_turan_identity_grid({5, 40, 20}).pass());
  CHECK(verify_interval_counts({5, 40}).pass());
  CHECK(verify_turan_edges({6, 50}).pass());
}

TEST_CASE("serial and parallel runs produce identical reports") {
  CHECK(verify_recurrence({3, 3, 14}, Execution::serial) ==
        verify_recurrence({3, 3, 14}, Execution::parallel));
  CHECK(verify_phi_G({2, 3, 10}, Execution::serial) ==
        verify_phi_G({2, 3, 10}, Execution::parallel));
  CHECK(verify_turan_identity_grid({4, 30, 30}, Execution::serial) ==
        verify_turan_identity_grid({4, 30, 30}, Execution::parallel));
}

TEST_CASE("fault injection is caught with a counterexample") {
  const BaseCaseFn corrupted = [](std::uint64_t n, const Ratio& r) {
    return count_spq_direct(n, r) + Count(n == 1 ? 1 : 0);
  };
  const auto serial = verify_recurrence({2, 2, 10}, Execution::serial, &corrupted);
  const auto parallel = verify_recurrence({2, 2, 10}, Execution::parallel, &corrupted);
  CHECK_FALSE(serial.pass());
  CHECK(serial == parallel);
  REQUIRE(serial.first_counterexample);
  CHECK(*serial.first_counterexample == "p/q=1/1 n=1: recurrence 2 != oracle 1");
  CHECK(serial.summary().find("FAIL") != std::string::npos);
}

TEST_CASE("oracle-backed suites respect the guard") {
  CHECK_THROWS_AS(verify_recurrence({1, 1, 31}), OracleGuardError);
  CHECK_THROWS_AS(verify_phi_G({1, 1, 40}), OracleGuardError);
  CHECK_THROWS_AS(verify_phi_A({1, 1, 40}), OracleGuardError);
  CHECK_NOTHROW(verify_direct({1, 1, 400}));
}
