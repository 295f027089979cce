#include "schreier/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "schreier/bijections.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/errors.hpp"
#include "schreier/turan.hpp"

namespace schreier {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string label(const Ratio& r, std::uint64_t n) {
  return "p/q=" + r.str() + " n=" + std::to_string(n);
}

template <class Case, class Eval>
VerifyReport run_cases(std::string suite, std::string grid, const std::vector<Case>& cases,
                       const Eval& eval, Execution exec) {
  std::vector<Outcome> results(cases.size());
  auto guarded = [&](std::size_t i) {
    try {
      results[i] = eval(cases[i]);
    } catch (const std::exception& e) {
      results[i] = fail(std::string("exception: ") + e.what());
    }
  };
  const auto count = static_cast<std::int64_t>(cases.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) guarded(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) guarded(static_cast<std::size_t>(i));
  }

  VerifyReport rep{std::move(suite), std::move(grid), cases.size(), 0, std::nullopt};
  for (const auto& r : results) {
    if (r.pass) continue;
    ++rep.failures;
    if (!rep.first_counterexample) rep.first_counterexample = r.detail;
  }
  return rep;
}

void require_oracle_bound(std::uint64_t n_max) {
  if (n_max > kOracleMaxN) {
    throw OracleGuardError("instance too large for oracle: n_max = " + std::to_string(n_max) +
                           " exceeds " + std::to_string(kOracleMaxN));
  }
}

std::vector<Ratio> ratios(std::uint64_t p_max, std::uint64_t q_max) {
  std::vector<Ratio> out;
  for (std::uint64_t p = 1; p <= p_max; ++p) {
    for (std::uint64_t q = 1; q <= q_max; ++q) out.emplace_back(p, q);
  }
  return out;
}

struct PointCase {
  std::size_t ratio_index;
  Ratio ratio;
  std::uint64_t n;
};

std::vector<PointCase> point_cases(const std::vector<Ratio>& rs, std::uint64_t n_min,
                                   std::uint64_t n_max, bool from_depth) {
  std::vector<PointCase> out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::uint64_t lo = from_depth ? std::max(n_min, rs[i].p + rs[i].q) : n_min;
    for (std::uint64_t n = lo; n <= n_max; ++n) out.push_back({i, rs[i], n});
  }
  return out;
}

std::string grid_pq(std::uint64_t p_max, std::uint64_t q_max, const std::string& n_range) {
  return "1<=p<=" + std::to_string(p_max) + " 1<=q<=" + std::to_string(q_max) + " " + n_range;
}

std::vector<CountSequence> sequences(const std::vector<Ratio>& rs, std::uint64_t n_max,
                                     const BaseCaseFn* base) {
  std::vector<CountSequence> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(base ? sequence_spq(n_max, r, *base) : sequence_spq(n_max, r));
  return out;
}

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "suite " << suite << " [" << grid << "]: " << cases << " cases, " << failures
     << " failures: " << (pass() ? "PASS" : "FAIL");
  if (first_counterexample) os << "\n  first counterexample: " << *first_counterexample;
  return os.str();
}

VerifyReport verify_recurrence(const RecurrenceGrid& grid, Execution exec, const BaseCaseFn* base) {
  require_oracle_bound(grid.n_max);
  const auto rs = ratios(grid.p_max, grid.q_max);
  const auto seqs = sequences(rs, grid.n_max, base);
  const auto cases = point_cases(rs, 1, grid.n_max, false);
  return run_cases(
      "recurrence", grid_pq(grid.p_max, grid.q_max, "1<=n<=" + std::to_string(grid.n_max)), cases,
      [&](const PointCase& c) {
        const Count& fast = seqs[c.ratio_index][c.n];
        const Count oracle = count_spq_bruteforce_serial(c.n, c.ratio);
        if (fast == oracle) return Outcome{};
        return fail(label(c.ratio, c.n) + ": recurrence " + fast.str() + " != oracle " +
                    oracle.str());
      },
      exec);
}

VerifyReport verify_direct(const RecurrenceGrid& grid, Execution exec) {
  const auto rs = ratios(grid.p_max, grid.q_max);
  const auto seqs = sequences(rs, grid.n_max, nullptr);
  const BinomialPrefixTable table(grid.n_max >= 2 ? grid.n_max - 2 : 0);
  const auto cases = point_cases(rs, 1, grid.n_max, false);
  return run_cases(
      "direct", grid_pq(grid.p_max, grid.q_max, "1<=n<=" + std::to_string(grid.n_max)), cases,
      [&](const PointCase& c) {
        const Count& fast = seqs[c.ratio_index][c.n];
        const Count direct = count_spq_direct(c.n, c.ratio, table);
        if (fast == direct) return Outcome{};
        return fail(label(c.ratio, c.n) + ": recurrence " + fast.str() + " != direct " +
                    direct.str());
      },
      exec);
}

VerifyReport verify_phi_G(const BijectionGrid& grid, Execution exec) {
  require_oracle_bound(grid.n_max);
  std::vector<GapSet> cases;
  for (const auto& r : ratios(grid.p_max, grid.q_max)) {
    for (std::uint64_t n = r.p + r.q; n <= grid.n_max; ++n) {
      auto gs = all_gap_sets(n, r);
      cases.insert(cases.end(), gs.begin(), gs.end());
    }
  }
  return run_cases(
      "phi_G", grid_pq(grid.p_max, grid.q_max, "p+q<=n<=" + std::to_string(grid.n_max)), cases,
      [](const GapSet& g) {
        const auto check = check_phi_G_bijection(g);
        if (check.bijective) return Outcome{};
        return fail(label(g.ratio(), g.n()) + " G=" + g.str() + ": " + check.detail);
      },
      exec);
}

VerifyReport verify_phi_A(const BijectionGrid& grid, Execution exec) {
  require_oracle_bound(grid.n_max);
  const auto rs = ratios(grid.p_max, grid.q_max);
  const auto cases = point_cases(rs, 1, grid.n_max, true);
  return run_cases(
      "phi_A", grid_pq(grid.p_max, grid.q_max, "p+q<=n<=" + std::to_string(grid.n_max)), cases,
      [](const PointCase& c) {
        const Ratio& r = c.ratio;
        const auto check = check_phi_A_bijection(c.n, r);
        if (!check.bijective) return fail(label(r, c.n) + ": " + check.detail);

        const auto ie = inclusion_exclusion_decomposition(c.n, r);
        const Count oracle = count_spq_bruteforce_serial(c.n, r);
        if (ie.assembled != oracle) {
          return fail(label(r, c.n) + ": inclusion-exclusion " + ie.assembled.str() +
                      " != oracle " + oracle.str());
        }
        const auto seq = sequence_spq(c.n, r);
        if (ie.a_count != seq[c.n - (r.p + r.q)]) {
          return fail(label(r, c.n) + ": |A| = " + ie.a_count.str() + " != |S_{n-(p+q)}|");
        }
        for (std::uint64_t i = 1; i <= r.q; ++i) {
          const Count expected = binomial(r.q, static_cast<std::int64_t>(i)) * seq[c.n - i];
          if (ie.layer_sums[i - 1] != expected) {
            return fail(label(r, c.n) + ": layer " + std::to_string(i) + " sum " +
                        ie.layer_sums[i - 1].str() + " != C(q,i)|S_{n-i}| = " + expected.str());
          }
        }
        return Outcome{};
      },
      exec);
}

VerifyReport verify_scale_invariance(const ScaleGrid& grid, Execution exec) {
  struct ScaleCase {
    Ratio ratio;
    std::uint64_t factor;
  };
  std::vector<ScaleCase> cases;
  for (const auto& r : ratios(grid.p_max, grid.q_max)) {
    for (std::uint64_t k : grid.factors) cases.push_back({r, k});
  }
  std::ostringstream g;
  g << grid_pq(grid.p_max, grid.q_max, "1<=n<=" + std::to_string(grid.n_max)) << " k in {";
  for (std::size_t i = 0; i < grid.factors.size(); ++i) g << (i ? "," : "") << grid.factors[i];
  g << '}';
  return run_cases(
      "scale-invariance", g.str(), cases,
      [&grid](const ScaleCase& c) {
        const Ratio scaled = c.ratio.scaled(c.factor);
        const auto a = sequence_spq(grid.n_max, c.ratio);
        const auto b = sequence_spq(grid.n_max, scaled);
        for (std::uint64_t n = 0; n <= grid.n_max; ++n) {
          if (a[n] != b[n]) {
            return fail(label(c.ratio, n) + " vs " + scaled.str() + ": " + a[n].str() +
                        " != " + b[n].str());
          }
        }
        return Outcome{};
      },
      exec);
}

namespace {

struct NpCase {
  std::uint64_t n;
  std::uint64_t p;
};

std::string np_label(const NpCase& c) {
  return "n=" + std::to_string(c.n) + " p=" + std::to_string(c.p);
}

}  // namespace

VerifyReport verify_turan_identity_grid(const TuranGrid& grid, Execution exec) {
  std::vector<NpCase> cases;
  for (std::uint64_t p = 1; p <= grid.p_max; ++p) {
    for (std::uint64_t n = p; n <= grid.n_max; ++n) cases.push_back({n, p});
  }
  return run_cases(
      "turan-identity",
      "1<=p<=" + std::to_string(grid.p_max) + " p<=n<=" + std::to_string(grid.n_max) +
          " enumeration n<=" + std::to_string(grid.enumeration_cap),
      cases,
      [&grid](const NpCase& c) {
        const auto rep = verify_turan_identity(c.n, c.p, grid.enumeration_cap);
        return rep.pass ? Outcome{} : fail(rep.str());
      },
      exec);
}

VerifyReport verify_interval_counts(const IntervalGrid& grid, Execution exec) {
  std::vector<NpCase> cases;
  for (std::uint64_t p = 1; p <= grid.p_max; ++p) {
    for (std::uint64_t n = 1; n <= grid.n_max; ++n) cases.push_back({n, p});
  }
  return run_cases(
      "interval-counts",
      "1<=p<=" + std::to_string(grid.p_max) + " 1<=n<=" + std::to_string(grid.n_max), cases,
      [](const NpCase& c) {
        const Count sum = interval_count_sum(c.n, c.p);
        const Count closed = interval_count_closed(c.n, c.p);
        const Count enumerated = count_interval_bruteforce(c.n, c.p);
        if (sum == closed && sum == enumerated) return Outcome{};
        return fail(np_label(c) + ": sum " + sum.str() + " closed " + closed.str() + " enum " +
                    enumerated.str());
      },
      exec);
}

VerifyReport verify_turan_edges(const TuranEdgeGrid& grid, Execution exec) {
  std::vector<NpCase> cases;
  for (std::uint64_t p = 1; p <= grid.p_max; ++p) {
    for (std::uint64_t n = p; n <= grid.n_max; ++n) cases.push_back({n, p});
  }
  return run_cases(
      "turan-edges",
      "1<=p<=" + std::to_string(grid.p_max) + " p<=n<=" + std::to_string(grid.n_max), cases,
      [](const NpCase& c) {
        const Count formula = turan_edges_formula(c.n, c.p);
        const Count built = turan_edges_construction(c.n, c.p);
        if (formula == built) return Outcome{};
        return fail(np_label(c) + ": formula " + formula.str() + " != construction " + built.str());
      },
      exec);
}

}  // namespace schreier
