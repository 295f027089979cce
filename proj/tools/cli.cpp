#include "cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "schreier/bfile.hpp"
#include "schreier/counting.hpp"
#include "schreier/enumeration.hpp"
#include "schreier/errors.hpp"
#include "schreier/turan.hpp"
#include "schreier/verify.hpp"

namespace schreier::cli {

namespace {

struct CountArgs {
  std::uint64_t p = 1, q = 1, n = 1;
  std::string method = "recurrence";
};

struct SequenceArgs {
  std::uint64_t p = 1, q = 1, max = 1;
  std::string format = "csv";
  std::uint64_t offset = 1;
  bool include_zero = false;
};

struct TuranArgs {
  std::uint64_t n = 1, parts = 1;
  std::string method = "formula";
};

struct IntervalArgs {
  std::uint64_t n = 1, p = 1;
  std::string method = "closed";
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> pmax, qmax, nmax;
  std::uint64_t enum_cap = 200;
  bool corrupt_base = false;
  bool serial = false;
};

int do_count(const CountArgs& a, std::ostream& out) {
  const Ratio r(a.p, a.q);
  if (a.method == "oracle") {
    out << count_spq_bruteforce(a.n, r) << '\n';
  } else if (a.method == "direct") {
    out << count_spq_direct(a.n, r) << '\n';
  } else {
    out << count_spq_recurrence(a.n, r) << '\n';
  }
  return kOk;
}

int do_sequence(const SequenceArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint64_t first = a.include_zero ? 0 : a.offset;
  if (first > a.max) {
    err << "sequence: offset " << first << " is beyond --max " << a.max << '\n';
    return kUsage;
  }
  const auto seq = sequence_spq(a.max, Ratio(a.p, a.q));
  if (a.format == "bfile") {
    BFile::from_sequence(seq, first).write(out);
  } else {
    out << to_csv(seq, first) << '\n';
  }
  return kOk;
}

int do_enumerate(std::uint64_t p, std::uint64_t q, std::uint64_t n, std::ostream& out) {
  for (const auto& f : enumerate_spq(n, Ratio(p, q)).members) out << f.str() << '\n';
  return kOk;
}

int do_turan(const TuranArgs& a, std::ostream& out) {
  out << (a.method == "graph" ? turan_edges_construction(a.n, a.parts)
                              : turan_edges_formula(a.n, a.parts))
      << '\n';
  return kOk;
}

int do_interval(const IntervalArgs& a, std::ostream& out) {
  if (a.method == "sum") {
    out << interval_count_sum(a.n, a.p) << '\n';
  } else if (a.method == "enum") {
    out << count_interval_bruteforce(a.n, a.p) << '\n';
  } else {
    out << interval_count_closed(a.n, a.p) << '\n';
  }
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Execution exec = a.serial ? Execution::serial : Execution::parallel;
  std::vector<VerifyReport> reports;
  const bool all = a.suite == "all";

  if (all || a.suite == "recurrence") {
    RecurrenceGrid g;
    g.p_max = a.pmax.value_or(g.p_max);
    g.q_max = a.qmax.value_or(g.q_max);
    g.n_max = a.nmax.value_or(g.n_max);
    // Off by one at n = 1: exercises failure reporting end to end.
    const BaseCaseFn corrupted = [](std::uint64_t n, const Ratio& r) {
      Count c = count_spq_direct(n, r);
      return n == 1 ? c + Count(1) : c;
    };
    reports.push_back(verify_recurrence(g, exec, a.corrupt_base ? &corrupted : nullptr));
    if (!a.corrupt_base) reports.push_back(verify_direct(g, exec));
  }
  if (all || a.suite == "bijections") {
    BijectionGrid g;
    g.p_max = a.pmax.value_or(g.p_max);
    g.q_max = a.qmax.value_or(g.q_max);
    g.n_max = a.nmax.value_or(g.n_max);
    reports.push_back(verify_phi_G(g, exec));
    reports.push_back(verify_phi_A(g, exec));
  }
  if (all || a.suite == "turan-identity") {
    TuranGrid g;
    g.p_max = a.pmax.value_or(g.p_max);
    g.n_max = a.nmax.value_or(g.n_max);
    g.enumeration_cap = a.enum_cap;
    reports.push_back(verify_turan_identity_grid(g, exec));
  }
  if (all || a.suite == "scale-invariance") {
    ScaleGrid g;
    g.p_max = a.pmax.value_or(g.p_max);
    g.q_max = a.qmax.value_or(g.q_max);
    g.n_max = a.nmax.value_or(g.n_max);
    reports.push_back(verify_scale_invariance(g, exec));
  }

  bool ok = true;
  for (const auto& r : reports) {
    out << r.summary() << '\n';
    ok = ok && r.pass();
  }
  out << (ok ? "overall: PASS" : "overall: FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

template <class Fn>
std::pair<std::int64_t, Count> timed(const Fn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Count value = fn();
  const auto t1 = std::chrono::steady_clock::now();
  return {std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(), std::move(value)};
}

int do_bench(std::uint64_t p, std::uint64_t q, std::uint64_t max, std::ostream& out) {
  const Ratio r(p, q);
  out << "# n\tmethod\tns\tdigest\n";
  for (std::uint64_t n = 1; n <= max; ++n) {
    auto row = [&](const char* method, const std::pair<std::int64_t, Count>& t) {
      out << n << '\t' << method << '\t' << t.first << '\t' << digest(t.second) << '\n';
    };
    if (n <= kOracleMaxN) row("oracle", timed([&] { return count_spq_bruteforce(n, r); }));
    row("recurrence", timed([&] { return count_spq_recurrence(n, r); }));
    row("direct", timed([&] { return count_spq_direct(n, r); }));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Schreier sets: counts, listings, Turán cross-checks", "schreier"};
  app.require_subcommand(1);
  const auto methods = [](std::initializer_list<std::string> m) { return CLI::IsMember(m); };

  CountArgs count;
  auto* c = app.add_subcommand("count", "Print |S^{p/q}_n|");
  c->add_option("--p", count.p)->required()->check(CLI::PositiveNumber);
  c->add_option("--q", count.q)->required()->check(CLI::PositiveNumber);
  c->add_option("--n", count.n)->required()->check(CLI::PositiveNumber);
  c->add_option("--method", count.method)->check(methods({"oracle", "recurrence", "direct"}));

  SequenceArgs seq;
  auto* s = app.add_subcommand("sequence", "Print |S^{p/q}_n| for n up to --max");
  s->add_option("--p", seq.p)->required()->check(CLI::PositiveNumber);
  s->add_option("--q", seq.q)->required()->check(CLI::PositiveNumber);
  s->add_option("--max", seq.max)->required()->check(CLI::PositiveNumber);
  s->add_option("--format", seq.format)->check(methods({"csv", "bfile"}));
  s->add_option("--offset", seq.offset, "First index emitted (default 1)");
  s->add_flag("--include-zero", seq.include_zero, "Also emit the n = 0 term");

  std::uint64_t ep = 1, eq = 1, en = 1;
  auto* e = app.add_subcommand("enumerate", "List the members of S^{p/q}_n");
  e->add_option("--p", ep)->required()->check(CLI::PositiveNumber);
  e->add_option("--q", eq)->required()->check(CLI::PositiveNumber);
  e->add_option("--n", en)->required()->check(CLI::PositiveNumber);

  TuranArgs turan;
  auto* t = app.add_subcommand("turan", "Print the edge count of T(n, parts)");
  t->add_option("--n", turan.n)->required()->check(CLI::PositiveNumber);
  t->add_option("--parts", turan.parts)->required()->check(CLI::PositiveNumber);
  t->add_option("--method", turan.method)->check(methods({"formula", "graph"}));

  IntervalArgs interval;
  auto* ic = app.add_subcommand("interval-count", "Print Sr(n, p)");
  ic->add_option("--n", interval.n)->required()->check(CLI::PositiveNumber);
  ic->add_option("--p", interval.p)->required()->check(CLI::PositiveNumber);
  ic->add_option("--method", interval.method)->check(methods({"sum", "closed", "enum"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a property grid");
  v->add_option("--suite", verify.suite)
      ->check(methods({"recurrence", "bijections", "turan-identity", "scale-invariance", "all"}));
  v->add_option("--pmax", verify.pmax)->check(CLI::PositiveNumber);
  v->add_option("--qmax", verify.qmax)->check(CLI::PositiveNumber);
  v->add_option("--nmax", verify.nmax)->check(CLI::PositiveNumber);
  v->add_option("--enum-cap", verify.enum_cap, "Largest n enumerated in turan-identity");
  v->add_flag("--corrupt-base", verify.corrupt_base, "Inject a wrong base value (self-test)");
  v->add_flag("--serial", verify.serial, "Evaluate cases on one thread");

  std::uint64_t bp = 1, bq = 1, bmax = 1;
  auto* b = app.add_subcommand("bench", "Time oracle, recurrence and direct counts");
  b->add_option("--p", bp)->required()->check(CLI::PositiveNumber);
  b->add_option("--q", bq)->required()->check(CLI::PositiveNumber);
  b->add_option("--max", bmax)->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"schreier"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (c->parsed()) return do_count(count, out);
    if (s->parsed()) return do_sequence(seq, out, err);
    if (e->parsed()) return do_enumerate(ep, eq, en, out);
    if (t->parsed()) return do_turan(turan, out);
    if (ic->parsed()) return do_interval(interval, out);
    if (v->parsed()) return do_verify(verify, out);
    if (b->parsed()) return do_bench(bp, bq, bmax, out);
  } catch (const OracleGuardError& ex) {
    err << "error: " << ex.what() << '\n';
    return kGuard;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace schreier::cli
