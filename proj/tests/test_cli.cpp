#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "schreier/bfile.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schreier::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--p", "1", "--q", "1", "--n", "10", "--method", "recurrence"}).out == "55\n");
  CHECK(run({"count", "--p", "1", "--q", "2", "--n", "4", "--method", "oracle"}).out == "5\n");
  CHECK(run({"count", "--p", "2", "--q", "1", "--n", "1", "--method", "direct"}).out == "0\n");
  CHECK(run({"count", "--p", "1", "--q", "1", "--n", "10"}).out == "55\n");
}

TEST_CASE("count methods agree wherever all are defined") {
  for (const char* p : {"1", "2", "3"}) {
    for (const char* q : {"1", "2", "4"}) {
      for (const char* n : {"1", "5", "13", "20"}) {
        const auto a = run({"count", "--p", p, "--q", q, "--n", n, "--method", "oracle"});
        const auto b = run({"count", "--p", p, "--q", q, "--n", n, "--method", "recurrence"});
        const auto c = run({"count", "--p", p, "--q", q, "--n", n, "--method", "direct"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(b.out == c.out);
      }
    }
  }
}

TEST_CASE("count errors") {
  const auto guard = run({"count", "--p", "1", "--q", "1", "--n", "31", "--method", "oracle"});
  CHECK(guard.code == schreier::cli::kGuard);
  CHECK(guard.err.find("too large for oracle") != std::string::npos);
  CHECK(run({"count", "--p", "1", "--q", "1", "--n", "200", "--method", "recurrence"}).code == 0);
  CHECK(run({"count", "--p", "1", "--q", "1"}).code == schreier::cli::kUsage);
  CHECK(run({"count", "--p", "0", "--q", "1", "--n", "3"}).code == schreier::cli::kUsage);
  CHECK(run({"count", "--p", "1", "--q", "1", "--n", "3", "--method", "magic"}).code ==
        schreier::cli::kUsage);
  CHECK(run({"bogus"}).code == schreier::cli::kUsage);
  CHECK(run({}).code == schreier::cli::kUsage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("interval-count") != std::string::npos);
}

TEST_CASE("sequence") {
  CHECK(run({"sequence", "--p", "1", "--q", "1", "--max", "6", "--format", "csv"}).out ==
        "1,1,2,3,5,8\n");
  CHECK(run({"sequence", "--p", "1", "--q", "2", "--max", "5", "--format", "bfile"}).out ==
        "1 1\n2 2\n3 3\n4 5\n5 9\n");
  CHECK(run({"sequence", "--p", "1", "--q", "1", "--max", "1", "--format", "csv"}).out == "1\n");
  CHECK(run({"sequence", "--p", "1", "--q", "1", "--max", "3", "--include-zero"}).out ==
        "0,1,1,2\n");
  CHECK(run({"sequence", "--p", "1", "--q", "1", "--max", "5", "--offset", "3", "--format",
             "bfile"}).out == "3 2\n4 3\n5 5\n");
  CHECK(run({"sequence", "--p", "1", "--q", "1", "--max", "5", "--offset", "9"}).code ==
        schreier::cli::kUsage);
}

TEST_CASE("sequence b-file output round-trips") {
  const auto r = run({"sequence", "--p", "3", "--q", "2", "--max", "500", "--format", "bfile"});
  REQUIRE(r.code == 0);
  const auto parsed = schreier::BFile::parse(r.out);
  const auto seq = schreier::sequence_spq(500, schreier::Ratio(3, 2));
  REQUIRE(parsed.lines.size() == 500);
  for (const auto& line : parsed.lines) CHECK(line.value == seq[line.index]);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--p", "1", "--q", "1", "--n", "3"}).out == "{3}\n{2,3}\n");
  CHECK(run({"enumerate", "--p", "1", "--q", "1", "--n", "1"}).out == "{1}\n");
  const auto empty = run({"enumerate", "--p", "3", "--q", "1", "--n", "2"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run({"enumerate", "--p", "1", "--q", "1", "--n", "40"}).code == schreier::cli::kGuard);
}

TEST_CASE("turan and interval-count") {
  CHECK(run({"turan", "--n", "5", "--parts", "2", "--method", "formula"}).out == "6\n");
  CHECK(run({"turan", "--n", "7", "--parts", "3", "--method", "graph"}).out == "16\n");
  CHECK(run({"turan", "--n", "3", "--parts", "1"}).out == "0\n");
  CHECK(run({"turan", "--n", "3"}).code == schreier::cli::kUsage);

  CHECK(run({"interval-count", "--n", "3", "--p", "2", "--method", "closed"}).out == "5\n");
  CHECK(run({"interval-count", "--n", "1", "--p", "9", "--method", "sum"}).out == "1\n");
  CHECK(run({"interval-count", "--n", "3", "--p", "5", "--method", "enum"}).out == "6\n");
}

TEST_CASE("verify") {
  const auto rec = run({"verify", "--suite", "recurrence", "--pmax", "4", "--qmax", "4", "--nmax", "20"});
  CHECK(rec.code == 0);
  CHECK(rec.out.find("overall: PASS") != std::string::npos);

  const auto tur = run({"verify", "--suite", "turan-identity", "--pmax", "10", "--nmax", "100"});
  CHECK(tur.code == 0);
  CHECK(tur.out.find("955 cases, 0 failures") != std::string::npos);

  const auto bad = run({"verify", "--suite", "recurrence", "--corrupt-base"});
  CHECK(bad.code == schreier::cli::kVerifyFailed);
  CHECK(bad.out.find("first counterexample: p/q=1/1 n=1") != std::string::npos);

  CHECK(run({"verify", "--suite", "bijections", "--nmax", "12"}).code == 0);
  CHECK(run({"verify", "--suite", "scale-invariance", "--nmax", "80"}).code == 0);
  CHECK(run({"verify", "--suite", "recurrence", "--nmax", "31"}).code == schreier::cli::kGuard);
  CHECK(run({"verify", "--suite", "nope"}).code == schreier::cli::kUsage);
  CHECK(run({"verify", "--serial"}).out == run({"verify"}).out);
}

TEST_CASE("bench") {
  const auto one = run({"bench", "--p", "1", "--q", "1", "--max", "1"});
  CHECK(one.code == 0);
  const auto rows = split_lines(one.out);
  REQUIRE(rows.size() == 4);  // header + one row per method
  CHECK(rows[0].front() == '#');

  const auto r = run({"bench", "--p", "1", "--q", "2", "--max", "10"});
  std::map<std::string, std::set<std::string>> digests;
  for (const auto& line : split_lines(r.out)) {
    if (line.front() == '#') continue;
    std::istringstream is(line);
    std::string n, method, ns, digest;
    is >> n >> method >> ns >> digest;
    CHECK(std::stoll(ns) >= 0);
    digests[n].insert(digest);
  }
  CHECK(digests.size() == 10);
  for (const auto& [n, d] : digests) CHECK_MESSAGE(d.size() == 1, "n=" << n);
}
