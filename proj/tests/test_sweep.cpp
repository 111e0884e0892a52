#include <doctest.h>

#include "mtlab/sweep.hpp"

using namespace mtlab;

namespace {

const PropertyRow& row(const SweepReport& r, const std::string& name) {
  for (const auto& p : r.rows)
    if (p.name == name) return p;
  FAIL("no row " << name);
  return r.rows.front();
}

}  // namespace

TEST_CASE("every suite keeps the accounting invariant and finds no failures at small size") {
  for (Suite s : all_suites()) {
    CAPTURE(to_string(s));
    const SweepReport r = run_sweep({s, 3, 11, 3, 1});
    CHECK(r.accounting_holds());
    CHECK(r.failures.empty());
    CHECK(r.items > 0);
    CHECK_FALSE(r.rows.empty());
  }
}

TEST_CASE("vacuous results are kept apart from passes") {
  const SweepReport r = run_sweep({Suite::HM, 2, 0, 0, 1});
  CHECK(r.items == 6);  // 1 + 1 + 4 topologies on 0..2 points
  const PropertyRow& hm = row(r, "hofmann_mislove");
  CHECK(hm.pass == 5);
  CHECK(hm.vacuous == 1);  // the indiscrete 2-point space
  CHECK(hm.fail == 0);
}

TEST_CASE("random corpus members are added above four points") {
  const SweepReport r = run_sweep({Suite::Separation, 6, 5, 10, 1});
  CHECK(r.items == 390 + 10);
  CHECK(r.accounting_holds());
  CHECK(r.failures.empty());
}

TEST_CASE("sweep reports are deterministic and independent of --jobs") {
  const SweepOptions o{Suite::Full, 3, 99, 0, 1};
  const std::string a = report_json(run_sweep(o));
  const std::string b = report_json(run_sweep(o));
  SweepOptions parallel = o;
  parallel.jobs = 3;
  const std::string c = report_json(run_sweep(parallel));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(report_text(run_sweep(o)) == report_text(run_sweep(parallel)));
}

TEST_CASE("stone suite covers every atom count") {
  const SweepReport r = run_sweep({Suite::Stone, 3, 4, 8, 1});
  CHECK(r.items == 8);
  CHECK(row(r, "stone_path").pass == 8);
  CHECK(row(r, "lift_restricts").pass == 8);
}

TEST_CASE("suite names round trip") {
  for (Suite s : all_suites()) CHECK(suite_from_string(to_string(s)) == s);
  CHECK_FALSE(suite_from_string("nope").has_value());
}
