#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mtlab/cli.hpp"
#include "mtlab/document.hpp"
#include "mtlab/sweep.hpp"

using namespace mtlab;
namespace fs = std::filesystem;

namespace {

int failed = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << "criterion " << (n < 10 ? " " : "") << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failed;
}

const PropertyRow* find_row(const SweepReport& r, const std::string& name) {
  for (const auto& p : r.rows)
    if (p.name == name) return &p;
  return nullptr;
}

std::string summary(const SweepReport& r) {
  std::size_t pass = 0, vac = 0;
  for (const auto& p : r.rows) pass += p.pass, vac += p.vacuous;
  std::ostringstream s;
  s << r.items << " items, " << r.rows.size() << " properties, " << pass << " pass, " << vac << " vacuous, "
    << r.failure_count() << " fail";
  if (!r.failures.empty()) s << "; first: " << r.failures.front().property << " on " << r.failures.front().item_name;
  return s.str();
}

bool clean(const SweepReport& r) { return r.accounting_holds() && r.failures.empty() && r.failure_count() == 0; }

std::size_t count_sober_upto4() {
  std::size_t n = 0;
  for (std::size_t k = 0; k <= 4; ++k)
    for (const FiniteSpace& x : all_topologies(k))
      if (space_predicate(x, SpacePredicate::Sober).holds) ++n;
  return n;
}

/// Exhaustive corpus plus a random tail, both clean.
void suite_criterion(int n, Suite s, const std::string& what) {
  const SweepReport exhaustive = run_sweep({s, 4, 2024, 0, 1});
  const SweepReport tail = run_sweep({s, 6, 2024, 25, 1});
  report(n, clean(exhaustive) && clean(tail), what, summary(exhaustive) + "; random tail " + summary(tail));
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = command_dispatch(args, o, e);
  if (out) *out = o.str();
  return code;
}

std::string fx(const std::string& name) { return std::string(MTLAB_FIXTURE_DIR) + "/" + name; }

}  // namespace

int main() {
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepReport r = run_sweep({Suite::HM, 4, 1, 0, 1});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const PropertyRow* hm = find_row(r, "hofmann_mislove");
    const std::size_t four = all_topologies(4).size();
    const bool ok = clean(r) && hm && hm->fail == 0 && four == 355 && count_topologies_bruteforce(4) == 355 &&
                    r.items == 1 + 1 + 4 + 29 + 355 && secs < 60.0;
    std::ostringstream d;
    d << four << " topologies on 4 points, " << r.items << " in corpus, " << (hm ? hm->pass : 0) << " pass, "
      << (hm ? hm->vacuous : 0) << " vacuous, " << secs << " s";
    report(1, ok, "Hofmann-Mislove bijection on every topology up to 4 points", d.str());

    const PropertyRow* kp = find_row(r, "keimel_paseka");
    const std::size_t sober = count_sober_upto4();
    std::ostringstream k;
    k << (kp ? kp->pass : 0) << " sober pass, " << (kp ? kp->vacuous : 0) << " non-sober vacuous, "
      << (kp ? kp->fail : 0) << " fail";
    report(2, kp && kp->fail == 0 && kp->pass == sober && kp->vacuous == r.items - sober,
           "Keimel-Paseka on sober members, vacuous otherwise", k.str());
  }
  {
    const SweepReport r = run_sweep({Suite::Separation, 7, 20240607, 500, 1});
    report(3, clean(r) && r.items == 390 + 500, "separation chain over exhaustive corpus and 500 random spaces",
           summary(r));
  }
  suite_criterion(4, Suite::Compactness, "compactness lemmas");
  suite_criterion(5, Suite::THalf, "T_1/2 characterization");
  {
    const SweepReport r = run_sweep({Suite::EssSurj, 8, 3, 200, 1});
    const PropertyRow* row = find_row(r, "O(B(L))≅L");
    report(6, clean(r) && row && row->pass == r.items && r.items == 36 + 200,
           "O(B(L)) = L for all distributive lattices up to 8 elements", summary(r));
  }
  suite_criterion(7, Suite::Duality, "duality round trips");
  {
    const SweepReport r = run_sweep({Suite::Stone, 4, 8, 100, 1});
    report(8, clean(r) && r.items == 100, "Stone path for boolean algebras with up to 4 atoms", summary(r));
  }
  suite_criterion(9, Suite::ZeroDim, "zero-dimensionality");
  {
    const SweepReport r = run_sweep({Suite::Degeneracy, 4, 5, 0, 1});
    const PropertyRow* wb = find_row(r, "way_below=leq");
    const bool ok = clean(r) && wb && wb->pass > 0;
    report(10, ok, "finite degeneracy facts",
           summary(r) + "; way-below oracle on " + std::to_string(wb ? wb->pass : 0) + " frames of size <= 6");
  }
  suite_criterion(11, Suite::Oracles, "brute-force oracle agreement");
  {
    std::vector<std::string> problems;
    auto expect = [&](int want, const std::vector<std::string>& args) {
      const int got = run_cli(args);
      if (got != want) {
        std::string line = "exit " + std::to_string(got) + " for";
        for (const auto& a : args) line += " " + fs::path(a).filename().string();
        problems.push_back(line);
      }
    };
    expect(kExitTrue, {"check", "--pred", "sober", fx("sierpinski")});
    expect(kExitFalse, {"check", "--pred", "t1", fx("sierpinski")});
    expect(kExitInvalid, {"validate", fx("broken_topology")});
    expect(kExitInvalid, {"validate", fx("invalid/truncated.json")});
    expect(kExitFalse, {"hm", fx("indiscrete2")});
    expect(kExitInvalid, {"no-such-command"});
    std::string t1;
    run_cli({"check", "--pred", "t1", fx("sierpinski")}, &t1);
    if (t1.find("witness: {1}") == std::string::npos) problems.push_back("t1 witness missing");

    std::size_t docs = 0;
    for (const auto& e : fs::directory_iterator(MTLAB_FIXTURE_DIR)) {
      if (e.path().extension() != ".json") continue;
      std::ifstream in(e.path(), std::ios::binary);
      std::ostringstream s;
      s << in.rdbuf();
      ++docs;
      if (serialize(parse_document(s.str())) != s.str()) problems.push_back("round trip " + e.path().filename().string());
    }

    const std::vector<std::string> sweep{"sweep", "--suite", "full", "--size", "4", "--seed", "42", "--json"};
    std::string a, b;
    run_cli(sweep, &a);
    run_cli(sweep, &b);
    if (a != b || a.empty()) problems.push_back("sweep --json differs between runs");

    std::string detail = std::to_string(docs) + " fixtures round trip, exit codes 0/1/2, " +
                         std::to_string(a.size()) + "-byte sweep reports identical";
    if (!problems.empty()) detail = problems.front();
    report(12, problems.empty(), "CLI contract", detail);
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
