#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtlab/generate.hpp"

namespace mtlab {

enum class Suite { HM, Separation, Compactness, THalf, EssSurj, Duality, Stone, ZeroDim, Degeneracy, Oracles, Full };
std::string_view to_string(Suite s);
std::optional<Suite> suite_from_string(std::string_view name);
const std::vector<Suite>& all_suites();

struct SweepOptions {
  Suite suite = Suite::Full;
  std::size_t size = 4;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t jobs = 1;
};

struct PropertyRow {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
};

struct FailureRecord {
  std::size_t item = 0;
  std::string item_name;
  std::string structure;  // canonical document of the corpus item
  std::string property;
  std::string detail;
  std::vector<std::string> witness;
};

struct SweepReport {
  std::string suite;
  std::string generator;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t items = 0;
  std::vector<PropertyRow> rows;
  std::vector<FailureRecord> failures;

  /// pass + fail + vacuous = items on every row.
  bool accounting_holds() const;
  std::size_t failure_count() const;
};

/// Corpus per suite:
///  - space suites: every topology on 0..min(size, 4) points, then `count`
///    random topologies on 5..size points;
///  - esssurj: every distributive lattice with at most min(size, 10)
///    elements up to isomorphism, then `count` random down-set lattices;
///  - stone: `count` items (at least size + 1); item i is the powerset with
///    i mod (size + 1) atoms (size <= 8) and a random boolean hom out of it.
SweepReport run_sweep(const SweepOptions& options);

std::string report_text(const SweepReport& r);
/// Fixed key order and no timing data: identical inputs give identical bytes.
std::string report_json(const SweepReport& r);

}  // namespace mtlab
