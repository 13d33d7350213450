#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "lapcoef/corpus.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/formulas.hpp"

namespace lapcoef {

// ---- verify ----------------------------------------------------------------

struct Counterexample {
  std::string graph6;
  std::size_t order = 0;
  std::size_t size = 0;
  Rational lhs;
  Rational rhs;
};

struct IdentityTally {
  std::string id;
  std::size_t tested = 0;  // precondition met
  std::size_t skipped = 0;
  std::size_t equal = 0;
  std::size_t falsified = 0;
  std::vector<Counterexample> counterexamples;  // smallest first
};

struct VerificationReport {
  std::string corpus;
  std::size_t graphs = 0;
  std::size_t malformed = 0;
  std::vector<IdentityTally> identities;  // sorted by id
  double seconds = 0;

  std::vector<std::string> falsified_ids() const;
};

struct VerifyOptions {
  bool parallel = true;
  std::size_t max_counterexamples = 5;
};

VerificationReport run_verify(const Corpus& corpus, const std::vector<const IdentityRecord*>& ids,
                              const VerifyOptions& options = {});

// Timing is left out unless asked for so that reports stay byte-identical
// across runs.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);

// Identity ids known to be false as printed. Throws Error when unreadable.
std::set<std::string> load_errata(const std::string& path);
std::string default_errata_path();

// ---- tables ----------------------------------------------------------------

struct TableCell {
  std::size_t k = 0;  // 3 for the first table, 4 for the second
  std::size_t x = 0;  // row: c_{n-x}
  std::size_t t = 0;
  Int expected;
  Int closed_form;
  Int degree_formula;
  Int subdivision_matching;
  std::optional<Int> charpoly;  // t <= 3 only
  bool match = false;
};

// Published values of c_{n-x}(T(k,t)) for x, t in 2..6.
const Int& table_expected(std::size_t k, std::size_t x, std::size_t t);

std::vector<TableCell> reproduce_tables(bool parallel = true);
std::string tables_csv(const std::vector<TableCell>& cells);
nlohmann::json to_json(const std::vector<TableCell>& cells);

// ---- conjecture ------------------------------------------------------------

struct ConjectureOutcome {
  std::string graph6;
  int item = 0;
  std::string girth;
  std::string relation;
  std::string lhs;
  std::string rhs;
  bool equality_predicted = false;
};

struct ConjectureSummary {
  std::size_t graphs = 0;
  std::size_t disconnected = 0;
  std::size_t malformed = 0;
  std::size_t fully_skipped = 0;  // connected but too small for every item
  struct PerItem {
    std::size_t less = 0, equal = 0, greater = 0, skipped = 0;
  };
  PerItem items[3];
  std::vector<ConjectureOutcome> violations;  // ">" outcomes
  std::vector<ConjectureOutcome> mismatches;  // equality disagrees with the girth prediction
};

ConjectureSummary conjecture_scan(const std::vector<Graph>& graphs, std::size_t malformed = 0,
                                  bool parallel = true);
nlohmann::json to_json(const ConjectureSummary& summary);

}  // namespace lapcoef
