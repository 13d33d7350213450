#include "lapcoef/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "lapcoef/errors.hpp"
#include "lapcoef/graph_io.hpp"

namespace lapcoef {

// ---- verify ----------------------------------------------------------------

std::vector<std::string> VerificationReport::falsified_ids() const {
  std::vector<std::string> out;
  for (const auto& t : identities) {
    if (t.falsified > 0) out.push_back(t.id);
  }
  return out;
}

VerificationReport run_verify(const Corpus& corpus, const std::vector<const IdentityRecord*>& ids,
                              const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t ng = corpus.graphs.size();
  const std::size_t nr = ids.size();
  enum : std::uint8_t { kSkipped, kEqual, kFalsified };
  std::vector<std::uint8_t> status(ng * nr, kSkipped);
  std::vector<std::vector<std::pair<std::size_t, Verdict>>> failures(ng);
  std::vector<std::string> errors(ng);

#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::size_t gi = 0; gi < ng; ++gi) {
    try {
      Evaluator ev(corpus.graphs[gi]);
      for (std::size_t r = 0; r < nr; ++r) {
        Verdict v = evaluate_identity(*ids[r], ev);
        if (!v.precondition_met) continue;
        status[gi * nr + r] = v.equal ? kEqual : kFalsified;
        if (!v.equal) failures[gi].emplace_back(r, std::move(v));
      }
    } catch (const std::exception& e) {
      errors[gi] = e.what();
    }
  }
  for (std::size_t gi = 0; gi < ng; ++gi) {
    if (!errors[gi].empty()) {
      throw Error("verify failed on " + emit_graph6(corpus.graphs[gi]) + ": " + errors[gi]);
    }
  }

  VerificationReport report;
  report.corpus = corpus.descriptor;
  report.graphs = ng;
  report.malformed = corpus.malformed;
  report.identities.resize(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    auto& t = report.identities[r];
    t.id = ids[r]->id;
    for (std::size_t gi = 0; gi < ng; ++gi) {
      switch (status[gi * nr + r]) {
        case kSkipped: ++t.skipped; break;
        case kEqual: ++t.tested; ++t.equal; break;
        default: ++t.tested; ++t.falsified; break;
      }
    }
  }
  for (std::size_t gi = 0; gi < ng; ++gi) {
    const Graph& g = corpus.graphs[gi];
    for (auto& [r, v] : failures[gi]) {
      report.identities[r].counterexamples.push_back({v.graph6, g.order(), g.size(), v.lhs, v.rhs});
    }
  }
  for (auto& t : report.identities) {
    auto& cx = t.counterexamples;
    std::sort(cx.begin(), cx.end(), [](const Counterexample& a, const Counterexample& b) {
      return std::tie(a.order, a.size, a.graph6) < std::tie(b.order, b.size, b.graph6);
    });
    cx.erase(std::unique(cx.begin(), cx.end(),
                         [](const Counterexample& a, const Counterexample& b) { return a.graph6 == b.graph6; }),
             cx.end());
    if (cx.size() > options.max_counterexamples) cx.resize(options.max_counterexamples);
  }
  std::sort(report.identities.begin(), report.identities.end(),
            [](const IdentityTally& a, const IdentityTally& b) { return a.id < b.id; });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& t : report.identities) {
    nlohmann::json cx = nlohmann::json::array();
    for (const auto& c : t.counterexamples) {
      cx.push_back({{"graph6", c.graph6}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}});
    }
    ids.push_back({{"id", t.id},
                   {"tested", t.tested},
                   {"skipped", t.skipped},
                   {"equal", t.equal},
                   {"falsified", t.falsified},
                   {"counterexamples", std::move(cx)}});
  }
  nlohmann::json j = {{"corpus", report.corpus},
                      {"graphs", report.graphs},
                      {"malformed", report.malformed},
                      {"identities", std::move(ids)}};
  if (include_timing) j["seconds"] = report.seconds;
  return j;
}

std::set<std::string> load_errata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read errata file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad errata file " + path + ": " + e.what());
  }
  std::set<std::string> out;
  for (const auto& id : j.at("falsified")) out.insert(id.get<std::string>());
  return out;
}

std::string default_errata_path() { return std::string(LAPCOEF_DATA_DIR) + "/errata.json"; }

// ---- tables ----------------------------------------------------------------

const Int& table_expected(std::size_t k, std::size_t x, std::size_t t) {
  static const char* k3[5][5] = {
      {"132", "810", "3894", "16974", "70782"},
      {"512", "9520", "107888", "1013104", "8754032"},
      {"1146", "76329", "2151219", "44481015", "804407871"},
      {"1524", "442926", "32892762", "1532049426", "58577653506"},
      {"1196", "1926456", "401303300", "43109506572", "3521109479132"},
  };
  static const char* k4[5][5] = {
      {"450", "5202", "50562", "466578", "4234050"},
      {"3680", "166736", "5259296", "149307536", "4098568160"},
      {"19549", "3849829", "405115261", "35685894085", "2971474597789"},
      {"71496", "68251680", "24647441832", "6795068311872", "1721091168665352"},
      {"186394", "967057330", "1233678403066", "1073738466435154", "829575812820551386"},
  };
  static const auto parsed = [] {
    std::vector<Int> v;
    for (auto* table : {k3, k4}) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) v.emplace_back(table[i][j]);
      }
    }
    return v;
  }();
  if ((k != 3 && k != 4) || x < 2 || x > 6 || t < 2 || t > 6) throw Error("table cell out of range");
  return parsed[(k - 3) * 25 + (x - 2) * 5 + (t - 2)];
}

std::vector<TableCell> reproduce_tables(bool parallel) {
  std::vector<TableCell> cells;
  for (std::size_t k : {3, 4}) {
    for (std::size_t x = 2; x <= 6; ++x) {
      for (std::size_t t = 2; t <= 6; ++t) {
        TableCell cell;
        cell.k = k;
        cell.x = x;
        cell.t = t;
        cell.expected = table_expected(k, x, t);
        cells.push_back(std::move(cell));
      }
    }
  }
  // One tree per (k, t); every row of that column shares its evaluator.
  std::vector<std::pair<std::size_t, std::size_t>> columns;
  for (std::size_t k : {3, 4}) {
    for (std::size_t t = 2; t <= 6; ++t) columns.emplace_back(k, t);
  }
  std::vector<std::string> errors(columns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t c = 0; c < columns.size(); ++c) {
    try {
      const auto [k, t] = columns[c];
      Evaluator ev(generate_family(RootedTreeFamily{k, t}));
      const std::size_t n = ev.graph().order();
      for (auto& cell : cells) {
        if (cell.k != k || cell.t != t) continue;
        const std::size_t idx = n - cell.x;
        cell.closed_form = tkt_closed_form(k, t, cell.x);
        cell.degree_formula = laplacian_coefficient(ev, idx, Method::kDegreeFormula);
        cell.subdivision_matching = laplacian_coefficient(ev, idx, Method::kSubdivisionMatching);
        if (t <= 3) cell.charpoly = laplacian_coefficient(ev, idx, Method::kCharpoly);
        cell.match = cell.closed_form == cell.expected && cell.degree_formula == cell.expected &&
                     cell.subdivision_matching == cell.expected && (!cell.charpoly || *cell.charpoly == cell.expected);
      }
    } catch (const std::exception& e) {
      errors[c] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Error("table reproduction failed: " + e);
  }
  return cells;
}

std::string tables_csv(const std::vector<TableCell>& cells) {
  std::ostringstream out;
  out << "x,t,expected,closed_form,degree_formula,subdivision_matching,charpoly,match\n";
  for (const auto& c : cells) {
    out << c.x << ',' << c.t << ',' << c.expected << ',' << c.closed_form << ',' << c.degree_formula << ','
        << c.subdivision_matching << ',' << (c.charpoly ? c.charpoly->get_str() : "") << ','
        << (c.match ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const std::vector<TableCell>& cells) {
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& c : cells) {
    nlohmann::json cell = {{"x", c.x},
                           {"t", c.t},
                           {"expected", c.expected.get_str()},
                           {"closed_form", c.closed_form.get_str()},
                           {"degree_formula", c.degree_formula.get_str()},
                           {"subdivision_matching", c.subdivision_matching.get_str()},
                           {"charpoly", c.charpoly ? nlohmann::json(c.charpoly->get_str()) : nlohmann::json()},
                           {"match", c.match}};
    tables["T(" + std::to_string(c.k) + ",t)"].push_back(std::move(cell));
  }
  return tables;
}

// ---- conjecture ------------------------------------------------------------

ConjectureSummary conjecture_scan(const std::vector<Graph>& graphs, std::size_t malformed, bool parallel) {
  std::vector<std::optional<ConjectureReport>> reports(graphs.size());
  std::vector<std::string> errors(graphs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!is_connected(graphs[i])) continue;
    try {
      reports[i] = conjecture_bounds(graphs[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!errors[i].empty()) throw Error("conjecture scan failed on " + emit_graph6(graphs[i]) + ": " + errors[i]);
  }

  ConjectureSummary s;
  s.graphs = graphs.size();
  s.malformed = malformed;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!reports[i]) {
      ++s.disconnected;
      continue;
    }
    bool any = false;
    for (const auto& it : reports[i]->items) {
      auto& tally = s.items[it.item - 1];
      if (!it.evaluated) {
        ++tally.skipped;
        continue;
      }
      any = true;
      ConjectureOutcome o{emit_graph6(graphs[i]),           it.item,          reports[i]->girth.to_string(),
                          std::string(relation_symbol(it.relation)), it.lhs.get_str(), it.rhs.get_str(),
                          it.equality_predicted};
      switch (it.relation) {
        case Relation::kLess: ++tally.less; break;
        case Relation::kEqual: ++tally.equal; break;
        case Relation::kGreater: ++tally.greater; break;
      }
      const bool equal = it.relation == Relation::kEqual;
      if (it.relation == Relation::kGreater) s.violations.push_back(o);
      if (equal != it.equality_predicted) s.mismatches.push_back(std::move(o));
    }
    if (!any) ++s.fully_skipped;
  }
  return s;
}

nlohmann::json to_json(const ConjectureSummary& s) {
  auto outcomes = [](const std::vector<ConjectureOutcome>& list) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& o : list) {
      a.push_back({{"graph6", o.graph6},
                   {"item", o.item},
                   {"girth", o.girth},
                   {"relation", o.relation},
                   {"lhs", o.lhs},
                   {"rhs", o.rhs},
                   {"equality_predicted", o.equality_predicted}});
    }
    return a;
  };
  nlohmann::json items = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& t = s.items[i];
    items.push_back({{"item", i + 1}, {"<", t.less}, {"=", t.equal}, {">", t.greater}, {"skipped", t.skipped}});
  }
  return {{"graphs", s.graphs},
          {"disconnected_skipped", s.disconnected},
          {"malformed", s.malformed},
          {"skipped", s.fully_skipped},
          {"items", std::move(items)},
          {"violations", outcomes(s.violations)},
          {"mismatches", outcomes(s.mismatches)}};
}

}  // namespace lapcoef
