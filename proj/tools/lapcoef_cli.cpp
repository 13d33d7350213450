#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lapcoef/corpus.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/formulas.hpp"
#include "lapcoef/graph_io.hpp"
#include "lapcoef/harness.hpp"
#include "lapcoef/invariants.hpp"

using namespace lapcoef;
using nlohmann::json;

namespace {

struct GraphSource {
  std::string input = "-";
  std::string format = "edge-list";
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "graph file, '-' for stdin");
    cmd->add_option("-f,--format", format, "edge-list or graph6")->check(CLI::IsMember({"edge-list", "graph6"}));
    cmd->add_option("--family", family, "generate instead of reading, e.g. T,3,2");
  }

  Graph load() const {
    if (!family.empty()) return generate_family(parse_family(family));
    std::string text;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(input);
      if (!in) throw Error("cannot read " + input);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto fmt = parse_format(format);
    if (fmt == GraphFormat::kGraph6) {
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    return parse_graph(text, fmt);
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_coeffs(const GraphSource& src, const std::optional<std::size_t>& k, const std::string& method_name) {
  const auto method = parse_method(method_name);
  if (!method) throw CLI::ValidationError("--method", "unknown method " + method_name);
  Evaluator ev(src.load());
  json out = {{"graph6", emit_graph6(ev.graph())}, {"n", ev.graph().order()}, {"method", method_name}};
  if (k) {
    out["k"] = *k;
    out["value"] = laplacian_coefficient(ev, *k, *method).get_str();
  } else {
    json coeffs = json::array();
    for (std::size_t i = 0; i <= ev.graph().order(); ++i) {
      try {
        coeffs.push_back(laplacian_coefficient(ev, i, *method).get_str());
      } catch (const PreconditionError&) {
        coeffs.push_back(nullptr);
      }
    }
    out["coefficients"] = std::move(coeffs);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_invariants(const GraphSource& src) {
  const Graph g = src.load();
  json inv = json::object();
  for (const auto& id : standard_registry()) {
    try {
      inv[id.name()] = eval_invariant(id, g).get_str();
    } catch (const PreconditionError&) {
      inv[id.name()] = nullptr;
    }
  }
  std::cout << json{{"graph6", emit_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"invariants", inv}}.dump(2)
            << '\n';
  return 0;
}

int cmd_verify(const std::string& corpus_spec, const std::string& ids, std::uint64_t seed,
               const std::string& errata_path, bool timing, const std::string& output, std::size_t max_cx) {
  const auto selected = select_identities(split(ids, ','));
  const Corpus corpus = build_corpus(corpus_spec, seed);
  VerifyOptions options;
  options.max_counterexamples = max_cx;
  const auto report = run_verify(corpus, selected, options);
  const auto errata = load_errata(errata_path.empty() ? default_errata_path() : errata_path);
  std::vector<std::string> unexpected;
  for (const auto& id : report.falsified_ids()) {
    if (!errata.contains(id)) unexpected.push_back(id);
  }
  json j = to_json(report, timing);
  j["unexpected_falsifications"] = unexpected;
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw Error("cannot write " + output);
    out << text;
  }
  if (timing) std::cerr << "verify: " << report.graphs << " graphs in " << report.seconds << " s\n";
  return unexpected.empty() ? 0 : 2;
}

int cmd_tables(const std::string& format) {
  const auto cells = reproduce_tables();
  if (format == "csv") {
    std::cout << tables_csv(cells);
  } else {
    std::cout << to_json(cells).dump(2) << '\n';
  }
  for (const auto& c : cells) {
    if (!c.match) return 2;
  }
  return 0;
}

int cmd_conjecture(const std::string& input, std::size_t exhaustive) {
  std::vector<Graph> graphs;
  std::size_t malformed = 0;
  if (exhaustive > 0) {
    for (std::size_t n = 1; n <= exhaustive; ++n) {
      auto part = connected_graphs(n);
      graphs.insert(graphs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else {
    auto visit = [&](Graph g) { graphs.push_back(std::move(g)); };
    StreamStats stats;
    if (input == "-") {
      stats = for_each_graph6(std::cin, visit);
    } else {
      std::ifstream in(input);
      if (!in) throw Error("cannot read " + input);
      stats = for_each_graph6(in, visit);
    }
    malformed = stats.malformed;
  }
  const auto summary = conjecture_scan(graphs, malformed);
  std::cout << to_json(summary).dump(2) << '\n';
  return 0;
}

int cmd_generate(const std::string& family, const std::string& format) {
  const Graph g = generate_family(parse_family(family));
  std::string text = emit_graph(g, parse_format(format));
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian coefficient toolkit"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Laplacian coefficients c_k of one graph");
  GraphSource coeffs_src;
  coeffs_src.attach(coeffs);
  std::optional<std::size_t> k;
  std::string method = "charpoly";
  coeffs->add_option("-k,--k", k, "single coefficient index");
  coeffs->add_option("-m,--method", method, "charpoly, subdivision_matching, degree_formula, trace_formula");

  auto* invariants = app.add_subcommand("invariants", "degree and distance invariants of one graph");
  GraphSource inv_src;
  inv_src.attach(invariants);

  auto* verify = app.add_subcommand("verify", "check catalog identities over a corpus");
  std::string corpus = "all-trees:8", ids = "all", errata, output;
  std::uint64_t seed = 1;
  bool timing = false;
  std::size_t max_cx = 5;
  verify->add_option("-c,--corpus", corpus, "corpus spec, e.g. all-trees:8+random-graphs:8:200");
  verify->add_option("--ids", ids, "comma-separated ids or id prefixes, or 'all'");
  verify->add_option("-s,--seed", seed, "corpus seed");
  verify->add_option("--errata", errata, "errata JSON (default: shipped data/errata.json)");
  verify->add_option("-o,--output", output, "write the report here instead of stdout");
  verify->add_option("--max-counterexamples", max_cx, "smallest counterexamples kept per identity");
  verify->add_flag("--timing", timing, "add wall-clock seconds to the report");

  auto* tables = app.add_subcommand("tables", "reproduce the T(3,t) and T(4,t) coefficient tables");
  std::string table_format = "csv";
  tables->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  auto* conjecture = app.add_subcommand("conjecture", "scan the trace-bound conjecture");
  std::string conj_input = "-";
  std::size_t exhaustive = 0;
  conjecture->add_option("-i,--input", conj_input, "graph6 stream, '-' for stdin");
  conjecture->add_option("--exhaustive", exhaustive, "all connected graphs with n <= N instead of a stream")
      ->check(CLI::Range(0, static_cast<int>(kMaxExhaustiveGraphOrder)));

  auto* generate = app.add_subcommand("generate", "emit a family member");
  std::string family, gen_format = "edge-list";
  generate->add_option("--family", family, "P,n S,n C,n K,n T,k,t D,p0,p1,... U,seq...")->required();
  generate->add_option("-f,--format", gen_format)->check(CLI::IsMember({"edge-list", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*coeffs) return cmd_coeffs(coeffs_src, k, method);
    if (*invariants) return cmd_invariants(inv_src);
    if (*verify) return cmd_verify(corpus, ids, seed, errata, timing, output, max_cx);
    if (*tables) return cmd_tables(table_format);
    if (*conjecture) return cmd_conjecture(conj_input, exhaustive);
    if (*generate) return cmd_generate(family, gen_format);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
