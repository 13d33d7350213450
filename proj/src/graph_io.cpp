#include "lapcoef/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "lapcoef/errors.hpp"

namespace lapcoef {

GraphFormat parse_format(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    return true;
  };

  std::string_view line;
  std::size_t n = 0;
  bool have_header = false;
  while (next_line(line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_number(line, n)) throw ParseError("malformed header line '" + std::string(line) + "'");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError("missing vertex-count header");

  std::vector<Edge> edges;
  std::size_t lineno = 1;
  while (next_line(line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    std::size_t u = 0, v = 0;
    if (!parse_number(trim(line.substr(0, sp)), u) || !parse_number(trim(line.substr(sp + 1)), v)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Code::kVertexOutOfRange,
                       "line " + std::to_string(lineno) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  auto take6 = [&](std::size_t count) {
    if (pos + count > line.size()) throw ParseError("truncated graph6 size field");
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::size_t>(line[pos++] - 63);
    return v;
  };
  if (line[0] != '~') {
    n = take6(1);
  } else if (line.size() > 1 && line[1] != '~') {
    pos = 1;
    n = take6(3);
  } else {
    pos = 2;
    n = take6(6);
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) throw ParseError("graph6 body has wrong length for n=" + std::to_string(n));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    const int chunk = line[pos + k / 6] - 63;
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("graph6 padding bits must be zero");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  auto put6 = [&](std::size_t v, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((v >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put6(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put6(n, 3);
  } else {
    out += "~~";
    put6(n, 6);
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  auto nl = text.find('\n');
  return parse_graph6(text.substr(0, nl));
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

StreamStats for_each_graph6(std::istream& in, const std::function<void(Graph)>& visit) {
  StreamStats stats;
  for (std::string line; std::getline(in, line);) {
    auto t = trim(line);
    if (t.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(t);
    } catch (const Error&) {
      ++stats.malformed;
      continue;
    }
    ++stats.parsed;
    visit(std::move(g));
  }
  return stats;
}

}  // namespace lapcoef
