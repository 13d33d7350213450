#include "lapcoef/invariants.hpp"

#include <charconv>

#include "lapcoef/errors.hpp"
#include "lapcoef/matchings.hpp"
#include "lapcoef/spectra.hpp"

namespace lapcoef {

namespace {

Int ipow(const Int& base, int e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Int u(std::size_t v) { return Int(static_cast<unsigned long>(v)); }

const char* simple_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::kEdges: return "m";
    case InvariantKind::kVertices: return "n";
    case InvariantKind::kTriangles: return "t";
    case InvariantKind::kBeta: return "beta";
    case InvariantKind::kEM1: return "EM1";
    case InvariantKind::kEM2: return "EM2";
    case InvariantKind::kTheta1: return "Theta1";
    case InvariantKind::kTheta2: return "Theta2";
    case InvariantKind::kTheta3: return "Theta3";
    case InvariantKind::kTheta4: return "Theta4";
    case InvariantKind::kTheta5: return "Theta5";
    case InvariantKind::kTheta6: return "Theta6";
    case InvariantKind::kTheta2Plus: return "Theta2p";
    case InvariantKind::kTheta3Plus: return "Theta3p";
    case InvariantKind::kTheta3PlusSq: return "Theta3pp";
    case InvariantKind::kWiener: return "W";
    case InvariantKind::kHyperWiener: return "WW";
    case InvariantKind::kTau: return "tau";
    default: return nullptr;
  }
}

constexpr InvariantKind kSimpleKinds[] = {
    InvariantKind::kEdges,  InvariantKind::kVertices,   InvariantKind::kTriangles,  InvariantKind::kBeta,
    InvariantKind::kEM1,    InvariantKind::kEM2,        InvariantKind::kTheta1,     InvariantKind::kTheta2,
    InvariantKind::kTheta3, InvariantKind::kTheta4,     InvariantKind::kTheta5,     InvariantKind::kTheta6,
    InvariantKind::kTheta2Plus, InvariantKind::kTheta3Plus, InvariantKind::kTheta3PlusSq,
    InvariantKind::kWiener, InvariantKind::kHyperWiener, InvariantKind::kTau,
};

bool alpha_allowed(int l, int x) {
  return (l == 1 && (x == 2 || x == 3 || x == 4)) || (l == 2 && x == 3);
}

}  // namespace

InvariantId InvariantId::m1(int alpha) {
  if (alpha < 1 || alpha > 6) throw PreconditionError("M1 exponent must be in 1..6");
  return {InvariantKind::kM1, alpha};
}

InvariantId InvariantId::m2(int lambda) {
  if (lambda < 1 || lambda > 2) throw PreconditionError("M2 exponent must be 1 or 2");
  return {InvariantKind::kM2, lambda};
}

InvariantId InvariantId::alpha(int lambda, int xi) {
  if (!alpha_allowed(lambda, xi)) throw PreconditionError("alpha exponents must be (1,2), (1,3), (1,4) or (2,3)");
  return {InvariantKind::kAlpha, lambda, xi};
}

std::string InvariantId::name() const {
  auto s = [](int v) { return std::to_string(v); };
  if (const char* n = simple_name(kind)) return n;
  switch (kind) {
    case InvariantKind::kM1: return "M1_" + s(a);
    case InvariantKind::kM2: return "M2_" + s(a);
    case InvariantKind::kAlpha: return "alpha_" + s(a) + "_" + s(b);
    case InvariantKind::kMij: return "mij(" + s(a) + "," + s(b) + ")";
    case InvariantKind::kP3ij: return "p3ij(" + s(a) + "," + s(b) + ")";
    case InvariantKind::kWalks: return "walks(" + s(a) + ")";
    case InvariantKind::kCount: return "count(" + std::string(pattern_name(pattern)) + ")";
    case InvariantKind::kMatchings: return "match(" + s(a) + ")";
    case InvariantKind::kCoefficient: return "c(" + s(a) + ")";
    case InvariantKind::kCoefficientTop: return "cn(" + s(a) + ")";
    default: return "?";
  }
}

InvariantId parse_invariant(std::string_view name) {
  for (InvariantKind k : kSimpleKinds) {
    if (name == simple_name(k)) return InvariantId::simple(k);
  }
  auto number = [&](std::string_view digits) {
    int v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size()) {
      throw ParseError("unknown invariant '" + std::string(name) + "'");
    }
    return v;
  };
  if (name.starts_with("M1_")) return InvariantId::m1(number(name.substr(3)));
  if (name.starts_with("M2_")) return InvariantId::m2(number(name.substr(3)));
  if (name.starts_with("alpha_") && name.size() >= 9 && name[7] == '_') {
    return InvariantId::alpha(number(name.substr(6, 1)), number(name.substr(8)));
  }
  auto open = name.find('(');
  if (open != std::string_view::npos && name.back() == ')') {
    auto fn = name.substr(0, open);
    auto args = name.substr(open + 1, name.size() - open - 2);
    auto comma = args.find(',');
    if (fn == "mij" || fn == "p3ij") {
      if (comma == std::string_view::npos) throw ParseError(std::string(fn) + " needs two arguments");
      int i = number(args.substr(0, comma)), j = number(args.substr(comma + 1));
      return fn == "mij" ? InvariantId::mij(i, j) : InvariantId::p3ij(i, j);
    }
    if (fn == "count") {
      auto p = parse_pattern(args);
      if (!p) throw ParseError("unknown pattern '" + std::string(args) + "'");
      return InvariantId::count(*p);
    }
    if (fn == "walks") return InvariantId::walks(number(args));
    if (fn == "match") return InvariantId::matchings(number(args));
    if (fn == "c") return InvariantId::coefficient(number(args));
    if (fn == "cn") return InvariantId::coefficient_top(number(args));
  }
  throw ParseError("unknown invariant '" + std::string(name) + "'");
}

const std::vector<InvariantId>& standard_registry() {
  static const std::vector<InvariantId> reg = [] {
    std::vector<InvariantId> r{InvariantId::edges(), InvariantId::vertices(), InvariantId::triangles()};
    for (int a = 1; a <= 6; ++a) r.push_back(InvariantId::m1(a));
    r.push_back(InvariantId::m2(1));
    r.push_back(InvariantId::m2(2));
    r.push_back(InvariantId::alpha(1, 2));
    r.push_back(InvariantId::alpha(1, 3));
    r.push_back(InvariantId::alpha(1, 4));
    r.push_back(InvariantId::alpha(2, 3));
    for (InvariantKind k : kSimpleKinds) {
      if (k == InvariantKind::kEdges || k == InvariantKind::kVertices || k == InvariantKind::kTriangles) continue;
      r.push_back(InvariantId::simple(k));
    }
    return r;
  }();
  return reg;
}

Int bareiss_determinant(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Int spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1, 0));
  for (Vertex v = 0; v + 1 < n; ++v) {
    minor[v][v] = u(g.degree(v));
    for (Vertex w : g.neighbors(v)) {
      if (w + 1 < n) minor[v][w] = -1;
    }
  }
  return bareiss_determinant(std::move(minor));
}

namespace {

// sum over unordered pairs of f(d(u, v)); requires connectivity.
template <class F>
Int distance_sum(const Graph& g, F&& f, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " needs a connected graph");
  Int total = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto d = distances_from(g, s);
    for (Vertex t = s + 1; t < g.order(); ++t) total += f(static_cast<unsigned long>(d[t]));
  }
  return total;
}

}  // namespace

Int wiener_index(const Graph& g) {
  return distance_sum(g, [](unsigned long d) { return Int(d); }, "W");
}

Int hyper_wiener_index(const Graph& g) {
  // (d + d^2) / 2 is always integral.
  return distance_sum(g, [](unsigned long d) { return Int(d * (d + 1) / 2); }, "WW");
}

namespace {

struct DegreeSums {
  const Graph& g;
  std::vector<Int> deg;

  explicit DegreeSums(const Graph& graph) : g(graph), deg(graph.order()) {
    for (Vertex v = 0; v < g.order(); ++v) deg[v] = u(g.degree(v));
  }

  Int edge_degree(const Edge& e) const { return deg[e.first] + deg[e.second] - 2; }

  template <class F>
  Int over_p3(F&& f) const {
    Int total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) total += f(deg[nb[i]], deg[v], deg[nb[j]]);
      }
    }
    return total;
  }

  // Each P4 u-v-w-x once: middle edge (v, w) taken in canonical orientation.
  template <class F>
  Int over_p4(F&& f) const {
    Int total = 0;
    for (auto [v, w] : g.edges()) {
      for (Vertex a : g.neighbors(v)) {
        if (a == w) continue;
        for (Vertex x : g.neighbors(w)) {
          if (x == v || x == a) continue;
          total += f(deg[a], deg[v], deg[w], deg[x]);
        }
      }
    }
    return total;
  }

  // Unordered pairs of distinct edges sharing vertex w.
  template <class F>
  Int over_adjacent_edges(F&& f) const {
    Int total = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
      auto nb = g.neighbors(w);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          total += f(deg[w], edge_degree({w, nb[i]}), edge_degree({w, nb[j]}));
        }
      }
    }
    return total;
  }
};

}  // namespace

Int eval_invariant(const InvariantId& id, const Graph& g) {
  DegreeSums s(g);
  const auto& d = s.deg;
  switch (id.kind) {
    case InvariantKind::kEdges: return u(g.size());
    case InvariantKind::kVertices: return u(g.order());
    case InvariantKind::kTriangles: return triangle_count(g);
    case InvariantKind::kM1: {
      Int t = 0;
      for (const auto& x : d) t += ipow(x, id.a);
      return t;
    }
    case InvariantKind::kM2: {
      Int t = 0;
      for (auto [a, b] : g.edges()) t += ipow(d[a] * d[b], id.a);
      return t;
    }
    case InvariantKind::kAlpha: {
      Int t = 0;
      for (auto [a, b] : g.edges()) {
        t += ipow(d[a], id.a) * ipow(d[b], id.b) + ipow(d[a], id.b) * ipow(d[b], id.a);
      }
      return t;
    }
    case InvariantKind::kBeta:
      return s.over_adjacent_edges([](const Int& dw, const Int& de, const Int& df) -> Int { return dw * (de + df); });
    case InvariantKind::kEM1: {
      Int t = 0;
      for (const auto& e : g.edges()) t += ipow(s.edge_degree(e), 2);
      return t;
    }
    case InvariantKind::kEM2:
      return s.over_adjacent_edges([](const Int&, const Int& de, const Int& df) -> Int { return de * df; });
    case InvariantKind::kTheta1:
      return s.over_p3([](const Int& a, const Int& b, const Int& c) -> Int { return a * b * c; });
    case InvariantKind::kTheta2:
      return s.over_p3([](const Int& a, const Int&, const Int& c) -> Int { return a * c; });
    case InvariantKind::kTheta3:
      return s.over_p4([](const Int& a, const Int&, const Int&, const Int& x) -> Int { return a * x; });
    case InvariantKind::kTheta4:
      return s.over_p3([](const Int& a, const Int&, const Int& c) -> Int { return a * a * c + a * c * c; });
    case InvariantKind::kTheta5:
      return s.over_p3([](const Int& a, const Int& b, const Int& c) -> Int { return b * b * (a + c); });
    case InvariantKind::kTheta6:
      return s.over_p4([](const Int& a, const Int& b, const Int& c, const Int& x) -> Int { return a * b + c * x; });
    case InvariantKind::kTheta2Plus:
      return s.over_p3([](const Int& a, const Int&, const Int& c) -> Int { return a + c; });
    case InvariantKind::kTheta3Plus:
      return s.over_p4([](const Int& a, const Int&, const Int&, const Int& x) -> Int { return a + x; });
    case InvariantKind::kTheta3PlusSq:
      return s.over_p4([](const Int& a, const Int&, const Int&, const Int& x) -> Int { return a * a + x * x; });
    case InvariantKind::kWiener: return wiener_index(g);
    case InvariantKind::kHyperWiener: return hyper_wiener_index(g);
    case InvariantKind::kTau: return spanning_tree_count(g);
    case InvariantKind::kMij: {
      Int t = 0;
      for (auto [a, b] : g.edges()) {
        auto lo = std::min(d[a], d[b]), hi = std::max(d[a], d[b]);
        if (lo == id.a && hi == id.b) ++t;
      }
      return t;
    }
    case InvariantKind::kP3ij:
      return s.over_p3([&](const Int& a, const Int&, const Int& c) {
        auto lo = std::min(a, c), hi = std::max(a, c);
        return Int(lo == id.a && hi == id.b ? 1 : 0);
      });
    case InvariantKind::kWalks:
      if (id.a < 0) throw PreconditionError("walk length must be >= 0");
      return closed_walks_trace(g, static_cast<std::size_t>(id.a));
    case InvariantKind::kCount: return count_pattern(g, id.pattern);
    case InvariantKind::kMatchings:
      if (id.a < 0) throw PreconditionError("matching size must be >= 0");
      return matching_count(g, static_cast<std::size_t>(id.a));
    case InvariantKind::kCoefficient:
    case InvariantKind::kCoefficientTop: {
      const long n = static_cast<long>(g.order());
      const long k = id.kind == InvariantKind::kCoefficient ? id.a : n - id.a;
      if (k < 0 || k > n) throw PreconditionError("coefficient index out of range");
      return laplacian_charpoly(g)[static_cast<std::size_t>(k)];
    }
  }
  throw Error("unhandled invariant");
}

}  // namespace lapcoef
