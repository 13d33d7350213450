#include "lapcoef/formulas.hpp"

#include <array>
#include <string>

#include "formula_texts.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/graph_io.hpp"
#include "lapcoef/invariants.hpp"

namespace lapcoef {

namespace detail {

namespace {

std::string expand_traces(std::string s) {
  // B<k> = Tr A(L_1)^k, A2 = Tr A^2, A3 = Tr A^3.
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  };
  for (char k = '2'; k <= '6'; ++k) replace_all(std::string("B") + k, std::string("L(walks(") + k + "))");
  replace_all("A2", "walks(2)");
  replace_all("A3", "walks(3)");
  return s;
}

const std::string kC6Degree =
    "(1/720)*(64*m^6-480*m^5+720*m^4+600*m^3-360*m^2-480*m-720*M1_5-2160*alpha_1_2-720*alpha_1_3"
    "+540*M1_2^2-2340*m^2*M1_2+2160*m*M1_3-1080*M1_4+720*M2_1-240*M1_2*M1_3*m-120*M1_6-720*M2_2"
    "+600*M1_2*M1_3+1680*M1_2*m^3-810*M1_2^2*m-1920*M1_3*m^2+1620*M1_4*m+3600*M2_1*m-720*Theta2"
    "-1260*m*M1_2+720*M1_2+480*M1_3-240*m^4*M1_2+320*m^3*M1_3+360*M1_2*M2_1+90*M1_2*M1_4"
    "+180*M1_2^2*m^2-360*M1_4*m^2-1440*M2_1*m^2+288*M1_5*m+1440*alpha_1_2*m+40*M1_3^2-15*M1_2^3)";

const std::array<std::string, 7> kDegreeTexts = {
    "",
    "",
    "(1/2)*(4*m^2-2*m-M1_2)",
    "(1/6)*(4*m^2*(2*m-3)-6*M1_2*m+6*M1_2+2*M1_3-12*t)",
    "(1/24)*(4*m*(4*m^3-12*m^2+3*m-6*M1_2*m+15*M1_2+4*M1_3+3)+3*(M1_2-2)^2-24*M1_3-6*M1_4-24*M2_1-12)",
    "(1/120)*(2*m*(16*m^4-80*m^3+60*m^2-40*M1_2*m^2+60*m+180*M1_2*m+40*M1_3*m+15*M1_2^2-120*M1_2"
    "-140*M1_3-30*M1_4-120*M2_1)-20*M1_2*(3*M1_2+M1_3+6)+120*M1_3+120*M1_4+24*M1_5+240*M2_1"
    "+120*alpha_1_2)",
    kC6Degree,
};

const std::string kTrace6Head =
    "(1/720)*(A2*(A2-2)*(A2-4)*(A2-6)*(A2-8)*(A2-10)-15*A2^4*B2+A2^3*(420*B2+40*B3)"
    "-A2^2*(4260*B2+960*B3+90*B4)+45*(A2*B2)^2-810*A2*B2^2+A2*(18480*B2+7520*B3+1620*B4+144*B5)"
    "-15*B2^3+3600*B2^2-28800*B2+B2*(1200*B3+90*B4)+40*B3^2-120*A2*B2*B3";

const std::array<std::string, 7> kTraceTexts = {
    "",
    expand_traces("A2"),
    expand_traces("(1/2)*(A2*(A2-2)-B2)"),
    expand_traces("(1/6)*(A2*(A2-2)*(A2-4)-3*A2*B2+12*B2+2*B3-4*A3)"),
    expand_traces("(1/24)*(A2*(A2-2)*(A2-4)*(A2-6)-6*A2^2*B2+A2*(60*B2+8*B3)-(144*B2+48*B3+6*B4)+3*B2^2)"),
    expand_traces("(1/120)*(A2*(A2-2)*(A2-4)*(A2-6)*(A2-8)-10*A2^3*B2+A2^2*(180*B2+20*B3)"
                  "-A2*(1040*B2+280*B3+30*B4)+15*A2*B2^2-B2*(120*B2+20*B3)+(1920*B2+960*B3+240*B4+24*B5))"),
    expand_traces(kTrace6Head + "-(19200*B3+7200*B4+1440*B5+120*B6))"),
};

const std::string kTrace6Printed = expand_traces(kTrace6Head + "-(19200*B3-7200*B4-1440*B5-120*B6))");

void check_index(std::size_t j, std::size_t lo) {
  if (j < lo || j > 6) throw Error("formula text index out of range: " + std::to_string(j));
}

}  // namespace

const std::string& degree_formula_text(std::size_t j) {
  check_index(j, 2);
  return kDegreeTexts[j];
}

const Expr& degree_formula_expr(std::size_t j) {
  check_index(j, 2);
  static const std::array<Expr, 7> parsed = {0, 0, parse_expr(kDegreeTexts[2]), parse_expr(kDegreeTexts[3]),
                                             parse_expr(kDegreeTexts[4]), parse_expr(kDegreeTexts[5]),
                                             parse_expr(kDegreeTexts[6])};
  return parsed[j];
}

const std::string& trace_text(std::size_t j) {
  check_index(j, 1);
  return kTraceTexts[j];
}

const std::string& trace_text_printed_6() { return kTrace6Printed; }

const Expr& trace_expr(std::size_t j) {
  check_index(j, 1);
  static const std::array<Expr, 7> parsed = {0,
                                             parse_expr(kTraceTexts[1]),
                                             parse_expr(kTraceTexts[2]),
                                             parse_expr(kTraceTexts[3]),
                                             parse_expr(kTraceTexts[4]),
                                             parse_expr(kTraceTexts[5]),
                                             parse_expr(kTraceTexts[6])};
  return parsed[j];
}

}  // namespace detail

const std::string& trace_formula_text(std::size_t j) { return detail::trace_text(j); }

// ---- methods ---------------------------------------------------------------

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kCharpoly: return "charpoly";
    case Method::kSubdivisionMatching: return "subdivision_matching";
    case Method::kDegreeFormula: return "degree_formula";
    case Method::kTraceFormula: return "trace_formula";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

Int to_integer(const Rational& r, std::string_view what) {
  if (r.get_den() != 1) throw ArithmeticError(std::string(what) + " is not integral: " + r.get_str());
  return r.get_num();
}

void require_forest(const Graph& g, Method m, std::size_t j) {
  if (!is_forest(g)) {
    throw PreconditionError(std::string(method_name(m)) + " for c_{n-" + std::to_string(j) + "} needs a forest");
  }
}

}  // namespace

Int laplacian_coefficient(Evaluator& ev, std::size_t k, Method method) {
  const Graph& g = ev.graph();
  const std::size_t n = g.order();
  if (k > n) throw PreconditionError("coefficient index " + std::to_string(k) + " exceeds n");
  const std::size_t j = n - k;
  switch (method) {
    case Method::kCharpoly:
      return ev.charpoly()[k];
    case Method::kSubdivisionMatching:
      require_forest(g, method, j);
      return ev.subdivision().invariant(InvariantId::matchings(static_cast<int>(j)));
    case Method::kDegreeFormula:
      if (j == 0) return 1;
      if (j == 1) return 2 * Int(static_cast<unsigned long>(g.size()));
      if (j <= 6) {
        if (j >= 4) require_forest(g, method, j);
        return to_integer(ev.eval(detail::degree_formula_expr(j)), "degree formula");
      }
      if (k == 0) return 0;
      if (k == 1) return Int(static_cast<unsigned long>(n)) * ev.invariant(InvariantId::simple(InvariantKind::kTau));
      if (k == 2 && is_tree(g)) return ev.invariant(InvariantId::simple(InvariantKind::kWiener));
      throw PreconditionError("degree_formula does not cover c_" + std::to_string(k) + " here");
    case Method::kTraceFormula:
      if (j == 0) return 1;
      if (j <= 6) {
        if (j >= 4) require_forest(g, method, j);
        return to_integer(ev.eval(detail::trace_expr(j)), "trace formula");
      }
      throw PreconditionError("trace_formula covers c_{n-1}..c_{n-6} only");
  }
  throw Error("unknown method");
}

Int laplacian_coefficient(const Graph& g, std::size_t k, Method method) {
  Evaluator ev(g);
  return laplacian_coefficient(ev, k, method);
}

// ---- T(k,t) ----------------------------------------------------------------

Int tkt_closed_form(std::size_t k, std::size_t t, std::size_t x) {
  // Coefficients from the highest power of q = (k-1)^t down to the constant.
  static const std::vector<std::vector<std::string>> k3 = {
      {"6", "-6"},
      {"18", "-93/2", "30"},
      {"36", "-171", "272", "-144"},
      {"54", "-405", "9177/8", "-5799/4", "687"},
      {"324/5", "-702", "12267/4", "-26967/4", "74427/10", "-3294"},
      {"324/5", "-4779/5", "23697/4", "-315711/16", "1488293/40", "-376247/10", "15932"},
  };
  static const std::vector<std::vector<std::string>> k4 = {
      {"4", "-4"},
      {"8", "-24", "18"},
      {"32/3", "-64", "392/3", "-88"},
      {"32/3", "-320/3", "1232/3", "-2132/3", "457"},
      {"128/15", "-128", "2368/3", "-2480", "19644/5", "-2484"},
      {"256/45", "-1792/15", "9664/9", "-15776/3", "661864/45", "-110756/5", "13990"},
  };
  if (k != 3 && k != 4) throw PreconditionError("tkt_closed_form supports k = 3 or 4");
  if (x < 1 || x > 6) throw PreconditionError("tkt_closed_form supports c_{n-1}..c_{n-6}");
  if (t < 1 || (x == 6 && t < 2)) throw PreconditionError("tkt_closed_form: t out of range");
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), k - 1, t);
  Rational acc = 0;
  for (const auto& c : (k == 3 ? k3 : k4)[x - 1]) {
    Rational coeff(c);
    coeff.canonicalize();
    acc = acc * q + coeff;
  }
  return to_integer(acc, "T(k,t) closed form");
}

// ---- preconditions and verdicts --------------------------------------------

bool Precondition::holds(const Graph& g) const {
  switch (kind) {
    case Kind::kAny: return true;
    case Kind::kForest: return is_forest(g);
    case Kind::kTree: return is_tree(g);
    case Kind::kGirthAtLeast5: return girth(g).at_least(5);
    case Kind::kRootedTree: {
      auto rt = recognize_rooted_tree(g);
      return rt && rt->first == arity;
    }
  }
  return false;
}

std::string Precondition::name() const {
  switch (kind) {
    case Kind::kAny: return "any";
    case Kind::kForest: return "forest";
    case Kind::kTree: return "tree";
    case Kind::kGirthAtLeast5: return "girth>=5";
    case Kind::kRootedTree: return "T(" + std::to_string(arity) + ",t)";
  }
  return "?";
}

Verdict evaluate_identity(const IdentityRecord& rec, Evaluator& ev) {
  Verdict v;
  v.graph6 = emit_graph6(ev.graph());
  if (!rec.precondition.holds(ev.graph())) return v;
  try {
    v.lhs = rec.lhs(ev);
    v.rhs = rec.rhs(ev);
  } catch (const PreconditionError&) {
    v.lhs = v.rhs = 0;
    return v;
  }
  v.precondition_met = true;
  v.equal = v.lhs == v.rhs;
  return v;
}

Verdict evaluate_identity(std::string_view id, const Graph& g) {
  Evaluator ev(g);
  return evaluate_identity(find_identity(id), ev);
}

// ---- conjecture ------------------------------------------------------------

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kEqual: return "=";
    case Relation::kGreater: return ">";
  }
  return "?";
}

ConjectureReport conjecture_bounds(Evaluator& ev) {
  ConjectureReport report;
  const Graph& g = ev.graph();
  report.girth = girth(g);
  const std::size_t n = g.order();
  for (int item = 1; item <= 3; ++item) {
    const std::size_t j = static_cast<std::size_t>(item) + 3;
    ConjectureItem it;
    it.item = item;
    it.equality_predicted = !report.girth.equals(3) && (item == 1 || !report.girth.equals(5));
    if (n >= j) {
      it.evaluated = true;
      it.lhs = ev.charpoly()[n - j];
      it.rhs = ev.eval(detail::trace_expr(j));
      const Rational lhs(it.lhs);
      it.relation = lhs < it.rhs ? Relation::kLess : lhs == it.rhs ? Relation::kEqual : Relation::kGreater;
    }
    report.items.push_back(std::move(it));
  }
  return report;
}

ConjectureReport conjecture_bounds(const Graph& g) {
  Evaluator ev(g);
  return conjecture_bounds(ev);
}

}  // namespace lapcoef
