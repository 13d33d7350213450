#include <string>

#include "formula_texts.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/formulas.hpp"
#include "lapcoef/invariants.hpp"

namespace lapcoef {

namespace {

using P = Precondition;

class Builder {
 public:
  void add(std::string id, P pre, std::string lhs, std::string rhs, std::string note = {}) {
    Expr l = parse_expr(lhs), r = parse_expr(rhs);
    out_.push_back({std::move(id), pre, std::move(lhs), std::move(rhs),
                    [l](Evaluator& ev) { return ev.eval(l); }, [r](Evaluator& ev) { return ev.eval(r); },
                    std::move(note)});
  }
  void add_custom(std::string id, P pre, std::string lhs_text, std::string rhs_text, Side lhs, Side rhs) {
    out_.push_back({std::move(id), pre, std::move(lhs_text), std::move(rhs_text), std::move(lhs), std::move(rhs), {}});
  }
  std::vector<IdentityRecord> take() { return std::move(out_); }

 private:
  std::vector<IdentityRecord> out_;
};

void low_order_coefficients(Builder& b) {
  b.add("L1.1", P::any(), "c(1)", "n*tau");
  b.add("L1.1.c0", P::any(), "c(0)", "0");
  b.add("L1.1.cn", P::any(), "cn(0)", "1");
  b.add("L1.1.cn1", P::any(), "cn(1)", "2*m");
  b.add("L1.2", P::tree(), "c(2)", "W");
  b.add("L1.3", P::tree(), "c(3)", "WW", "printed identity; contradicted by direct computation (e.g. P5: 21 vs 35)");
  b.add("L1.4", P::any(), "cn(2)", detail::degree_formula_text(2));
  b.add("L1.4.3", P::any(), "cn(3)", detail::degree_formula_text(3));
  b.add("EQ1.1", P::forest(), "cn(4)",
        "(1/24)*(4*m*(4*m^3-12*m^2+51*m-6*M1_2*m-33*M1_2+4*M1_3+3)+3*M1_2*(17*M1_2-20)+72*M1_3-54*M1_4"
        "-24*M2_1)-16*((1/2)*(((1/2)*M1_2-m)^2-(1/4)*(M1_4-2*M1_3+M1_2)))");
  b.add("EQ1.2", P::forest(), "cn(4)", detail::degree_formula_text(4));
  b.add("EQ2", P::forest(), "cn(5)", detail::degree_formula_text(5));
  for (int k = 1; k <= 6; ++k) {
    b.add("EQ3." + std::to_string(k), P::any(), std::to_string(k) + "*match(" + std::to_string(k) + ")",
          "P2(match(" + std::to_string(k - 1) + "))");
  }
}

void fifth_coefficient(Builder& b) {
  const char* ml1[] = {
      "m^2+m-M1_2",
      "m^3+M1_3-2*m*M1_2+2*M2_1+2*m^2-2*M1_2+m",
      "m^4-3*m^2*M1_2+3*m*M1_3+6*m*M2_1-M1_4-3*alpha_1_2+3*m^3-6*m*M1_2+3*M1_3+6*M2_1+3*m^2-3*M1_2+m",
      "M1_5+4*alpha_1_3-4*m*M1_4+6*M2_2-12*m*alpha_1_2+6*m^2*M1_3+12*m^2*M2_1-4*m^3*M1_2-4*M1_4"
      "-12*alpha_1_2+12*m*M1_3+24*m*M2_1-12*m^2*M1_2+6*M1_3+12*M2_1-12*m*M1_2-4*M1_2+m^5+4*m^4+6*m^3"
      "+4*m^2+m",
      "m^6+5*m^5+(10-5*M1_2)*m^4+(10+10*M1_3+20*M2_1-20*M1_2)*m^3+(5+60*M2_1-10*M1_4-30*alpha_1_2"
      "+30*M1_3-30*M1_2)*m^2+(30*M2_2-60*alpha_1_2+5*M1_5+20*alpha_1_3+30*M1_3-20*M1_2+60*M2_1-20*M1_4"
      "+1)*m+20*alpha_1_3-5*alpha_1_4-10*alpha_2_3+10*M1_3-5*M1_2+20*M2_1-10*M1_4+5*M1_5-M1_6+30*M2_2"
      "-30*alpha_1_2",
  };
  for (int k = 1; k <= 5; ++k) {
    b.add("5ML1." + std::to_string(k), P::any(), "P2(m^" + std::to_string(k) + ")", ml1[k - 1]);
  }

  b.add("5LM2.1", P::girth5(), "P2(M1_2)", "(m+3)*M1_2-M1_3-4*M2_1-2*m");
  b.add("5LM2.2", P::girth5(), "P2(M1_3)", "(m+3)*M1_3-M1_4-3*alpha_1_2+6*M2_1-4*M1_2+2*m");
  b.add("5LM2.3", P::girth5(), "P2(M1_4)", "(m+4)*M1_4-M1_5+5*M1_2-2*m-4*alpha_1_3+6*alpha_1_2-6*M1_3-8*M2_1");
  b.add("5LM2.4", P::girth5(), "P2(M2_1)", "(m-9)*M2_1-2*EM2-5*M1_3+11*M1_2+M1_4+alpha_1_2-8*m");
  b.add("5LM2.5", P::girth5(), "P2(m*M1_2)",
        "(M1_2-2)*m^2+(4*M1_2-M1_3-4*M2_1-18)*m-6*M1_3+alpha_1_2-2*beta+17*M1_2-6*M2_1+8*EM1+4*EM2"
        "-(M1_2)^2+M1_4");

  b.add("5TH2.1", P::any(), "S(match(5))",
        "(1/15)*m^2*(4*m^3-20*m^2+15*m+15)+(1/12)*m*(8*M1_3*m-8*M1_2*m^2+3*M1_2^2+36*M1_2*m-28*M1_3"
        "-24*M1_2-6*M1_4-24*M2_1)+alpha_1_2-(1/6)*M1_2*(3*M1_2+M1_3+6)+2*M2_1+(1/5)*M1_5+M1_4+M1_3");
  const char* transfers[][3] = {
      {"a", "M1_2", "M1_2+4*m"},
      {"b", "M1_3", "M1_3+8*m"},
      {"c", "M1_4", "M1_4+16*m"},
      {"d", "M1_5", "M1_5+32*m"},
      {"e", "alpha_1_2", "4*M1_2+2*M1_3"},
      {"f", "alpha_1_3", "8*M1_2+2*M1_4"},
      {"g", "beta", "2*M1_2+M1_4-M1_3"},
      {"h", "M2_1", "2*M1_2"},
      {"i", "M2_2", "4*M1_3"},
      {"j", "EM1", "M1_3"},
      {"k", "EM2", "M2_1+(1/2)*M1_4-(1/2)*M1_3"},
  };
  for (const auto& t : transfers) b.add(std::string("5TH2.2") + t[0], P::any(), std::string("S(") + t[1] + ")", t[2]);

  auto on_s = [&](const std::string& id, const std::string& f, const std::string& rhs) {
    b.add(id, P::any(), "S(P2(" + f + "))", rhs);
  };
  on_s("5TH2.3", "M1_2^2",
       "(2*m-10)*M1_2^2+(16*m^2-2*M1_3-40*m)*M1_2+32*m^3-8*m*M1_3+13*M1_3+6*M1_4+M1_5+24*M2_1+4*alpha_1_2");
  on_s("5TH2.4", "m^2*M1_2",
       "32*m^4+(8*M1_2-32)*m^3-(4*M1_3+44*M1_2-8)*m^2+(20*M1_3-4*M1_2^2+30*M1_2+4*M1_4+16*M2_1)*m"
       "+M1_3*M1_2+2*M1_2^2-7*M1_3-5*M1_2-5*M1_4-M1_5-8*M2_1-2*alpha_1_2");
  on_s("5TH2.5", "m*M1_3",
       "32*m^3+(4*M1_3-24)*m^2-(8*M1_3+16*M1_2+2*M1_4)*m+4*m-(M1_2-10)*M1_3+6*M1_2+M1_4+M1_5-6*M2_1"
       "+3*alpha_1_2");
  on_s("5TH2.6", "m*M2_1",
       "(8*M1_2+8)*m^2-(4*M1_3+10*M1_2+4*M2_1+4)*m-2*M1_2^2+2*M1_3+M1_2+2*M1_4+8*M2_1+alpha_1_2");
  on_s("5TH2.7", "EM2",
       "(1/2)*m*(4*M2_1-2*M1_3+2*M1_4+4)+(11/2)*M1_3-2*alpha_1_2-(7/2)*M1_2-(3/2)*M1_4-(1/2)*M1_5");
}

void sixth_coefficient(Builder& b) {
  b.add("6LMM0a", P::any(), "S(M1_6)", "M1_6+64*m");
  b.add("6LMM0b", P::any(), "S(alpha_1_4)", "2*M1_5+16*M1_2");
  b.add("6LMM0c", P::any(), "S(alpha_2_3)", "4*M1_4+8*M1_3");

  auto on_s = [&](const std::string& id, const std::string& f, const std::string& rhs) {
    b.add(id, P::any(), "S(P2(" + f + "))", rhs);
  };
  on_s("6LMM1.1", "m", "4*m^2-2*m-M1_2");
  on_s("6LMM1.2", "m^2", "M1_3+2*M1_2-2*m*(2*M1_2-4*m^2+4*m-1)");
  on_s("6LMM1.3", "m^3", "16*m^4-24*m^3-(12*M1_2-12)*m^2+(6*M1_3+12*M1_2-2)*m-3*M1_3-3*M1_2-M1_4");
  on_s("6LMM1.4", "m^4",
       "32*m^5-64*m^4-(32*M1_2-48)*m^3+(24*M1_3+48*M1_2-16)*m^2-(24*M1_3+24*M1_2+8*M1_4-2)*m+6*M1_3"
       "+4*M1_2+4*M1_4+M1_5");
  on_s("6LMM1.5", "m^5",
       "64*m^6-160*m^5-(80*M1_2-160)*m^4+(80*M1_3+160*M1_2-80)*m^3-(120*M1_3+120*M1_2+40*M1_4-20)*m^2"
       "+(60*M1_3+40*M1_2+40*M1_4+10*M1_5-2)*m-10*M1_3-5*M1_2-10*M1_4-5*M1_5-M1_6");
  on_s("6LMM2.1", "M1_2", "(2*m-5)*M1_2+8*m^2-M1_3");
  on_s("6LMM2.2", "M1_3", "16*m^2+(2*M1_3-4)*m-3*M1_3-4*M1_2-M1_4");
  on_s("6LMM2.3", "M1_4", "(2*m-4)*M1_4+32*m^2+6*M1_3-19*M1_2-M1_5");
  on_s("6LMM2.4", "M2_1", "4*m*M1_2-2*M1_3-3*M1_2-2*M2_1+4*m");
  on_s("6LMM2.5", "m*M1_2", "16*m^3+(4*M1_2-8)*m^2-(2*M1_3+16*M1_2)*m-M1_2^2+4*M1_3+5*M1_2+4*M2_1+M1_4");
  on_s("6LMM3", "M1_5", "2*m*M1_5+64*m^2-M1_6-4*m-5*M1_5+10*M1_4-10*M1_3-26*M1_2");
  on_s("6LMM4", "m^3*M1_2",
       "64*m^5+(16*M1_2-96)*m^4+(-8*M1_3-112*M1_2+48)*m^3+(-12*M1_2^2+72*M1_3+120*M1_2+12*M1_4+48*M2_1"
       "-8)*m^2+(12*M1_2^2+(6*M1_3-44)*M1_2-54*M1_3-48*M2_1-34*M1_4-6*M1_5-12*alpha_1_2)*m-3*M1_2^2"
       "+(-3*M1_3-M1_4+5)*M1_2+10*M1_3+12*M2_1+12*M1_4+6*M1_5+M1_6+6*alpha_1_2+2*alpha_1_3");
  on_s("6LMM5", "m^2*M1_3",
       "64*m^4+(8*M1_3-80)*m^3+(-20*M1_3-48*M1_2-4*M1_4+32)*m^2+((-4*M1_2+50)*M1_3+40*M1_2-24*M2_1"
       "+4*M1_4+4*M1_5+12*alpha_1_2-4)*m+M1_3^2+(2*M1_2-19)*M1_3-8*M1_2+12*M2_1-8*M1_4-2*M1_5-M1_6"
       "-6*M2_2-3*alpha_1_2");
  on_s("6LMM6", "m*M1_4",
       "(4*M1_4+64*m)*m^2-32*m^2+(12*M1_3-54*M1_2-10*M1_4-2*M1_5)*m+(4-M1_2)*M1_4+9*M1_3+19*M1_2"
       "+8*M2_1+M1_5+M1_6-6*alpha_1_2+4*alpha_1_3");
  on_s("6LMM7", "alpha_1_2", "2*(4*M1_2+2*M1_3)*m-9*M1_3+M1_2-2*M1_4-6*M2_1-alpha_1_2+4*m");
  on_s("6LMM8", "m*M1_2^2",
       "64*m^4+(32*M1_2-32)*m^3+(4*M1_2^2-16*M1_3-112*M1_2)*m^2+(-30*M1_2^2+(-4*M1_3+40)*M1_2+58*M1_3"
       "+80*M2_1+20*M1_4+2*M1_5+8*alpha_1_2)*m-M1_2^3+10*M1_2^2+(8*M1_3+8*M2_1+2*M1_4)*M1_2-13*M1_3"
       "-24*M2_1-15*M1_4-7*M1_5-M1_6-20*alpha_1_2-4*alpha_1_3");
  on_s("6LMM9", "M1_2*M1_3",
       "64*m^3+(8*M1_3+16*M1_2-16)*m^2+((2*M1_3-60)*M1_2-20*M1_3-4*M1_4)*m-4*M1_2^2+(-8*M1_3-M1_4+10)"
       "*M1_2-M1_3^2+17*M1_3+2*alpha_1_3+10*M2_1+13*M1_4+3*M1_5+M1_6+6*M2_2+6*alpha_1_2");

  b.add("6LMM10", P::any(), "P2(M1_2^2)",
        "(m+6)*M1_2^2+(-2*M1_3-4*m-8*M2_1-12)*M1_2+M1_3+M1_5+2*M2_2-6*alpha_1_2+4*alpha_1_3+4*m+26*M2_1"
        "-2*M1_4+8*Theta1-24*Theta2+8*Theta3+4*Theta4");
  b.add("6LMM11", P::any(), "P2(m*M1_3)",
        "(M1_3+2)*m^2+(4*M1_3-3*alpha_1_2-4*M1_2+6*M2_1-M1_4+2)*m+(-M1_2+4)*M1_3-9*alpha_1_2+alpha_1_3"
        "-6*M1_2+14*M2_1-6*Theta2+3*Theta4-M1_4+M1_5+6*M2_2");
  b.add("6LMM12", P::any(), "P2(m^2*M1_2)",
        "(M1_2-2)*m^3+(-M1_3+5*M1_2-4*M2_1-4)*m^2+(-2*M1_2^2-4*M1_3+11*M1_2+2*M1_4-20*M2_1+6*alpha_1_2"
        "+8*Theta2-2)*m-2*M1_2^2+(M1_3+2*M2_1+7)*M1_2-5*M1_3+11*alpha_1_2-4*alpha_1_3-2*Theta4-20*M2_1"
        "-8*Theta1+8*Theta2+3*M1_4-M1_5-2*M2_2");
  b.add("6LMM13", P::any(), "EM2", "alpha_1_2-6*M2_1+(1/2)*M1_4-(5/2)*M1_3+6*M1_2-4*m+Theta2");
  b.add("6LMM14", P::any(), "P2(Theta2)", "(m+2)*Theta2-Theta1-Theta4-2*Theta3+Theta3p");
  b.add("6LMM15", P::any(), "P2(m*M2_1)",
        "m^2*M2_1+(2*M2_1-2*Theta2-alpha_1_2+Theta2p)*m-(M1_2-1)*M2_1+Theta2p+2*Theta1-4*Theta2+2*Theta3"
        "+Theta4+Theta5");
  b.add("6LMM16", P::any(), "P2(alpha_1_2)", "(m+1)*alpha_1_2-2*M2_2-alpha_1_3+Theta3p-Theta3pp-2*Theta6");
  b.add("6LMM17", P::any(), "beta", "alpha_1_2+M1_4-3*M1_3+2*M1_2-2*M2_1");

  b.add("DAS1", P::girth5(), "match(5)",
        "(1/120)*(m*(m^4+10*m^3+43*m^2+54*m-328)+30*M1_2^2-12*alpha_1_2*(m-7)-20*alpha_1_3"
        "-2*M1_2*(2*m^3+30*m^2+61*m-225)+12*beta+2*M2_1*(6*m^2+66*m-239)+M1_3*(6*m^2+24*m-149)"
        "+2*M1_4*(m+10)+6*M2_2-EM2-5*M1_5+3*P2(M1_2^2)+8*P2(m*M1_3)-6*P2(m^2*M1_2)-P2(EM2)+P2(m*M2_1))");
  b.add("THE1", P::girth5(), "match(5)",
        "(1/120)*(m^5+10*m^4-(10*M1_2-55)*m^3+(60*M2_1-90*M1_2+20*M1_3+190)*m^2+(15*M1_2^2+140*M1_3"
        "-376*M1_2-30*M1_4+492*M2_1-120*alpha_1_2-120*Theta2+24*Theta2p+336)*m+60*M1_2^2-(60*M2_1"
        "+20*M1_3+768)*M1_2-120*M1_4+24*M1_5+120*M2_2-504*alpha_1_2+96*alpha_1_3+24*Theta2p-48*Theta3p"
        "+96*Theta4+24*Theta3pp+336*M1_3+1440*M2_1+132*Theta1-600*Theta2+120*Theta3+24*Theta5+48*Theta6)");

  const char* thetas[][2] = {
      {"Theta1", "2*(M2_1+M1_3-M1_2)"},
      {"Theta2", "M2_1+2*M1_2-4*m"},
      {"Theta2p", "3*M1_2-4*m"},
      {"Theta3", "4*M2_1-2*M1_2"},
      {"Theta3p", "2*M2_1+M1_2-4*m"},
      {"Theta3pp", "alpha_1_2+4*M1_2-M1_3-8*m"},
      {"Theta4", "alpha_1_2+8*M1_2-16*m"},
      {"Theta5", "4*M1_2+2*M1_4-2*M1_3"},
      {"Theta6", "4*M2_1+2*M1_3-4*M1_2"},
  };
  for (int i = 0; i < 9; ++i) {
    b.add("6LMM18." + std::to_string(i + 1), P::any(), std::string("S(") + thetas[i][0] + ")", thetas[i][1]);
  }

  on_s("6LMM19", "Theta2", "(4*M1_2+2*M2_1+4)*m-8*m^2-2*M1_3+3*M1_2-6*M2_1-alpha_1_2");
  const char* l20[][2] = {
      {"Theta1", "(4*M1_3-4*M1_2+4*M2_1-8)*m-2*M1_3+10*M1_2-2*M1_4-4*alpha_1_2"},
      {"Theta2p", "(6*M1_2+8)*m-8*m^2-3*M1_3-M1_2-4*M2_1"},
      {"Theta3", "(8*M2_1-4*M1_2-4)*m+2*M1_3+6*M1_2-4*M2_1-4*alpha_1_2-2*Theta2+Theta2p"},
      {"Theta3p", "2*m*(2*M2_1+M1_2-4*m)-M1_3+6*M1_2-6*M2_1-2*alpha_1_2-Theta2p"},
      {"Theta3pp",
       "(8*M1_2-2*M1_3+2*alpha_1_2+4)*m-16*m^2-M1_3+3*M1_2-2*M2_1+M1_4-2*M2_2-2*alpha_1_2-alpha_1_3"
       "-3*Theta2p"},
      {"Theta4", "(16*M1_2+2*alpha_1_2+12)*m-32*m^2-7*M1_3+11*M1_2-14*M2_1-2*M2_2-3*alpha_1_2-alpha_1_3"},
      {"Theta5", "(4*M1_4-4*M1_3+8*M1_2+16)*m+13*M1_3-18*M1_2-8*M2_1-5*M1_4-2*M1_5+alpha_1_2-alpha_1_3"},
      {"Theta6", "(4*M1_3-8*M1_2+8*M2_1-12)*m+M1_3+13*M1_2+2*M2_1-2*M1_4-7*alpha_1_2"},
      {"m*Theta2",
       "(8*M1_2+4*M2_1+16)*m^2-16*m^3+(4*M1_2-4*M1_3-10*M2_1-2*alpha_1_2-2*Theta2p-4)*m-2*M1_2^2"
       "-(M2_1+4)*M1_2-2*M1_3+8*M2_1+2*Theta2+2*M1_4+3*alpha_1_2+alpha_1_3+Theta2p"},
      {"m*Theta2p",
       "(12*M1_2+24)*m^2-16*m^3-(6*M1_3+4*M1_2+8*M2_1+8)*m-3*M1_2^2-3*M1_2+12*M2_1+3*M1_4+2*alpha_1_2"},
  };
  for (int i = 0; i < 10; ++i) on_s("6LMM20." + std::to_string(i + 1), l20[i][0], l20[i][1]);
  const char* l21[][2] = {
      {"alpha_1_3", "(16*M1_2+4*M1_4+20)*m+4*M1_3-17*M1_2-14*M2_1-7*M1_4-2*M1_5-alpha_1_3"},
      {"m*alpha_1_2",
       "(8*M1_3+16*M1_2+8)*m^2-(22*M1_3+6*M1_2+12*M2_1+4*M1_4+2*alpha_1_2+4)*m-4*M1_2^2-(2*M1_3+3)*M1_2"
       "+9*M1_3+4*M2_1+6*M1_4+2*M1_5+2*M2_2+9*alpha_1_2"},
      {"M1_2*M2_1",
       "(4*m-13)*M1_2^2+(16*m^2-4*M1_3-2*M2_1-8*m-10)*M1_2+16*m^2-(8*M1_3+8*M2_1)*m+6*M1_3+18*M2_1"
       "+4*Theta2+6*M1_4+2*M1_5+10*alpha_1_2+alpha_1_3"},
      {"m^2*M2_1",
       "(16*M1_2+16)*m^3-(8*M1_3+28*M1_2+8*M2_1+16)*m^2+(8*M1_3-8*M1_2^2+8*M1_2+8*M1_4+32*M2_1"
       "+4*alpha_1_2+4)*m+4*M1_2^2+(2*M1_3+1)*M1_2-14*M2_1-4*M1_4-2*M1_5-5*alpha_1_2-alpha_1_3"},
      {"M2_2", "(8*m-9)*M1_3-8*m+12*M1_2-4*M1_4-3*alpha_1_2"},
  };
  for (int i = 0; i < 5; ++i) on_s("6LMM21." + std::to_string(i + 1), l21[i][0], l21[i][1]);

  const std::string& c6 = detail::degree_formula_text(6);
  b.add("66TH1", P::any(), "S(match(6))", c6);
  for (int k = 0; k <= 6; ++k) {
    b.add("66TH2." + std::to_string(k), P::forest(), "cn(" + std::to_string(k) + ")",
          "S(match(" + std::to_string(k) + "))");
  }
  b.add("66TH3", P::forest(), "cn(6)", c6);

  const std::string cor1_head =
      "(1/720)*((8*(n-1)*(8*n^5-100*n^4+410*n^3-635*n^2+355*n-98))-240*M1_2*M1_3*n+1440*alpha_1_2*n"
      "+288*M1_5*n+9420*M1_2*n-1170*M1_2^2*n+2340*M1_4*n+6480*M2_1*n+6960*M1_3*n-1440*M2_1*n^2"
      "+180*M1_2^2*n^2-360*M1_4*n^2+320*M1_3*n^3-2880*M1_3*n^2-240*M1_2*n^4+2640*M1_2*n^3-8820*M1_2*n^2"
      "+360*M1_2*M2_1+90*M1_2*M1_4+840*M1_2*M1_3-15*M1_2^3+40*M1_3^2+1530*M1_2^2-720*Theta2-120*M1_6"
      "-720*M2_2-3920*M1_3-3060*M1_4-4320*M2_1-2280*M1_2";
  b.add("COR1", P::tree(), "cn(6)", cor1_head + "-720*alpha_1_2-1008*M1_5-3600*alpha_1_2)",
        "printed form; the first alpha_1_2 term should be alpha_1_3");
  b.add("COR1.fix", P::tree(), "cn(6)", cor1_head + "-720*alpha_1_3-1008*M1_5-3600*alpha_1_2)");
}

void line_graph_census(Builder& b) {
  b.add("TTLM0.1", P::any(), "count(P3)", "L(m)");
  b.add("TTLM0.2", P::any(), "M1_2", "2*(m+L(m))");
  b.add("TTLM0.3", P::any(), "M1_3", "2*(m+3*L(m)+3*L(t)-3*t)");
  b.add("TTLM00.i", P::forest(), "M1_4", "L(walks(4))+2*m+12*L(m)+36*L(t)-4*L(2,m)");
  b.add("TTLM00.ii", P::forest(), "M1_5", "L(walks(5))+5*M1_4-5*M1_3-15*M1_2+12*m-5*alpha_1_2+30*M2_1");
  b.add("TTLM00.iii", P::forest(), "M1_6",
        "L(walks(6))-56*L(m)+6*M1_5-6*alpha_1_3-6*M2_2-60*m-9*M1_3-9*M1_4+61*M1_2-102*M2_1"
        "+42*alpha_1_2-6*Theta2-12*L(2,m)-6*L(t)");
  b.add("TTLM4.1", P::any(), "M2_1", "(1/2)*L(M1_2)-(1/2)*M1_3+2*M1_2-2*m");
  b.add("TTLM4.2", P::any(), "EM2", "(1/2)*L(2,M1_2)+L(-(1/2)*M1_3+2*M1_2-2*m)");
  b.add("TTLM4.3", P::any(), "alpha_1_2", "(1/3)*L(M1_3)-(1/3)*M1_4+2*M1_3+4*M2_1-4*M1_2+(8/3)*m");
  b.add("TTLM4.4", P::any(), "Theta2",
        "(1/2)*L(2,M1_2)+L(-(5/6)*M1_3+2*M1_2-2*m)-(1/6)*M1_4+(1/2)*M1_3+2*M2_1-2*M1_2+(4/3)*m");

  b.add("TTEQ3", P::any(), "walks(4)", "2*m+4*count(P3)+8*count(C4)");
  b.add("TTEQ31", P::any(), "walks(5)", "30*t+10*count(C5)+10*count(paw)");
  b.add("TTEQ32", P::any(), "walks(6)",
        "2*m+12*count(P3)+6*count(P4)+12*count(S4)+24*t+48*count(C4)+36*count(K4e)+12*count(C4p)"
        "+12*count(C6)+24*count(bowtie)");
  b.add("TTEQ4", P::forest(), "L(count(C4))", "(3/24)*(M1_4-2*m-14*L(m)-36*L(t))");

  b.add("TTTTEQ0", P::forest(), "L(count(P4))",
        "Theta2+alpha_1_2-8*M2_1+6*M1_2+(1/2)*M1_4-(7/2)*M1_3-3*L(t)+9*L(m)");
  b.add("TTTTEQ1", P::forest(), "L(count(S4))",
        "(1/6)*M1_4+(1/2)*alpha_1_2-(3/2)*M1_3-3*M2_1+(13/3)*M1_2-4*m");
  b.add("TTTTEQ2", P::forest(), "L(count(C4))", "(3/24)*(M1_4-6*M1_3+11*M1_2-12*m)");
  b.add("TTTTEQ3", P::forest(), "L(count(K4e))", "2*L(count(C4))");
  b.add("TTTTEQ4.paw", P::forest(), "L(count(paw))",
        "(1/2)*M1_4+(1/2)*alpha_1_2-(7/2)*M1_3-3*M2_1+8*M1_2-8*m");
  b.add("TTTTEQ4.C5", P::forest(), "L(count(C5))", "(12/120)*(M1_5-10*M1_4+35*M1_3-50*M1_2+48*m)");
  b.add("TTTTEQ5", P::forest(), "L(count(C4p))",
        "(1/2)*M1_5+(1/2)*alpha_1_3-(11/2)*M1_4-3*alpha_1_2+(41/2)*M1_3-(67/2)*M1_2+11*M2_1+30*m");
  b.add("TTTTEQ6", P::forest(), "L(count(C6))",
        "(1/12)*M1_6-(5/4)*M1_5+(85/12)*M1_4-(75/4)*M1_3+(137/6)*M1_2-20*m");
  b.add("TTTTEQ7", P::forest(), "L(count(bowtie))",
        "(1/4)*M2_2-(3/4)*alpha_1_2+(39/8)*M1_3+(9/4)*M2_1-(31/4)*M1_2+7*m+(1/8)*M1_5-(5/4)*M1_4");

  b.add("TRACE.1", P::any(), "cn(1)", detail::trace_text(1));
  b.add("TRACE.1.2", P::any(), "cn(2)", detail::trace_text(2));
  b.add("TRACE.2", P::any(), "cn(3)", detail::trace_text(3));
  b.add("TRACE.3", P::forest(), "cn(4)", detail::trace_text(4));
  b.add("TRACE.4", P::forest(), "cn(5)", detail::trace_text(5));
  b.add("TRACE.5", P::forest(), "cn(6)", detail::trace_text_printed_6(),
        "printed form; the final trace group needs all plus signs");
  b.add("TRACE.5.fix", P::forest(), "cn(6)", detail::trace_text(6));
}

// Side evaluated from the (k, t) shape of a recognised T(k,t).
Side tkt_side(std::size_t k, std::size_t min_t, std::function<Rational(Evaluator&, std::size_t)> f) {
  return [k, min_t, f = std::move(f)](Evaluator& ev) {
    auto rt = recognize_rooted_tree(ev.graph());
    if (!rt || rt->first != k || rt->second < min_t) throw PreconditionError("not T(k,t) in range");
    return f(ev, rt->second);
  };
}

Rational power(std::size_t base, std::size_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return Rational(r);
}

void rooted_trees(Builder& b) {
  for (std::size_t k : {3, 4}) {
    const std::string ks = std::to_string(k);
    const std::string q = k == 3 ? "2^t" : "3^t";
    for (std::size_t x = 1; x <= 6; ++x) {
      Expr lhs = parse_expr("cn(" + std::to_string(x) + ")");
      b.add_custom("TKT." + ks + "." + std::to_string(x), P::rooted_tree(k), lhs.to_string(),
                   "closed form in " + q, tkt_side(k, x == 6 ? 2 : 1, [lhs](Evaluator& ev, std::size_t) {
                     return ev.eval(lhs);
                   }),
                   tkt_side(k, x == 6 ? 2 : 1, [k, x](Evaluator&, std::size_t t) {
                     return Rational(tkt_closed_form(k, t, x));
                   }));
    }
    auto n_of = [k](std::size_t t) -> Rational { return (Rational(static_cast<unsigned long>(k)) * power(k - 1, t) - 2) / Rational(static_cast<unsigned long>(k - 2)); };
    auto m1k = [k](std::size_t t) -> Rational { return Rational(static_cast<unsigned long>(k)) * power(k - 1, t - 1); };
    auto p11 = [k](std::size_t t) -> Rational {
      return Rational(static_cast<unsigned long>(k)) * power(k - 1, t - 2) *
             Rational(static_cast<unsigned long>((k - 1) * (k - 2) / 2));
    };
    auto stat = [&](const std::string& name, const std::string& lhs_text, const std::string& rhs_text,
                    std::function<Rational(Evaluator&, std::size_t)> rhs) {
      Expr lhs = parse_expr(lhs_text);
      b.add_custom("TKT." + ks + "." + name, P::rooted_tree(k), lhs_text, rhs_text,
                   tkt_side(k, 2, [lhs](Evaluator& ev, std::size_t) { return ev.eval(lhs); }),
                   tkt_side(k, 2, std::move(rhs)));
    };
    stat("n", "n", "(k(k-1)^t-2)/(k-2)", [=](Evaluator&, std::size_t t) -> Rational { return n_of(t); });
    stat("m1k", "mij(1," + ks + ")", "k(k-1)^(t-1)", [=](Evaluator&, std::size_t t) -> Rational { return m1k(t); });
    stat("mkk", "mij(" + ks + "," + ks + ")", "n-1-m_{1,k}",
         [=](Evaluator&, std::size_t t) -> Rational { return n_of(t) - 1 - m1k(t); });
    stat("p1k", "p3ij(1," + ks + ")", "m_{1,k}", [=](Evaluator&, std::size_t t) -> Rational { return m1k(t); });
    stat("p11", "p3ij(1,1)", "k(k-1)^(t-2)*C(k-1,2)", [=](Evaluator&, std::size_t t) -> Rational { return p11(t); });
    const Expr half_m1 = parse_expr("(1/2)*M1_2");
    stat("pkk", "p3ij(" + ks + "," + ks + ")", "(1/2)*M1_2-n+1-P3^{1,1}-P3^{1,k}",
         [=](Evaluator& ev, std::size_t t) -> Rational { return ev.eval(half_m1) - n_of(t) + 1 - p11(t) - m1k(t); });
  }
}

}  // namespace

const std::vector<IdentityRecord>& identity_catalog() {
  static const std::vector<IdentityRecord> catalog = [] {
    Builder b;
    low_order_coefficients(b);
    fifth_coefficient(b);
    sixth_coefficient(b);
    line_graph_census(b);
    rooted_trees(b);
    return b.take();
  }();
  return catalog;
}

const IdentityRecord& find_identity(std::string_view id) {
  for (const auto& r : identity_catalog()) {
    if (r.id == id) return r;
  }
  throw Error("unknown identity: " + std::string(id));
}

namespace {

// Exact id, or a prefix ending where a sub-item begins ("66TH2" -> "66TH2.3",
// "5TH2.2" -> "5TH2.2e"), so "6LMM1" does not pick up "6LMM10".
bool selector_matches(const std::string& sel, const std::string& id) {
  if (sel == "all" || sel == id) return true;
  if (id.size() <= sel.size() || !id.starts_with(sel)) return false;
  const char next = id[sel.size()];
  return next == '.' || (next >= 'a' && next <= 'z');
}

}  // namespace

std::vector<const IdentityRecord*> select_identities(const std::vector<std::string>& selectors) {
  const auto& cat = identity_catalog();
  for (const auto& s : selectors) {
    bool hit = false;
    for (const auto& r : cat) hit = hit || selector_matches(s, r.id);
    if (!hit) throw Error("no identity matches selector: " + s);
  }
  std::vector<const IdentityRecord*> out;
  for (const auto& r : cat) {
    bool take = selectors.empty();
    for (const auto& s : selectors) take = take || selector_matches(s, r.id);
    if (take) out.push_back(&r);
  }
  return out;
}

}  // namespace lapcoef
