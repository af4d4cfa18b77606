#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support.hpp"

namespace symcon {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::string& script, RunOptions options = {}) {
  std::ostringstream out, err;
  const int code = run_script(script, options, out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError("none", 0, 0);
}

TEST(Parser, IdealStatement) {
  const auto script = parse_input("ring x y; ideal I = x^2 - y, x*y;");
  EXPECT_EQ(script.ring->names(), (std::vector<std::string>{"x", "y"}));
  const auto& i = std::get<Ideal>(script.lookup("I"));
  EXPECT_EQ(i.size(), 2u);
  EXPECT_EQ(i.generators()[0], test::poly(script.ring, "x^2 - y"));
  EXPECT_TRUE(script.commands.empty());
}

TEST(Parser, PointsStatement) {
  const auto script = parse_input("ring x y; points P = (0,0); (1,1);");
  const auto& p = std::get<PointSet>(script.lookup("P"));
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.points()[1], (Point{1, 1}));
  const auto signed_script = parse_input("ring x y; points P = (-1/2, 3); (2/4, -0);");
  EXPECT_EQ(std::get<PointSet>(signed_script.lookup("P")).points()[0], (Point{make_rational(-1, 2), 3}));
}

TEST(Parser, ArrangementStatement) {
  const auto script = parse_input("ring x y z; arrangement A = prime(y, z), prime(x, z), prime(x, y);");
  const auto& a = std::get<DecomposedRadical>(script.lookup("A"));
  EXPECT_EQ(a.primes().size(), 3u);
  EXPECT_EQ(a.max_codimension(), 2u);
}

TEST(Parser, DerivedIdeals) {
  const auto script = parse_input(
      "ring x y z; ideal I = x*y, x*z, y*z; ideal J = power(I, 2);"
      "arrangement A = prime(y, z), prime(x, z), prime(x, y); ideal S = sympower(A, 2);");
  const auto& s = std::get<Ideal>(script.lookup("S"));
  const auto& j = std::get<Ideal>(script.lookup("J"));
  const auto xyz = test::poly(script.ring, "x*y*z");
  EXPECT_TRUE(s.contains(xyz));
  EXPECT_FALSE(j.contains(xyz));
}

TEST(Parser, Commands) {
  const auto script = parse_input(
      "ring x y;\n"
      "ideal I = x, y;\n"
      "points P = (0, 0);\n"
      "gb I --order lex;\n"
      "member x*y in I;\n"
      "power I 2;\n"
      "sympower P 3;\n"
      "containment P --els --pmax 2;\n"
      "lengths P --pmax 4;\n");
  ASSERT_EQ(script.commands.size(), 6u);
  EXPECT_EQ(std::get<GbCommand>(script.commands[0]).order, MonomialOrder::lex());
  EXPECT_EQ(std::get<PowerCommand>(script.commands[2]).p, 2u);
  const auto& c = std::get<ContainmentCommand>(script.commands[4]);
  EXPECT_TRUE(c.els);
  EXPECT_EQ(c.p_max, 2u);
  EXPECT_EQ(std::get<LengthsCommand>(script.commands[5]).p_max, 4u);
}

TEST(Parser, OperatorPrecedence) {
  const RingPtr r = test::ring({"x", "y"});
  EXPECT_EQ(parse_polynomial("-x^2", r), test::poly(r, "-1*x*x"));
  EXPECT_EQ(parse_polynomial("2*x + 3*y*x - (x - y)^2", r), test::poly(r, "2*x + 5*x*y - x^2 - y^2"));
  EXPECT_EQ(parse_polynomial("1/2*x - -y", r), test::poly(r, "y + 1/2*x"));
  EXPECT_EQ(parse_polynomial("x^0", r), test::poly(r, "1"));
  EXPECT_EQ(parse_polynomial("(x)", r), test::poly(r, "x"));
  EXPECT_EQ(parse_polynomial("6/4", r).to_string(), "3/2");
}

TEST(Parser, DanglingOperator) {
  const ParseError e = parse_error("ideal I = x^2 -;");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 1u);  // no ring declared yet
  const ParseError d = parse_error("ring x y; ideal I = x^2 -;");
  EXPECT_EQ(d.line(), 1u);
  EXPECT_EQ(d.column(), 25u);
  EXPECT_NE(std::string(d.what()).find("'-'"), std::string::npos);
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
  const char* fragment;
};

// Each entry points at the first offending token.
TEST(Parser, ErrorPositions) {
  const std::vector<BadInput> corpus{
      {"ring x y; ideal I = x^2 -;", 1, 25, "missing its right operand"},
      {"ring x y; ideal I = x*;", 1, 22, "missing its right operand"},
      {"ring x y; ideal I = 2x;", 1, 22, "implicit multiplication"},
      {"ring x y; ideal I = x y;", 1, 23, "implicit multiplication"},
      {"ring x y; ideal I = x(y);", 1, 22, "implicit multiplication"},
      {"ring x y; ideal I = 1.5*x;", 1, 22, "unexpected character '.'"},
      {"ring x y; ideal I = w;", 1, 21, "unknown variable 'w'"},
      {"ring x y; ideal I = x^-1;", 1, 22, "non-negative integer exponent"},
      {"ring x y; ideal I = x^2^3;", 1, 24, "chained"},
      {"ring x y; ideal I = (x + y;", 1, 27, "expected ')'"},
      {"ring x y; ideal I = x/2;", 1, 22, "unexpected '/'"},
      {"ring x y; ideal I = 1/0;", 1, 23, "zero denominator"},
      {"ring x y; ideal I = x", 1, 22, "expected ';'"},
      {"ring x y;\nideal I = x;\nideal I = y;", 3, 7, "already bound"},
      {"ring x y;\ngb J;", 2, 4, "unbound name 'J'"},
      {"ring x y;\npoints P = (0, 0, 1);", 2, 12, "3 coordinates"},
      {"ring x y;\npoints P = (0, 0); (0, 0);", 2, 20, "duplicate point"},
      {"ring x y;\nideal x = y;", 2, 7, "ring variable"},
      {"ring x ideal;", 1, 8, "reserved"},
      {"ring x x;", 1, 8, "duplicate variable"},
      {"ring;", 1, 5, "at least one variable"},
      {"ideal I = x;", 1, 1, "expected 'ring'"},
      {"ring x; ring y;", 1, 9, "already declared"},
      {"ring x y; frobnicate;", 1, 11, "unknown statement"},
      {"ring x y; ideal I = x; gb I --order deglex;", 1, 37, "unknown order"},
      {"ring x y; ideal I = x; gb I --sort lex;", 1, 29, "unknown option"},
      {"ring x y; points P = (0,0); containment P;", 1, 42, "requires --pmax"},
      {"ring x y; points P = (0,0); containment P --pmax 0;", 1, 50, "between 1"},
      {"ring x y; ideal I = x; containment I --pmax 2;", 1, 36, "is an ideal"},
      {"ring x y; points P = (0,0); gb P;", 1, 32, "is not an ideal"},
      {"ring x y; ideal I = x; lengths I --pmax 2;", 1, 32, "not a point set"},
      {"ring x y; ideal I = x; member x in J;", 1, 36, "unbound name 'J'"},
      {"ring x y; ideal I = x; member x of I;", 1, 33, "expected 'in'"},
      {"ring x y; ideal I = x; power I;", 1, 31, "expected exponent"},
      {"ring x y; arrangement A = prime(x^2);", 1, 27, "degree-1"},
      {"ring x y; arrangement A = prime(x), prime(x, y);", 1, 37, "components must be minimal"},
      {"ring x y; arrangement A = prime(x, y, x + y);", 1, 27, "not independent"},
      {"ring x y;\n  ideal I = x +\n\n   ;", 2, 15, "missing its right operand"},
      {"ring x y; ideal I = x; # comment\n gb I --order", 2, 14, "expected an order name"},
  };
  for (const auto& c : corpus) {
    const ParseError e = parse_error(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text << "\n" << e.what();
    EXPECT_EQ(e.column(), c.column) << c.text << "\n" << e.what();
    EXPECT_NE(std::string(e.message()).find(c.fragment), std::string::npos) << c.text << "\n" << e.what();
  }
}

TEST(Session, GbPrintsMonicBasis) {
  const Outcome r = run("ring x y; ideal I = 2*x; gb I;");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x\n");
  EXPECT_EQ(run("ring x y; ideal I = x - y, y^2 - y; gb I --order lex;").out, "y^2 - y\nx - y\n");
}

TEST(Session, MemberInSquareOfAxes) {
  const Outcome r = run("ring x y z; ideal I = x*y, x*z, y*z; ideal I2 = power(I, 2); member x*y*z in I2;");
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run("ring x y z; ideal I = x*y, x*z, y*z; member x*y*z in I;").out, "true\n");
}

TEST(Session, LengthsRatioColumnForOnePoint) {
  const Outcome r = run("ring x y; points P = (0, 0); lengths P --pmax 4;");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "lengths P: n = 2, N = 1, r = 2, q = 1");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 20), "p  l_sym  l_ord  rat");
  std::vector<std::string> ratios;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string p, sym, ord, ratio;
    fields >> p >> sym >> ord >> ratio;
    ratios.push_back(ratio);
  }
  EXPECT_EQ(ratios, (std::vector<std::string>{"2/1", "3/2", "4/3", "5/4"}));
}

TEST(Session, ContainmentTable) {
  const Outcome r = run("ring x y z; arrangement A = prime(y, z), prime(x, z), prime(x, y); containment A --pmax 2;");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("containment A: n = 3, r = 3, q = 2"), std::string::npos);
  EXPECT_NE(r.out.find("probe      1  I^(2)  I^1  no        yes    -"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("skoda      2  I^(4)  I^2  yes       yes    -"), std::string::npos) << r.out;
}

TEST(Session, ParseErrorsExitWithTwo) {
  const Outcome parse = run("ring x y; ideal I = x^2 -;");
  EXPECT_EQ(parse.code, 2);
  EXPECT_EQ(parse.out, "");
  EXPECT_EQ(parse.err, "parse error at 1:25: operator '-' is missing its right operand\n");
}

TEST(Session, ViolationsSetExitCodeOne) {
  ContainmentReport report;
  report.asserted = true;
  report.holds = false;
  EXPECT_TRUE(report.violates_theorem());
  report.asserted = false;
  EXPECT_FALSE(report.violates_theorem());
}

using Json = nlohmann::json;

std::vector<std::string> keys(const nlohmann::ordered_json& object) {
  std::vector<std::string> out;
  for (auto it = object.begin(); it != object.end(); ++it) out.push_back(it.key());
  return out;
}

TEST(Session, JsonSchemaIsFixed) {
  const std::string script =
      "ring x y; ideal I = x, y; points P = (0, 0); (1, 1);"
      "gb I; member x in I; power I 2; sympower P 2; containment P --pmax 1 --els; lengths P --pmax 2;";
  const Outcome r = run(script, {.json = true});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(keys(doc), (std::vector<std::string>{"ring", "results", "violations"}));
  const auto& results = doc["results"];
  ASSERT_EQ(results.size(), 6u);
  EXPECT_EQ(keys(results[0]), (std::vector<std::string>{"command", "ideal", "order", "basis"}));
  EXPECT_EQ(keys(results[1]), (std::vector<std::string>{"command", "polynomial", "ideal", "member"}));
  EXPECT_EQ(keys(results[2]), (std::vector<std::string>{"command", "ideal", "p", "generators"}));
  EXPECT_EQ(keys(results[3]), (std::vector<std::string>{"command", "target", "p", "generators"}));
  EXPECT_EQ(keys(results[4]),
            (std::vector<std::string>{"command", "target", "n", "r", "q", "max_codimension", "cells"}));
  EXPECT_EQ(keys(results[4]["cells"][0]),
            (std::vector<std::string>{"kind", "p", "lhs", "rhs", "asserted", "holds", "witness",
                                      "lhs_generators", "rhs_generators", "rhs_basis_size"}));
  EXPECT_EQ(keys(results[5]), (std::vector<std::string>{"command", "points", "n", "N", "r", "q", "rows"}));
  EXPECT_EQ(keys(results[5]["rows"][0]),
            (std::vector<std::string>{"p", "l_sym", "l_ord", "ratio", "lower", "upper",
                                      "length_formula", "sandwich"}));
  EXPECT_EQ(results[5]["rows"][1]["ratio"], "3/1");
  EXPECT_EQ(doc["violations"], 0);

  const Outcome timed = run(script, {.json = true, .timings = true});
  const auto timed_doc = nlohmann::ordered_json::parse(timed.out);
  EXPECT_TRUE(timed_doc["results"][4]["cells"][0].contains("timings"));
}

TEST(Session, JsonIsDeterministic) {
  const std::string script =
      "ring x y z; arrangement A = prime(y, z), prime(x, z), prime(x, y);"
      "points Q = (0, 0, 0); (1, 1, 1); containment A --pmax 2 --els; lengths Q --pmax 3;";
  const Outcome a = run(script, {.json = true});
  const Outcome b = run(script, {.json = true, .parallel = true});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

// Printing a computed ideal and parsing it back gives the same ideal.
TEST(SessionProperty, PrintedIdealsRoundTrip) {
  test::Random rng(40);
  const RingPtr r = test::ring({"x", "y", "z"});
  std::vector<Ideal> ideals{symbolic_power(vanishing_ideal(rng.point_set(r, 3)), 2).ideal,
                            power(test::ideal(r, {"x*y - 1/3*z", "y^2 - 2"}), 2)};
  for (int k = 0; k < 10; ++k)
    ideals.push_back(Ideal(r, {rng.nonzero_polynomial(r, 3, 4), rng.nonzero_polynomial(r, 3, 4)}));
  for (const auto& i : ideals) {
    for (const auto& basis : {i.generators(), i.basis().elements(), i.basis(MonomialOrder::lex()).elements()}) {
      std::string text = "ring x y z; ideal J = ";
      for (std::size_t k = 0; k < basis.size(); ++k) text += (k ? ", " : "") + basis[k].to_string();
      text += ";";
      const auto script = parse_input(text);
      ASSERT_TRUE(equal(std::get<Ideal>(script.lookup("J")), Ideal(script.ring, i.generators())))
          << text;
    }
  }
}

TEST(SessionProperty, PrintedPolynomialsRoundTrip) {
  test::Random rng(41);
  const RingPtr r = test::ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    const auto order = trial % 2 ? MonomialOrder::lex() : MonomialOrder::grevlex();
    const auto f = rng.polynomial(r, 5, 6, order);
    ASSERT_EQ(parse_polynomial(f.to_string(), r), f) << f.to_string();
  }
}

int exit_status(int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; }

Outcome run_cli(const std::string& arguments, const std::string& input = "") {
  std::string command = std::string(SYMCON_CLI_PATH) + " " + arguments + " 2>/dev/null";
  if (!input.empty()) command = "printf '%s' '" + input + "' | " + command;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  return {exit_status(pclose(pipe)), out, ""};
}

TEST(Cli, ReadsStdin) {
  const Outcome r = run_cli("", "ring x y; ideal I = 2*x; gb I;");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x\n");
  EXPECT_EQ(run_cli("-", "ring x y; ideal I = x, y; member 1 in I;").out, "false\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("", "ring x y; ideal I = x^2 -;").code, 2);
  EXPECT_EQ(run_cli("/nonexistent/script.sym").code, 2);
  EXPECT_EQ(run_cli("--no-such-flag", "ring x;").code, 2);
  EXPECT_EQ(run_cli("--seed 7", "ring x; ideal I = x; gb I;").code, 0);
}

TEST(Cli, ExperimentScriptsAreDeterministic) {
  for (const char* name : {"plane.sym", "space.sym"}) {
    const std::string path = std::string(SYMCON_EXPERIMENTS_DIR) + "/" + name;
    const Outcome first = run_cli("--json " + path);
    const Outcome second = run_cli("--json " + path);
    ASSERT_EQ(first.code, 0) << name;
    EXPECT_FALSE(first.out.empty());
    EXPECT_EQ(first.out, second.out) << name;
    EXPECT_EQ(Json::parse(first.out)["violations"], 0);
  }
}

}  // namespace
}  // namespace symcon
