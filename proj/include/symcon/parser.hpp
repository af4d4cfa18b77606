#ifndef SYMCON_PARSER_HPP
#define SYMCON_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symcon/errors.hpp"
#include "symcon/ideal.hpp"
#include "symcon/polynomial.hpp"
#include "symcon/rational.hpp"
#include "symcon/symbolic.hpp"

namespace symcon {

// Script grammar (statements end with ';', '#' starts a comment):
//
//   ring x y z;
//   ideal I = x^2 - y, x*y;
//   ideal J = power(I, 2);           also sympower(<points|arrangement>, p)
//   points P = (0,0); (1,1/2);
//   arrangement A = prime(y, z), prime(x, z);
//   gb I --order lex;
//   member x*y in I;
//   power I 3;
//   sympower A 2;
//   containment A --pmax 3 --els;
//   lengths P --pmax 4;

using Binding = std::variant<Ideal, PointSet, DecomposedRadical>;

struct GbCommand {
  std::string ideal;
  MonomialOrder order;
};
struct MemberCommand {
  Polynomial polynomial;
  std::string ideal;
};
struct PowerCommand {
  std::string ideal;
  unsigned p;
};
struct SymPowerCommand {
  std::string target;
  unsigned p;
};
struct ContainmentCommand {
  std::string target;
  unsigned p_max;
  bool els;
};
struct LengthsCommand {
  std::string points;
  unsigned p_max;
};

using Command = std::variant<GbCommand, MemberCommand, PowerCommand, SymPowerCommand,
                             ContainmentCommand, LengthsCommand>;

struct SessionScript {
  RingPtr ring;
  std::map<std::string, Binding> bindings;
  std::vector<Command> commands;

  const Binding& lookup(const std::string& name) const { return bindings.at(name); }
};

namespace detail {

enum class TokenKind {
  identifier,
  number,
  option,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  comma,
  semicolon,
  equals,
  end
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end: return "end of input";
    case TokenKind::identifier: return "identifier '" + t.text + "'";
    case TokenKind::number: return "number '" + t.text + "'";
    case TokenKind::option: return "option '--" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, col = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tokens.push_back({TokenKind::identifier, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({TokenKind::number, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 2 < text.size() && text[i + 1] == '-' && ident_start(text[i + 2])) {
      std::size_t j = i + 2;
      while (j < text.size() && (ident_char(text[j]) || text[j] == '-')) ++j;
      tokens.push_back({TokenKind::option, std::string(text.substr(i + 2, j - i - 2)), l, col});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      case ';': kind = TokenKind::semicolon; break;
      case '=': kind = TokenKind::equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
    tokens.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  tokens.push_back({TokenKind::end, "", line, column});
  return tokens;
}

inline const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> words{
      "ring",     "ideal",       "points",  "arrangement", "prime", "gb",
      "member",   "power",       "sympower", "containment", "lengths", "in"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  SessionScript parse() {
    parse_ring();
    while (peek().kind != TokenKind::end) parse_statement();
    return std::move(script_);
  }

  /// Parses a single polynomial spanning the whole input.
  Polynomial parse_polynomial_only(RingPtr ring) {
    script_.ring = std::move(ring);
    Polynomial f = parse_expression();
    if (peek().kind != TokenKind::end) unexpected(peek());
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw ParseError(message, at.line, at.column);
  }
  [[noreturn]] static void unexpected(const Token& t) {
    if (t.kind == TokenKind::identifier || t.kind == TokenKind::number || t.kind == TokenKind::lparen)
      fail(t, "unexpected " + describe(t) + " (implicit multiplication is not allowed; use '*')");
    fail(t, "unexpected " + describe(t));
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }

  const Token& expect_keyword(std::string_view word) {
    const Token& t = peek();
    if (t.kind != TokenKind::identifier || t.text != word)
      fail(t, "expected '" + std::string(word) + "', found " + describe(t));
    return next();
  }

  unsigned expect_positive(const std::string& what) {
    const Token& t = expect(TokenKind::number, what);
    unsigned long value = 0;
    try {
      value = std::stoul(t.text);
    } catch (const std::exception&) {
      fail(t, what + " is too large");
    }
    if (value < 1 || value > 100000) fail(t, what + " must be between 1 and 100000");
    return static_cast<unsigned>(value);
  }

  void parse_ring() {
    expect_keyword("ring");
    std::vector<std::string> names;
    while (peek().kind == TokenKind::identifier) {
      const Token& t = next();
      if (keywords().count(t.text)) fail(t, "'" + t.text + "' is reserved and cannot name a variable");
      for (const auto& n : names)
        if (n == t.text) fail(t, "duplicate variable '" + t.text + "'");
      names.push_back(t.text);
    }
    if (names.empty()) fail(peek(), "expected at least one variable name, found " + describe(peek()));
    if (names.size() >= kMaxVariables)
      fail(peek(), "at most " + std::to_string(kMaxVariables - 1) + " variables are supported");
    expect(TokenKind::semicolon, "';'");
    script_.ring = make_ring(std::move(names));
  }

  std::string parse_new_name() {
    const Token& t = expect(TokenKind::identifier, "a name");
    if (keywords().count(t.text)) fail(t, "'" + t.text + "' is reserved");
    if (script_.ring->index_of(t.text)) fail(t, "'" + t.text + "' is a ring variable");
    if (script_.bindings.count(t.text)) fail(t, "'" + t.text + "' is already bound");
    return t.text;
  }

  template <class T>
  const T& resolve(const Token& t, const char* kind) const {
    auto it = script_.bindings.find(t.text);
    if (it == script_.bindings.end()) fail(t, "unbound name '" + t.text + "'");
    const T* value = std::get_if<T>(&it->second);
    if (!value) fail(t, "'" + t.text + "' is not " + kind);
    return *value;
  }

  const Token& expect_name() { return expect(TokenKind::identifier, "a name"); }

  // Points and arrangements both decompose into linear primes.
  void require_target(const Token& t) const {
    auto it = script_.bindings.find(t.text);
    if (it == script_.bindings.end()) fail(t, "unbound name '" + t.text + "'");
    if (std::holds_alternative<Ideal>(it->second))
      fail(t, "'" + t.text + "' is an ideal; expected a point set or an arrangement");
  }

  DecomposedRadical target_radical(const Token& t) const {
    require_target(t);
    const Binding& b = script_.bindings.at(t.text);
    if (const auto* points = std::get_if<PointSet>(&b)) return vanishing_ideal(*points);
    return std::get<DecomposedRadical>(b);
  }

  void parse_statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::identifier) fail(head, "expected a statement, found " + describe(head));
    if (head.text == "ring") fail(head, "the ring is already declared");
    if (head.text == "ideal") return parse_ideal();
    if (head.text == "points") return parse_points();
    if (head.text == "arrangement") return parse_arrangement();
    if (head.text == "gb") return parse_gb();
    if (head.text == "member") return parse_member();
    if (head.text == "power" || head.text == "sympower") return parse_power_command();
    if (head.text == "containment") return parse_containment();
    if (head.text == "lengths") return parse_lengths();
    fail(head, "unknown statement '" + head.text + "'");
  }

  void parse_ideal() {
    next();
    const std::string name = parse_new_name();
    expect(TokenKind::equals, "'='");
    const Token& head = peek();
    if (head.kind == TokenKind::identifier && (head.text == "power" || head.text == "sympower") &&
        peek(1).kind == TokenKind::lparen) {
      next();
      next();
      const Token& source = expect_name();
      expect(TokenKind::comma, "','");
      const unsigned p = expect_positive("exponent");
      expect(TokenKind::rparen, "')'");
      expect(TokenKind::semicolon, "';'");
      if (head.text == "power") {
        script_.bindings.emplace(name, power(resolve<Ideal>(source, "an ideal"), p));
      } else {
        script_.bindings.emplace(name, symbolic_power(target_radical(source), p).ideal);
      }
      return;
    }
    std::vector<Polynomial> gens{parse_expression()};
    while (accept(TokenKind::comma)) gens.push_back(parse_expression());
    end_statement();
    script_.bindings.emplace(name, Ideal(script_.ring, std::move(gens)));
  }

  void parse_points() {
    next();
    const std::string name = parse_new_name();
    expect(TokenKind::equals, "'='");
    std::vector<Point> points;
    do {
      const Token& open = expect(TokenKind::lparen, "'(' starting a point");
      Point point{parse_signed_rational()};
      while (accept(TokenKind::comma)) point.push_back(parse_signed_rational());
      expect(TokenKind::rparen, "')'");
      if (point.size() != script_.ring->size())
        fail(open, "point has " + std::to_string(point.size()) + " coordinates but the ring has " +
                       std::to_string(script_.ring->size()) + " variables");
      for (const auto& earlier : points)
        if (earlier == point) fail(open, "duplicate point");
      points.push_back(std::move(point));
      expect(TokenKind::semicolon, "';'");
    } while (peek().kind == TokenKind::lparen);
    script_.bindings.emplace(name, PointSet(script_.ring, std::move(points)));
  }

  void parse_arrangement() {
    next();
    const std::string name = parse_new_name();
    expect(TokenKind::equals, "'='");
    std::vector<LinearPrime> primes;
    std::vector<const Token*> starts;
    do {
      const Token& start = expect_keyword("prime");
      starts.push_back(&start);
      expect(TokenKind::lparen, "'('");
      std::vector<Polynomial> forms{parse_expression()};
      while (accept(TokenKind::comma)) forms.push_back(parse_expression());
      expect(TokenKind::rparen, "')'");
      try {
        primes.push_back(LinearPrime(std::move(forms)));
      } catch (const std::invalid_argument& e) {
        fail(start, e.what());
      }
    } while (accept(TokenKind::comma));
    for (std::size_t k = 0; k < primes.size(); ++k)
      for (std::size_t l = 0; l < primes.size(); ++l)
        if (k != l && primes[k].ideal().contains(primes[l].ideal()))
          fail(*starts[k], "component " + std::to_string(k + 1) + " contains component " +
                               std::to_string(l + 1) + "; components must be minimal");
    end_statement();
    script_.bindings.emplace(name, DecomposedRadical(std::move(primes)));
  }

  void parse_gb() {
    next();
    const Token& target = expect_name();
    resolve<Ideal>(target, "an ideal");
    MonomialOrder order = MonomialOrder::grevlex();
    while (peek().kind == TokenKind::option) {
      const Token& opt = next();
      if (opt.text != "order") fail(opt, "unknown option '--" + opt.text + "' for gb");
      const Token& value = expect(TokenKind::identifier, "an order name");
      if (value.text == "lex") {
        order = MonomialOrder::lex();
      } else if (value.text == "grevlex") {
        order = MonomialOrder::grevlex();
      } else {
        fail(value, "unknown order '" + value.text + "' (expected lex or grevlex)");
      }
    }
    end_statement();
    script_.commands.emplace_back(GbCommand{target.text, order});
  }

  void parse_member() {
    next();
    Polynomial f = parse_expression();
    expect_keyword("in");
    const Token& target = expect_name();
    resolve<Ideal>(target, "an ideal");
    end_statement();
    script_.commands.emplace_back(MemberCommand{std::move(f), target.text});
  }

  void parse_power_command() {
    const Token& head = next();
    const Token& target = expect_name();
    if (head.text == "power") {
      resolve<Ideal>(target, "an ideal");
    } else {
      require_target(target);
    }
    const unsigned p = expect_positive("exponent");
    end_statement();
    if (head.text == "power") {
      script_.commands.emplace_back(PowerCommand{target.text, p});
    } else {
      script_.commands.emplace_back(SymPowerCommand{target.text, p});
    }
  }

  void parse_containment() {
    next();
    const Token& target = expect_name();
    require_target(target);
    std::optional<unsigned> p_max;
    bool els = false;
    while (peek().kind == TokenKind::option) {
      const Token& opt = next();
      if (opt.text == "pmax") {
        p_max = expect_positive("--pmax value");
      } else if (opt.text == "els") {
        els = true;
      } else {
        fail(opt, "unknown option '--" + opt.text + "' for containment");
      }
    }
    if (!p_max) fail(peek(), "containment requires --pmax <k>");
    end_statement();
    script_.commands.emplace_back(ContainmentCommand{target.text, *p_max, els});
  }

  void parse_lengths() {
    next();
    const Token& target = expect_name();
    resolve<PointSet>(target, "a point set");
    std::optional<unsigned> p_max;
    while (peek().kind == TokenKind::option) {
      const Token& opt = next();
      if (opt.text != "pmax") fail(opt, "unknown option '--" + opt.text + "' for lengths");
      p_max = expect_positive("--pmax value");
    }
    if (!p_max) fail(peek(), "lengths requires --pmax <k>");
    end_statement();
    script_.commands.emplace_back(LengthsCommand{target.text, *p_max});
  }

  void end_statement() {
    if (peek().kind == TokenKind::semicolon) {
      next();
      return;
    }
    if (peek().kind == TokenKind::end) fail(peek(), "expected ';' at end of statement");
    unexpected(peek());
  }

  Rational parse_signed_rational() {
    bool negative = false;
    while (peek().kind == TokenKind::minus || peek().kind == TokenKind::plus)
      if (next().kind == TokenKind::minus) negative = !negative;
    Rational r = parse_unsigned_rational();
    return negative ? Rational(-r) : r;
  }

  Rational parse_unsigned_rational() {
    const Token& num = expect(TokenKind::number, "a number");
    if (peek().kind != TokenKind::slash) return Rational(Integer(num.text));
    next();
    const Token& den = expect(TokenKind::number, "a denominator");
    if (Integer(den.text) == 0) fail(den, "zero denominator");
    return make_rational(Integer(num.text), Integer(den.text));
  }

  // expression := term (('+' | '-') term)*
  Polynomial parse_expression() {
    Polynomial f = parse_term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = next();
      Polynomial g = parse_operand(op, [this] { return parse_term(); });
      f = op.kind == TokenKind::plus ? f + g : f - g;
    }
    return f;
  }

  // term := unary ('*' unary)*
  Polynomial parse_term() {
    Polynomial f = parse_unary();
    while (peek().kind == TokenKind::star) {
      const Token& op = next();
      f = f * parse_operand(op, [this] { return parse_unary(); });
    }
    return f;
  }

  // unary := ('-' | '+') unary | power
  Polynomial parse_unary() {
    if (peek().kind == TokenKind::minus || peek().kind == TokenKind::plus) {
      const Token& op = next();
      Polynomial f = parse_operand(op, [this] { return parse_unary(); });
      return op.kind == TokenKind::minus ? -f : f;
    }
    return parse_power();
  }

  // power := primary ('^' number)?
  Polynomial parse_power() {
    Polynomial base = parse_primary();
    if (peek().kind == TokenKind::caret) {
      const Token& op = next();
      if (peek().kind != TokenKind::number)
        fail(op, "operator '^' needs a non-negative integer exponent");
      const Token& e = next();
      unsigned long exponent = 0;
      try {
        exponent = std::stoul(e.text);
      } catch (const std::exception&) {
        fail(e, "exponent is too large");
      }
      if (exponent > 1000) fail(e, "exponent is too large");
      base = base.pow(static_cast<unsigned>(exponent));
      if (peek().kind == TokenKind::caret) fail(peek(), "chained '^' is ambiguous; use parentheses");
    }
    return base;
  }

  // primary := number ('/' number)? | variable | '(' expression ')'
  Polynomial parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number:
        return Polynomial::constant(script_.ring, parse_unsigned_rational());
      case TokenKind::identifier: {
        next();
        auto index = script_.ring->index_of(t.text);
        if (!index) {
          if (script_.bindings.count(t.text))
            fail(t, "'" + t.text + "' names a binding, not a ring variable");
          fail(t, "unknown variable '" + t.text + "'");
        }
        return Polynomial::variable(script_.ring, *index);
      }
      case TokenKind::lparen: {
        next();
        Polynomial f = parse_expression();
        expect(TokenKind::rparen, "')'");
        return f;
      }
      default:
        fail(t, "expected a number, variable or '(', found " + describe(t));
    }
  }

  // Parses the right operand of `op`; a missing operand is reported at the operator.
  template <class Rule>
  Polynomial parse_operand(const Token& op, Rule rule) {
    const TokenKind k = peek().kind;
    const bool starts_operand = k == TokenKind::number || k == TokenKind::identifier ||
                                k == TokenKind::lparen || k == TokenKind::minus ||
                                k == TokenKind::plus;
    if (!starts_operand) fail(op, "operator '" + op.text + "' is missing its right operand");
    return rule();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SessionScript script_;
};

}  // namespace detail

inline SessionScript parse_input(std::string_view text) { return detail::Parser(text).parse(); }

/// Parses one polynomial in `ring` using the script expression grammar.
inline Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  return detail::Parser(text).parse_polynomial_only(std::move(ring));
}

}  // namespace symcon

#endif  // SYMCON_PARSER_HPP
