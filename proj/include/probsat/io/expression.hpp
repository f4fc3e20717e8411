#pragma once

// Propositional expression grammar, lowest precedence first:
//
//   impl  := or ('->' impl)?          right associative
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := '!' unary | atom
//   atom  := identifier | 'T' | 'F' | '(' impl ')'
//
// The Unicode connectives ¬ ∧ ∨ → ⇒ are accepted as aliases.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "probsat/formula.hpp"
#include "probsat/io/diagnostic.hpp"

namespace probsat::io {

struct ParsedFormula {
  Formula formula;
  /// names[i] is the identifier bound to variable i + 1, in first-occurrence order.
  std::vector<std::string> names;
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ParsedFormula parse() {
    advance();
    Formula f = implication_level();
    if (tok_.kind != Kind::end) fail("unexpected '" + std::string(tok_.text) + "'");
    return {f, std::move(names_)};
  }

 private:
  enum class Kind { end, ident, lparen, rparen, bang, amp, bar, arrow };
  struct Tok {
    Kind kind = Kind::end;
    std::string_view text;
    std::size_t line = 1, column = 1;
  };

  static constexpr std::size_t kMaxDepth = 500;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseErrorKind::syntax_error, {tok_.line, tok_.column, msg});
  }

  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

  void skip(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      skip(1);
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Kind::end;
      tok_.text = "end of input";
      return;
    }
    auto rest = text_.substr(pos_);
    auto take = [&](Kind k, std::size_t n) {
      tok_.kind = k;
      tok_.text = rest.substr(0, n);
      skip(n);
    };
    char c = rest[0];
    if (ident_start(c)) {
      std::size_t n = 1;
      while (n < rest.size() && ident_char(rest[n])) ++n;
      return take(Kind::ident, n);
    }
    switch (c) {
      case '(':
        return take(Kind::lparen, 1);
      case ')':
        return take(Kind::rparen, 1);
      case '!':
        return take(Kind::bang, 1);
      case '&':
        return take(Kind::amp, 1);
      case '|':
        return take(Kind::bar, 1);
      default:
        break;
    }
    if (rest.starts_with("->")) return take(Kind::arrow, 2);
    if (rest.starts_with("¬")) return take(Kind::bang, 2);
    if (rest.starts_with("∧")) return take(Kind::amp, 3);
    if (rest.starts_with("∨")) return take(Kind::bar, 3);
    if (rest.starts_with("→") || rest.starts_with("⇒")) return take(Kind::arrow, 3);
    tok_.text = rest.substr(0, 1);
    fail("unexpected character");
  }

  struct DepthGuard {
    explicit DepthGuard(ExpressionParser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
    ExpressionParser& p;
  };

  Formula implication_level() {
    DepthGuard guard(*this);
    Formula lhs = or_level();
    if (tok_.kind != Kind::arrow) return lhs;
    advance();
    return implication(lhs, implication_level());
  }

  Formula or_level() {
    Formula acc = and_level();
    while (tok_.kind == Kind::bar) {
      advance();
      acc = disjunction(acc, and_level());
    }
    return acc;
  }

  Formula and_level() {
    Formula acc = unary();
    while (tok_.kind == Kind::amp) {
      advance();
      acc = conjunction(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    DepthGuard guard(*this);
    if (tok_.kind == Kind::bang) {
      advance();
      return negation(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (tok_.kind) {
      case Kind::ident: {
        std::string name(tok_.text);
        advance();
        if (name == "T") return Formula::constant(true);
        if (name == "F") return Formula::constant(false);
        auto [it, inserted] = ids_.emplace(name, static_cast<std::uint32_t>(names_.size() + 1));
        if (inserted) names_.push_back(name);
        return Formula::atom(Var(it->second));
      }
      case Kind::lparen: {
        advance();
        Formula inner = implication_level();
        if (tok_.kind != Kind::rparen) fail("expected ')'");
        advance();
        return inner;
      }
      case Kind::end:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + std::string(tok_.text) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::size_t depth_ = 0;
  Tok tok_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
};

enum Level { kImplies = 0, kOr = 1, kAnd = 2, kUnary = 3 };

inline void render(const Formula& f, const std::vector<std::string>& names, int min_level, std::string& out) {
  int level = kUnary;
  switch (f.kind()) {
    case Formula::Kind::conjunction:
      level = kAnd;
      break;
    case Formula::Kind::disjunction:
      level = kOr;
      break;
    case Formula::Kind::implication:
      level = kImplies;
      break;
    default:
      break;
  }
  bool parens = level < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::atom: {
      auto id = f.var().id();
      out += id <= names.size() ? names[id - 1] : "x" + std::to_string(id);
      break;
    }
    case Formula::Kind::constant:
      out += f.value() ? 'T' : 'F';
      break;
    case Formula::Kind::negation:
      out += '!';
      render(f.operand(), names, kUnary, out);
      break;
    case Formula::Kind::conjunction:
      render(f.lhs(), names, kAnd, out);
      out += " & ";
      render(f.rhs(), names, kUnary, out);
      break;
    case Formula::Kind::disjunction:
      render(f.lhs(), names, kOr, out);
      out += " | ";
      render(f.rhs(), names, kAnd, out);
      break;
    case Formula::Kind::implication:
      render(f.lhs(), names, kOr, out);
      out += " -> ";
      render(f.rhs(), names, kImplies, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline ParsedFormula parse_formula(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Minimal-parenthesis text that parses back to the same tree.
/// Variables without an entry in `names` print as x<id>.
inline std::string render_formula(const Formula& f, const std::vector<std::string>& names = {}) {
  std::string out;
  detail::render(f, names, detail::kImplies, out);
  return out;
}

}  // namespace probsat::io
