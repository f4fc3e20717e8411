#pragma once

// Flat DNF text: "!x1 & !x2 | x1 & !x2". An empty DNF renders as "" and an
// empty conjunction as "T".

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "probsat/formula.hpp"
#include "probsat/io/diagnostic.hpp"

namespace probsat::io {

inline std::string render_literal(Literal l) {
  if (l.is_constant()) return l.constant_value() ? "T" : "F";
  return (l.negated() ? "!x" : "x") + std::to_string(l.var_id());
}

inline std::string render_dnf(const DnfFormula& dnf) {
  std::string out;
  bool first_clause = true;
  for (const auto& c : dnf.clauses()) {
    if (!first_clause) out += " | ";
    first_clause = false;
    if (c.empty()) {
      out += 'T';
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " & ";
      out += render_literal(c.literals[i]);
    }
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads render_dnf output back. A lone "T" term is an empty conjunction.
/// `num_vars` defaults to the largest variable id seen.
inline DnfFormula parse_dnf(std::string_view text, std::optional<std::uint32_t> num_vars = std::nullopt) {
  std::vector<Clause> clauses;
  std::uint32_t max_id = 0;
  std::string_view body = detail::trim(text);
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t bar = body.find('|', pos);
      std::string_view clause_text = body.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
      Clause clause;
      std::size_t lpos = 0;
      while (true) {
        std::size_t amp = clause_text.find('&', lpos);
        std::string_view raw = clause_text.substr(lpos, amp == std::string_view::npos ? amp : amp - lpos);
        std::string_view tok = detail::trim(raw);
        std::size_t column = pos + lpos + 1 + (raw.size() - detail::trim(raw).size());
        auto fail = [&](const std::string& msg) {
          return ParseError(ParseErrorKind::syntax_error, {1, column, msg});
        };
        if (tok == "T") {
          // true conjunct contributes nothing
        } else if (tok == "F") {
          clause.literals.push_back(Literal::constant(false));
        } else {
          bool neg = !tok.empty() && tok.front() == '!';
          if (neg) tok.remove_prefix(1);
          if (tok.size() < 2 || tok.front() != 'x') throw fail("expected a literal like x3 or !x3");
          std::uint32_t id = 0;
          auto digits = tok.substr(1);
          auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
          if (ec != std::errc{} || p != digits.data() + digits.size() || id == 0) throw fail("bad variable id");
          max_id = std::max(max_id, id);
          clause.literals.push_back(Literal(Var(id), neg));
        }
        if (amp == std::string_view::npos) break;
        lpos = amp + 1;
      }
      clauses.push_back(std::move(clause));
      if (bar == std::string_view::npos) break;
      pos = bar + 1;
    }
  }
  std::uint32_t n = num_vars.value_or(max_id);
  if (n < max_id)
    throw ParseError(ParseErrorKind::var_out_of_range, {1, 1, "variable x" + std::to_string(max_id) + " out of range"});
  return DnfFormula(std::move(clauses), n);
}

}  // namespace probsat::io
