#pragma once

// DIMACS CNF reader and writer.

#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "probsat/formula.hpp"
#include "probsat/io/diagnostic.hpp"

namespace probsat::io {

struct DimacsResult {
  CnfFormula cnf;
  /// Non-fatal findings, e.g. a clause count that disagrees with the header.
  std::vector<ParseDiagnostic> warnings;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  Int v{};
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses "p cnf <vars> <clauses>" followed by zero-terminated clauses.
/// Lines starting with 'c' are comments; a line starting with '%' ends input.
inline DimacsResult parse_dimacs(std::string_view text) {
  using detail::Token;
  std::optional<std::uint32_t> num_vars;
  std::uint64_t declared_clauses = 0;
  std::size_t header_line = 0;
  std::vector<Clause> clauses;
  Clause current;
  bool open_clause = false;
  std::size_t open_line = 0, open_col = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::vector<Token> toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    char lead = toks.front().text.front();
    if (lead == 'c') continue;
    if (lead == '%') break;

    if (lead == 'p') {
      auto bad = [&](std::size_t col, const std::string& msg) {
        return ParseError(ParseErrorKind::malformed_header, {line_no, col, msg});
      };
      if (num_vars) throw bad(toks[0].column, "duplicate header");
      if (toks[0].text != "p") throw bad(toks[0].column, "expected 'p cnf <vars> <clauses>'");
      if (toks.size() < 2 || toks[1].text != "cnf")
        throw bad(toks.size() < 2 ? line.size() + 1 : toks[1].column, "expected format 'cnf'");
      if (toks.size() < 4) throw bad(line.size() + 1, "header needs variable and clause counts");
      auto nv = detail::parse_int<std::uint32_t>(toks[2].text);
      if (!nv || *nv == std::numeric_limits<std::uint32_t>::max()) throw bad(toks[2].column, "invalid variable count");
      auto nc = detail::parse_int<std::uint64_t>(toks[3].text);
      if (!nc) throw bad(toks[3].column, "invalid clause count");
      if (toks.size() > 4)
        throw ParseError(ParseErrorKind::trailing_garbage,
                         {line_no, toks[4].column, "unexpected text after header"});
      num_vars = *nv;
      declared_clauses = *nc;
      header_line = line_no;
      continue;
    }

    if (!num_vars)
      throw ParseError(ParseErrorKind::missing_header,
                       {line_no, toks[0].column, "clause data before 'p cnf' header"});

    for (const Token& t : toks) {
      auto lit = detail::parse_int<std::int64_t>(t.text);
      if (!lit)
        throw ParseError(ParseErrorKind::malformed_literal,
                         {line_no, t.column, "'" + std::string(t.text) + "' is not an integer literal"});
      if (*lit == 0) {
        clauses.push_back(std::move(current));
        current = Clause{};
        open_clause = false;
        continue;
      }
      std::uint64_t id = *lit < 0 ? static_cast<std::uint64_t>(-(*lit + 1)) + 1 : static_cast<std::uint64_t>(*lit);
      if (id > *num_vars)
        throw ParseError(ParseErrorKind::var_out_of_range,
                         {line_no, t.column,
                          "variable " + std::to_string(id) + " exceeds header count " + std::to_string(*num_vars)});
      if (!open_clause) {
        open_clause = true;
        open_line = line_no;
        open_col = t.column;
      }
      current.literals.push_back(Literal(Var(static_cast<std::uint32_t>(id)), *lit < 0));
    }
  }

  if (!num_vars) throw ParseError(ParseErrorKind::missing_header, {line_no == 0 ? 1 : line_no, 1, "missing 'p cnf' header"});
  if (open_clause)
    throw ParseError(ParseErrorKind::trailing_garbage, {open_line, open_col, "clause is not terminated by 0"});

  DimacsResult result{CnfFormula(std::move(clauses), *num_vars), {}};
  if (result.cnf.clause_count() != declared_clauses)
    result.warnings.push_back({header_line, 1,
                               "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                   std::to_string(result.cnf.clause_count())});
  return result;
}

/// DIMACS text for `cnf`. Constant literals have no DIMACS form and throw.
inline std::string render_cnf(const CnfFormula& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars()) + " " + std::to_string(cnf.clause_count()) + "\n";
  for (const auto& c : cnf.clauses()) {
    for (Literal l : c.literals) {
      if (l.is_constant()) throw std::invalid_argument("constant literal cannot be written as DIMACS");
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace probsat::io
