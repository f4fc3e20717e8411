#include <random>
#include <string>

#include "gtest/gtest.h"
#include "probsat/io.hpp"
#include "checks.hpp"

using namespace probsat;
using namespace probsat::io;

namespace {

Literal pos(std::uint32_t v) { return Literal(Var(v)); }
Literal neg(std::uint32_t v) { return Literal(Var(v), true); }

ParseErrorKind dimacs_error(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseErrorKind::syntax_error;
}

}  // namespace

TEST(DimacsTest, Examples) {
  DimacsResult r = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0");
  EXPECT_EQ(r.cnf, CnfFormula({Clause{pos(1), pos(2)}, Clause{neg(1), pos(2)}}, 2));
  EXPECT_TRUE(r.warnings.empty());

  DimacsResult empty = parse_dimacs("p cnf 1 0");
  EXPECT_EQ(empty.cnf.clause_count(), 0u);
  EXPECT_EQ(empty.cnf.num_vars(), 1u);

  DimacsResult mismatch = parse_dimacs("p cnf 2 1\n1 0 2 0");
  EXPECT_EQ(mismatch.cnf, CnfFormula({Clause{pos(1)}, Clause{pos(2)}}, 2));
  ASSERT_EQ(mismatch.warnings.size(), 1u);
  EXPECT_EQ(mismatch.warnings[0].line, 1u);
}

TEST(DimacsTest, CommentsMultilineClausesAndEmptyClause) {
  DimacsResult r = parse_dimacs("c hello\nc world\n\np cnf 3 3\n1\n -2\n3 0 0\nc mid\n-3 -3 0\n");
  EXPECT_EQ(r.cnf, CnfFormula({Clause{pos(1), neg(2), pos(3)}, Clause{}, Clause{neg(3), neg(3)}}, 3));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(DimacsTest, CrlfAndPercentTerminator) {
  DimacsResult r = parse_dimacs("p cnf 2 1\r\n1 -2 0\r\n%\r\n0\r\n");
  EXPECT_EQ(r.cnf, CnfFormula({Clause{pos(1), neg(2)}}, 2));
}

TEST(DimacsTest, Errors) {
  EXPECT_EQ(dimacs_error(""), ParseErrorKind::missing_header);
  EXPECT_EQ(dimacs_error("1 2 0\n"), ParseErrorKind::missing_header);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 x 0\n"), ParseErrorKind::malformed_literal);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 3 0\n"), ParseErrorKind::var_out_of_range);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 -3 0\n"), ParseErrorKind::var_out_of_range);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 2\n"), ParseErrorKind::trailing_garbage);
  EXPECT_EQ(dimacs_error("p cnf 2 1 extra\n"), ParseErrorKind::trailing_garbage);
  EXPECT_EQ(dimacs_error("p dnf 2 1\n"), ParseErrorKind::malformed_header);
  EXPECT_EQ(dimacs_error("p cnf -2 1\n"), ParseErrorKind::malformed_header);
  EXPECT_EQ(dimacs_error("p cnf 2 1\np cnf 2 1\n"), ParseErrorKind::malformed_header);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n99999999999999999999 0\n"), ParseErrorKind::malformed_literal);
}

TEST(DimacsTest, DiagnosticPosition) {
  try {
    parse_dimacs("p cnf 3 1\n1  2 x 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostic().line, 2u);
    EXPECT_EQ(e.diagnostic().column, 6u);
    EXPECT_EQ(e.kind(), ParseErrorKind::malformed_literal);
  }
}

TEST(DimacsTest, Render) {
  CnfFormula cnf({Clause{pos(1), neg(2)}, Clause{}}, 3);
  EXPECT_EQ(render_cnf(cnf), "p cnf 3 2\n1 -2 0\n0\n");
  EXPECT_THROW(render_cnf(CnfFormula({Clause{Literal::constant(true)}}, 0)), std::invalid_argument);
}

TEST(DimacsTest, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::uint32_t n = 1 + rng() % 30;
    CnfFormula cnf(testkit::random_clauses(rng, n, rng() % 12, 5), n);
    DimacsResult back = parse_dimacs(render_cnf(cnf));
    ASSERT_EQ(back.cnf, cnf);
    ASSERT_TRUE(back.warnings.empty());
  }
}

TEST(ExpressionTest, Examples) {
  Formula p = atom(1), q = atom(2), c = atom(3);
  EXPECT_EQ(parse_formula("p & (p -> q)").formula, conjunction(p, implication(p, q)));
  EXPECT_EQ(parse_formula("!!p").formula, negation(negation(p)));
  EXPECT_EQ(parse_formula("a -> b -> c").formula, implication(p, implication(q, c)));
}

TEST(ExpressionTest, PrecedenceAndNames) {
  ParsedFormula r = parse_formula("foo | bar & !foo -> T");
  EXPECT_EQ(r.names, (std::vector<std::string>{"foo", "bar"}));
  Formula foo = atom(1), bar = atom(2);
  EXPECT_EQ(r.formula, implication(disjunction(foo, conjunction(bar, negation(foo))), Formula::constant(true)));
  EXPECT_EQ(parse_formula("a | b | c").formula, disjunction(disjunction(atom(1), atom(2)), atom(3)));
  EXPECT_EQ(parse_formula("F").formula, Formula::constant(false));
  EXPECT_TRUE(parse_formula("T").names.empty());
}

TEST(ExpressionTest, UnicodeConnectives) {
  EXPECT_EQ(parse_formula("¬p ∧ q ⇒ p ∨ q").formula, parse_formula("!p & q -> p | q").formula);
  EXPECT_EQ(parse_formula("p → q").formula, parse_formula("p -> q").formula);
}

TEST(ExpressionTest, SyntaxErrors) {
  for (const char* bad : {"", "p &", "(p", "p q", "p - q", "p $ q", "&p", ")", "p -> ", "!"}) {
    try {
      parse_formula(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ParseErrorKind::syntax_error);
      EXPECT_GE(e.diagnostic().column, 1u);
    }
  }
  try {
    parse_formula("p &\n  $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostic().line, 2u);
    EXPECT_EQ(e.diagnostic().column, 3u);
  }
}

TEST(ExpressionTest, DeepNestingIsADiagnostic) {
  EXPECT_THROW(parse_formula(std::string(5000, '(') + "p" + std::string(5000, ')')), ParseError);
  EXPECT_THROW(parse_formula(std::string(5000, '!') + "p"), ParseError);
  EXPECT_NO_THROW(parse_formula(std::string(100, '(') + "p" + std::string(100, ')')));
}

TEST(ExpressionTest, Render) {
  Formula p = atom(1), q = atom(2), r = atom(3);
  EXPECT_EQ(render_formula(conjunction(p, implication(p, q)), {"p", "q"}), "p & (p -> q)");
  EXPECT_EQ(render_formula(implication(implication(p, q), r)), "(x1 -> x2) -> x3");
  EXPECT_EQ(render_formula(implication(p, implication(q, r))), "x1 -> x2 -> x3");
  EXPECT_EQ(render_formula(disjunction(p, disjunction(q, r))), "x1 | (x2 | x3)");
  EXPECT_EQ(render_formula(negation(conjunction(p, Formula::constant(false)))), "!(x1 & F)");
}

TEST(ExpressionTest, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Formula f = testkit::random_formula(rng, 6, 6);
    std::string text = render_formula(f);
    ParsedFormula back = parse_formula(text);
    ASSERT_EQ(render_formula(back.formula, back.names), text);
    ASSERT_EQ(testkit::remap_rendered(back.formula, back.names), f) << text;
  }
}

TEST(DnfTextTest, Examples) {
  EXPECT_EQ(render_dnf(DnfFormula({Clause{neg(1), neg(2)}, Clause{pos(1), neg(2)}}, 2)), "!x1 & !x2 | x1 & !x2");
  EXPECT_EQ(render_dnf(DnfFormula({}, 4)), "");
  EXPECT_EQ(render_dnf(DnfFormula({Clause{}, Clause{Literal::constant(false), pos(2)}}, 2)), "T | F & x2");
  EXPECT_EQ(parse_dnf("!x1 & !x2 | x1 & !x2"), DnfFormula({Clause{neg(1), neg(2)}, Clause{pos(1), neg(2)}}, 2));
  EXPECT_EQ(parse_dnf("", 4), DnfFormula({}, 4));
  EXPECT_THROW(parse_dnf("x1 & y2"), ParseError);
  EXPECT_THROW(parse_dnf("x1 |"), ParseError);
  EXPECT_THROW(parse_dnf("x5", 2), ParseError);
}

TEST(DnfTextTest, RoundTrip) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    std::uint32_t n = 1 + rng() % 20;
    DnfFormula dnf(testkit::random_clauses(rng, n, rng() % 8, 4), n);
    ASSERT_EQ(parse_dnf(render_dnf(dnf), n), dnf);
  }
}

TEST(FuzzTest, ArbitraryBytesNeverCrash) {
  auto violations = testkit::fuzz_violations(23, 2000);
  for (const auto& v : violations) ADD_FAILURE() << v;
}
