#include <random>

#include "gtest/gtest.h"
#include "probsat/formula.hpp"
#include "support.hpp"

using namespace probsat;

namespace {

const Formula p = atom(1);
const Formula q = atom(2);
const Formula w = atom(3);
const Formula m = atom(4);

Literal pos(std::uint32_t v) { return Literal(Var(v)); }
Literal neg(std::uint32_t v) { return Literal(Var(v), true); }

}  // namespace

TEST(EvalTest, DisjunctionWithNegatedConjunct) {
  // p | (q & !p) with p = T, q = F
  Formula f = disjunction(p, conjunction(q, negation(p)));
  EXPECT_TRUE(eval(f, {{1, true}, {2, false}}));
}

TEST(EvalTest, Constant) { EXPECT_TRUE(eval(Formula::constant(true), {})); }

TEST(EvalTest, ModusPonensPremiseFalse) {
  Formula f = conjunction(p, implication(p, q));
  EXPECT_FALSE(eval(f, {{1, true}, {2, false}}));
}

TEST(EvalTest, ImplicationTable) {
  Formula f = implication(p, q);
  EXPECT_TRUE(eval(f, {{1, false}, {2, false}}));
  EXPECT_TRUE(eval(f, {{1, false}, {2, true}}));
  EXPECT_FALSE(eval(f, {{1, true}, {2, false}}));
  EXPECT_TRUE(eval(f, {{1, true}, {2, true}}));
}

TEST(EvalTest, UnboundVariableThrows) {
  try {
    eval(conjunction(p, q), {{1, true}});
    FAIL() << "expected UnboundVariable";
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.var(), 2u);
  }
}

TEST(EvalTest, AgreesWithTableDrivenEvaluator) {
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 200; ++i) {
    Formula f = testkit::random_formula(rng, 5, 6);
    auto column = testkit::table_column(f, 5);
    for (std::uint64_t row = 0; row < 32; ++row)
      ASSERT_EQ(eval(f, testkit::row_assignment(row, 5)), column[row]) << "formula " << i << " row " << row;
  }
}

TEST(VarsTest, Examples) {
  EXPECT_EQ(vars(disjunction(p, conjunction(q, negation(p)))), (std::set<Var>{Var(1), Var(2)}));
  EXPECT_TRUE(vars(Formula::constant(false)).empty());
  EXPECT_EQ(vars(disjunction(conjunction(p, q), conjunction(w, m))),
            (std::set<Var>{Var(1), Var(2), Var(3), Var(4)}));
}

TEST(VarTest, ZeroIdRejected) { EXPECT_THROW(Var(0), std::invalid_argument); }

TEST(LiteralTest, ComplementAndConstants) {
  EXPECT_TRUE(pos(3).complementary(neg(3)));
  EXPECT_FALSE(pos(3).complementary(pos(3)));
  EXPECT_FALSE(pos(3).complementary(neg(4)));
  Literal t = Literal::constant(true);
  EXPECT_TRUE(t.is_constant());
  EXPECT_TRUE(t.constant_value());
  EXPECT_FALSE((~t).constant_value());
  EXPECT_FALSE(t.complementary(~t));
  EXPECT_EQ(Literal::from_dimacs(-7), neg(7));
  EXPECT_EQ(neg(7).to_dimacs(), -7);
}

TEST(ClauseTest, DistinctVarCount) {
  EXPECT_EQ(Clause({pos(1), pos(1), neg(2)}).distinct_var_count(), 2u);
  EXPECT_EQ(Clause({pos(1), neg(1)}).distinct_var_count(), 1u);
  EXPECT_EQ(Clause().distinct_var_count(), 0u);
}

TEST(AssignmentTest, ConflictingBindingDetected) {
  Assignment a;
  a.bind(Var(1), true);
  EXPECT_NO_THROW(a.bind(Var(1), true));
  EXPECT_THROW(a.bind(Var(1), false), ConflictingBinding);
  EXPECT_EQ(a.size(), 1u);
}

TEST(NormalFormTest, VariableBeyondDeclaredCountRejected) {
  EXPECT_THROW(CnfFormula({Clause{pos(3)}}, 2), std::invalid_argument);
}

TEST(NegateCnfTest, TwoClauseExample) {
  CnfFormula cnf({Clause{pos(1), pos(2)}, Clause{neg(1), pos(2)}}, 2);
  DnfFormula expected({Clause{neg(1), neg(2)}, Clause{pos(1), neg(2)}}, 2);
  EXPECT_EQ(negate_cnf(cnf), expected);
}

TEST(NegateCnfTest, SingleLiteral) {
  EXPECT_EQ(negate_cnf(CnfFormula({Clause{pos(1)}}, 1)), DnfFormula({Clause{neg(1)}}, 1));
}

TEST(NegateCnfTest, FourVariableExample) {
  CnfFormula cnf({Clause{pos(1), pos(2)}, Clause{neg(2), pos(3), neg(4)}, Clause{neg(1), pos(4)}}, 4);
  DnfFormula expected({Clause{neg(1), neg(2)}, Clause{pos(2), neg(3), pos(4)}, Clause{pos(1), neg(4)}}, 4);
  EXPECT_EQ(negate_cnf(cnf), expected);
}

TEST(NegateCnfTest, EmptyInputs) {
  EXPECT_EQ(negate_cnf(CnfFormula({}, 3)), DnfFormula({}, 3));
  EXPECT_EQ(negate_cnf(CnfFormula({Clause{}}, 0)), DnfFormula({Clause{}}, 0));
}

TEST(NegateCnfTest, SemanticComplementOnRandomCnfs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    std::uint32_t n = 1 + rng() % 10;
    std::size_t count = rng() % 6;
    CnfFormula cnf(testkit::random_clauses(rng, n, count, 4), n);
    DnfFormula dnf = negate_cnf(cnf);

    ASSERT_EQ(dnf.clause_count(), cnf.clause_count());
    for (std::size_t c = 0; c < cnf.clause_count(); ++c)
      ASSERT_EQ(dnf.clauses()[c].size(), cnf.clauses()[c].size());

    auto a = testkit::table_column(cnf_to_formula(cnf), n);
    auto b = testkit::table_column(dnf_to_formula(dnf), n);
    for (std::size_t r = 0; r < a.size(); ++r) ASSERT_NE(a[r], b[r]) << "instance " << i << " row " << r;
  }
}

TEST(ClauseToFormulaTest, Folds) {
  EXPECT_EQ(clause_to_formula(Clause{}, Connective::conjunction), Formula::constant(true));
  EXPECT_EQ(clause_to_formula(Clause{}, Connective::disjunction), Formula::constant(false));
  EXPECT_EQ(clause_to_formula(Clause{pos(1), pos(2)}, Connective::disjunction), disjunction(p, q));
  EXPECT_EQ(clause_to_formula(Clause{pos(1), pos(2), pos(3)}, Connective::conjunction),
            conjunction(p, conjunction(q, w)));
  EXPECT_EQ(cnf_to_formula(CnfFormula({}, 0)), Formula::constant(true));
  EXPECT_EQ(dnf_to_formula(DnfFormula({}, 0)), Formula::constant(false));
}

TEST(ClauseToFormulaTest, DnfStructure) {
  DnfFormula dnf({Clause{neg(1), neg(2)}, Clause{pos(1), neg(2)}}, 2);
  Formula expected = disjunction(conjunction(negation(p), negation(q)), conjunction(p, negation(q)));
  EXPECT_EQ(dnf_to_formula(dnf), expected);
}

TEST(FormulaTest, ImplicationChainIsRightAssociative) {
  EXPECT_EQ(implication_chain({p, q, w}), implication(p, implication(q, w)));
  EXPECT_FALSE(implication(implication(p, q), w) == implication(p, implication(q, w)));
}
