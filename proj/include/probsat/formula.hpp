#pragma once

// Formula representations: propositional AST, clause-based normal forms,
// assignments, evaluation and CNF -> DNF negation.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "probsat/errors.hpp"

namespace probsat {

/// Propositional variable, 1-based to match DIMACS numbering.
class Var {
 public:
  explicit Var(std::uint32_t id) : id_(id) {
    if (id == 0) throw std::invalid_argument("variable ids start at 1");
  }
  std::uint32_t id() const noexcept { return id_; }
  friend auto operator<=>(Var, Var) = default;

 private:
  std::uint32_t id_;
};

/// A variable or its negation. Also carries the constants T and F, which
/// appear in clauses after substitution.
class Literal {
 public:
  Literal(Var v, bool negated = false) : var_(v.id()), negated_(negated) {}  // NOLINT implicit

  static Literal constant(bool value) {
    Literal l;
    l.negated_ = !value;
    return l;
  }
  /// Signed DIMACS form: -3 is !x3.
  static Literal from_dimacs(std::int64_t lit) {
    if (lit == 0) throw std::invalid_argument("0 is not a DIMACS literal");
    auto id = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
    return Literal(Var(id), lit < 0);
  }

  bool is_constant() const noexcept { return var_ == 0; }
  bool constant_value() const noexcept { return !negated_; }
  Var var() const {
    if (is_constant()) throw std::logic_error("constant literal has no variable");
    return Var(var_);
  }
  std::uint32_t var_id() const noexcept { return var_; }
  bool negated() const noexcept { return negated_; }
  std::int64_t to_dimacs() const noexcept {
    return negated_ ? -static_cast<std::int64_t>(var_) : static_cast<std::int64_t>(var_);
  }

  Literal operator~() const noexcept {
    Literal l = *this;
    l.negated_ = !l.negated_;
    return l;
  }
  bool complementary(Literal other) const noexcept {
    return !is_constant() && var_ == other.var_ && negated_ != other.negated_;
  }

  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  Literal() = default;
  std::uint32_t var_ = 0;
  bool negated_ = false;
};

struct Clause {
  std::vector<Literal> literals;

  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : literals(lits) {}
  explicit Clause(std::vector<Literal> lits) : literals(std::move(lits)) {}

  bool empty() const noexcept { return literals.empty(); }
  std::size_t size() const noexcept { return literals.size(); }

  /// Number of distinct variables after deduplication (constants ignored).
  std::size_t distinct_var_count() const {
    std::vector<std::uint32_t> ids;
    ids.reserve(literals.size());
    for (auto l : literals)
      if (!l.is_constant()) ids.push_back(l.var_id());
    std::sort(ids.begin(), ids.end());
    return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
  }

  std::uint32_t max_var_id() const noexcept {
    std::uint32_t m = 0;
    for (auto l : literals) m = std::max(m, l.var_id());
    return m;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
};

enum class Connective { conjunction, disjunction };

/// Clause list under a fixed outer connective: CNF joins clauses with AND,
/// DNF joins them with OR.
template <Connective Outer>
class NormalForm {
 public:
  static constexpr Connective outer = Outer;
  static constexpr Connective inner =
      Outer == Connective::conjunction ? Connective::disjunction : Connective::conjunction;

  NormalForm() = default;
  NormalForm(std::vector<Clause> clauses, std::uint32_t num_vars)
      : clauses_(std::move(clauses)), num_vars_(num_vars) {
    for (const auto& c : clauses_)
      if (c.max_var_id() > num_vars_)
        throw std::invalid_argument("literal x" + std::to_string(c.max_var_id()) +
                                    " exceeds declared variable count " + std::to_string(num_vars_));
  }

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  std::uint32_t num_vars() const noexcept { return num_vars_; }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<Clause> clauses_;
  std::uint32_t num_vars_ = 0;
};

using CnfFormula = NormalForm<Connective::conjunction>;
using DnfFormula = NormalForm<Connective::disjunction>;

/// Immutable propositional formula tree with shared subtrees.
class Formula {
 public:
  enum class Kind : std::uint8_t { atom, constant, negation, conjunction, disjunction, implication };

  static Formula atom(Var v) { return Formula(std::make_shared<const Node>(Node{Kind::atom, v.id(), false, {}, {}})); }
  static Formula constant(bool value) {
    return Formula(std::make_shared<const Node>(Node{Kind::constant, 0, value, {}, {}}));
  }
  static Formula negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::negation, 0, false, std::move(f.node_), {}}));
  }
  static Formula conjunction(Formula a, Formula b) { return binary(Kind::conjunction, std::move(a), std::move(b)); }
  static Formula disjunction(Formula a, Formula b) { return binary(Kind::disjunction, std::move(a), std::move(b)); }
  static Formula implication(Formula a, Formula b) { return binary(Kind::implication, std::move(a), std::move(b)); }

  Kind kind() const noexcept { return node_->kind; }
  bool is_binary() const noexcept {
    return kind() == Kind::conjunction || kind() == Kind::disjunction || kind() == Kind::implication;
  }
  Var var() const {
    if (kind() != Kind::atom) throw std::logic_error("not an atom");
    return Var(node_->var);
  }
  bool value() const {
    if (kind() != Kind::constant) throw std::logic_error("not a constant");
    return node_->value;
  }
  /// Operand of a negation, or left side of a binary node.
  Formula lhs() const {
    if (!node_->lhs) throw std::logic_error("node has no children");
    return Formula(node_->lhs);
  }
  Formula operand() const { return lhs(); }
  Formula rhs() const {
    if (!node_->rhs) throw std::logic_error("node has no right child");
    return Formula(node_->rhs);
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.var != y.var || x.value != y.value) return false;
    if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
    if (x.lhs && !(Formula(x.lhs) == Formula(y.lhs))) return false;
    if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
    return !x.rhs || Formula(x.rhs) == Formula(y.rhs);
  }

 private:
  struct Node {
    Kind kind;
    std::uint32_t var;
    bool value;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{k, 0, false, std::move(a.node_), std::move(b.node_)}));
  }

  std::shared_ptr<const Node> node_;
};

inline Formula atom(std::uint32_t id) { return Formula::atom(Var(id)); }
inline Formula negation(Formula f) { return Formula::negation(std::move(f)); }
inline Formula conjunction(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula disjunction(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
inline Formula implication(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }

/// Right-associated chain a -> (b -> (c -> ...)).
inline Formula implication_chain(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("implication chain needs at least one formula");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = implication(*it, acc);
  return acc;
}

/// Partial map from variables to truth values.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::uint32_t, bool>> init) {
    for (auto [id, value] : init) bind(Var(id), value);
  }

  /// Rebinding to the same value is a no-op; the opposite value throws.
  Assignment& bind(Var v, bool value) {
    auto [it, inserted] = bindings_.emplace(v, value);
    if (!inserted && it->second != value) throw ConflictingBinding(v.id());
    return *this;
  }

  std::optional<bool> lookup(Var v) const {
    auto it = bindings_.find(v);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(Var v) const { return bindings_.count(v) != 0; }
  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }

  auto begin() const noexcept { return bindings_.begin(); }
  auto end() const noexcept { return bindings_.end(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<Var, bool> bindings_;
};

/// Truth value of `f` under `a`; every atom in `f` must be bound.
inline bool eval(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      auto v = a.lookup(f.var());
      if (!v) throw UnboundVariable(f.var().id());
      return *v;
    }
    case Formula::Kind::constant:
      return f.value();
    case Formula::Kind::negation:
      return !eval(f.operand(), a);
    case Formula::Kind::conjunction:
      return eval(f.lhs(), a) && eval(f.rhs(), a);
    case Formula::Kind::disjunction:
      return eval(f.lhs(), a) || eval(f.rhs(), a);
    case Formula::Kind::implication:
      return eval(f.rhs(), a) || !eval(f.lhs(), a);
  }
  throw std::logic_error("unknown formula kind");
}

namespace detail {
inline void collect_vars(const Formula& f, std::set<Var>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      out.insert(f.var());
      return;
    case Formula::Kind::constant:
      return;
    case Formula::Kind::negation:
      collect_vars(f.operand(), out);
      return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
  }
}
}  // namespace detail

inline std::set<Var> vars(const Formula& f) {
  std::set<Var> out;
  detail::collect_vars(f, out);
  return out;
}

/// De Morgan: each clause keeps its literal order with every literal negated.
inline DnfFormula negate_cnf(const CnfFormula& cnf) {
  std::vector<Clause> out;
  out.reserve(cnf.clause_count());
  for (const auto& c : cnf.clauses()) {
    Clause neg;
    neg.literals.reserve(c.size());
    for (auto l : c.literals) neg.literals.push_back(~l);
    out.push_back(std::move(neg));
  }
  return DnfFormula(std::move(out), cnf.num_vars());
}

inline Formula literal_to_formula(Literal l) {
  if (l.is_constant()) return Formula::constant(l.constant_value());
  Formula a = Formula::atom(l.var());
  return l.negated() ? negation(a) : a;
}

namespace detail {
template <class Item, class ToFormula>
Formula right_fold(const std::vector<Item>& items, Connective c, ToFormula to_formula) {
  if (items.empty()) return Formula::constant(c == Connective::conjunction);
  Formula acc = to_formula(items.back());
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it)
    acc = c == Connective::conjunction ? conjunction(to_formula(*it), acc) : disjunction(to_formula(*it), acc);
  return acc;
}
}  // namespace detail

/// Right-folded tree; empty conjunction is T, empty disjunction is F.
inline Formula clause_to_formula(const Clause& clause, Connective mode) {
  return detail::right_fold(clause.literals, mode, literal_to_formula);
}

template <Connective Outer>
Formula to_formula(const NormalForm<Outer>& nf) {
  return detail::right_fold(nf.clauses(), Outer, [](const Clause& c) {
    return clause_to_formula(c, NormalForm<Outer>::inner);
  });
}

inline Formula cnf_to_formula(const CnfFormula& cnf) { return to_formula(cnf); }
inline Formula dnf_to_formula(const DnfFormula& dnf) { return to_formula(dnf); }

}  // namespace probsat
