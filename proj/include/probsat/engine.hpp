#pragma once

// Satisfiability and model counting through the probability of the negated
// CNF. For a DNF with head clause A and tail R:
//
//   P(A | R) = P(R) + S(A) - S(A) * P(R | A = T)
//
// where S(A) is the probability of the single conjunction A and the last
// term conditions R on every literal of A being true. The recursion carries
// the conditioning as an assignment environment, so the cost grows with the
// number of clauses (2^C calls) rather than the number of variables.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "probsat/dyadic.hpp"
#include "probsat/errors.hpp"
#include "probsat/formula.hpp"

namespace probsat::engine {

struct EngineConfig {
  /// Drop clauses that share no variable with the rest (decide mode only).
  bool preprocess_independent = true;
  bool memoize = false;
  std::size_t max_clauses = 30;
  /// Return 1 as soon as a head clause is already true under the environment.
  bool short_circuit_one = true;

  void validate() const {
    if (max_clauses < 1) throw InvalidParams("max_clauses must be at least 1");
  }
};

struct EngineReport {
  /// Probability of the negated CNF (after preprocessing, when enabled).
  DyadicProb probability;
  bool satisfiable = false;
  std::optional<BigInt> model_count;
  std::size_t clauses_after_preprocess = 0;
  std::uint64_t recursive_calls = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Probability that a conjunction holds given the bindings in `env`.
///
/// A literal that is false under `env`, or the constant F, yields 0. True
/// literals drop out. Among the remaining literals a complementary pair yields
/// 0, otherwise the result is 1/2^d for d distinct unbound variables.
inline DyadicProb clause_prob(const Clause& clause, const Assignment& env) {
  std::vector<Literal> open;
  open.reserve(clause.size());
  for (Literal l : clause.literals) {
    if (l.is_constant()) {
      if (!l.constant_value()) return DyadicProb::zero();
      continue;
    }
    if (auto bound = env.lookup(l.var())) {
      if (*bound == l.negated()) return DyadicProb::zero();
      continue;
    }
    open.push_back(l);
  }
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  for (std::size_t i = 1; i < open.size(); ++i)
    if (open[i].complementary(open[i - 1])) return DyadicProb::zero();
  return DyadicProb::from_power(open.size());
}

/// Replaces every literal bound in `env` by the constant it evaluates to.
inline std::vector<Clause> substitute(const std::vector<Clause>& clauses, const Assignment& env) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    Clause r;
    r.literals.reserve(c.size());
    for (Literal l : c.literals) {
      std::optional<bool> bound = l.is_constant() ? std::nullopt : env.lookup(l.var());
      r.literals.push_back(bound ? Literal::constant(*bound != l.negated()) : l);
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct MemoKey {
  std::size_t tail_index = 0;
  /// Environment projected on the tail's variables, ascending by id.
  std::vector<std::pair<Var, bool>> bindings;

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(k.tail_index);
    for (const auto& [v, b] : k.bindings)
      h ^= (static_cast<std::size_t>(v.id()) * 2 + b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

inline MemoKey memo_key(std::size_t tail_index, const Assignment& env, const std::set<Var>& tail_vars) {
  MemoKey key{tail_index, {}};
  for (const auto& [v, value] : env)
    if (tail_vars.count(v)) key.bindings.emplace_back(v, value);
  return key;
}

namespace detail {

class Evaluator {
 public:
  Evaluator(std::span<const Clause> clauses, const Assignment& env, const EngineConfig& config) : config_(config) {
    config_.validate();
    if (clauses.size() > config_.max_clauses) throw ClauseLimitExceeded(clauses.size(), config_.max_clauses);

    std::uint32_t max_var = 0;
    for (const auto& c : clauses) max_var = std::max(max_var, c.max_var_id());
    for (const auto& [v, value] : env) max_var = std::max(max_var, v.id());
    env_.assign(max_var + 1, 0);
    for (const auto& [v, value] : env) env_[v.id()] = value ? 1 : -1;

    clauses_.reserve(clauses.size());
    for (const auto& c : clauses) clauses_.push_back(compile(c));

    if (config_.memoize) {
      tail_vars_.resize(clauses_.size() + 1);
      std::set<std::uint32_t> acc;
      for (std::size_t i = clauses_.size(); i-- > 0;) {
        for (const auto& l : clauses_[i].lits) acc.insert(l.var);
        tail_vars_[i].assign(acc.begin(), acc.end());
      }
    }
  }

  DyadicProb run() { return prob(0); }
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  struct Lit {
    std::uint32_t var;
    std::int8_t sign;  // +1 positive, -1 negated
  };
  struct Compiled {
    std::vector<Lit> lits;  // deduplicated, constants removed
    bool contradictory = false;
  };

  static Compiled compile(const Clause& c) {
    Compiled out;
    std::vector<Literal> lits;
    for (Literal l : c.literals) {
      if (l.is_constant()) {
        if (!l.constant_value()) out.contradictory = true;
        continue;
      }
      lits.push_back(l);
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i > 0 && lits[i].complementary(lits[i - 1])) out.contradictory = true;
      out.lits.push_back({lits[i].var_id(), static_cast<std::int8_t>(lits[i].negated() ? -1 : 1)});
    }
    return out;
  }

  DyadicProb head_prob(const Compiled& c) const {
    if (c.contradictory) return DyadicProb::zero();
    std::uint64_t open = 0;
    for (const auto& l : c.lits) {
      auto s = env_[l.var];
      if (s == 0)
        ++open;
      else if (s != l.sign)
        return DyadicProb::zero();
    }
    return DyadicProb::from_power(open);
  }

  MemoKey key_for(std::size_t i) const {
    MemoKey key{i, {}};
    for (auto v : tail_vars_[i])
      if (env_[v] != 0) key.bindings.emplace_back(Var(v), env_[v] > 0);
    return key;
  }

  DyadicProb prob(std::size_t i) {
    ++calls_;
    if (i == clauses_.size()) return DyadicProb::zero();

    std::optional<MemoKey> key;
    if (config_.memoize) {
      key = key_for(i);
      if (auto it = memo_.find(*key); it != memo_.end()) return it->second;
    }

    const Compiled& head = clauses_[i];
    DyadicProb s = head_prob(head);
    DyadicProb result;
    if (i + 1 == clauses_.size()) {
      result = s;
    } else if (s.is_zero()) {
      result = prob(i + 1);
    } else if (s.is_one() && config_.short_circuit_one) {
      result = DyadicProb::one();
    } else {
      DyadicProb rest = prob(i + 1);
      auto mark = trail_.size();
      for (const auto& l : head.lits)
        if (env_[l.var] == 0) {
          env_[l.var] = l.sign;
          trail_.push_back(l.var);
        }
      DyadicProb cond = prob(i + 1);
      while (trail_.size() > mark) {
        env_[trail_.back()] = 0;
        trail_.pop_back();
      }
      // rest + s * (1 - cond) keeps every intermediate inside [0, 1]
      result = add(rest, sub(s, mul(s, cond)));
    }

    if (key) memo_.emplace(std::move(*key), result);
    return result;
  }

  EngineConfig config_;
  std::vector<Compiled> clauses_;
  std::vector<std::int8_t> env_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::vector<std::uint32_t>> tail_vars_;
  std::unordered_map<MemoKey, DyadicProb, MemoKeyHash> memo_;
  std::uint64_t calls_ = 0;
};

}  // namespace detail

/// Exact probability of the disjunction of `clauses` given `env`.
/// Clauses are processed in order, the first one being the head.
inline DyadicProb dnf_prob(std::span<const Clause> clauses, const Assignment& env, const EngineConfig& config,
                           std::uint64_t* calls = nullptr) {
  detail::Evaluator ev(clauses, env, config);
  DyadicProb p = ev.run();
  if (calls) *calls = ev.calls();
  return p;
}

enum class Verdict { tautology, not_tautology };

struct PreprocessResult {
  std::vector<Clause> kept;
  std::optional<Verdict> verdict;
};

/// Removes clauses that cannot affect whether the DNF is a tautology.
///
/// Contradictory clauses go first. Then, while at least two clauses remain,
/// any clause sharing no variable with the others is either always true (the
/// whole DNF is a tautology) or can be dropped. A lone clause has no others to
/// be independent of and is kept. Removal keeps the tautology decision but not
/// the probability.
inline PreprocessResult preprocess_independent(const DnfFormula& dnf) {
  PreprocessResult out;
  for (const auto& c : dnf.clauses())
    if (!clause_prob(c, {}).is_zero()) out.kept.push_back(c);

  bool removed = true;
  while (removed && out.kept.size() >= 2) {
    removed = false;
    std::unordered_map<std::uint32_t, std::size_t> owners;  // var -> clauses containing it
    for (const auto& c : out.kept) {
      std::set<std::uint32_t> ids;
      for (Literal l : c.literals)
        if (!l.is_constant()) ids.insert(l.var_id());
      for (auto id : ids) ++owners[id];
    }
    std::vector<Clause> next;
    for (auto& c : out.kept) {
      bool independent = std::all_of(c.literals.begin(), c.literals.end(), [&](Literal l) {
        return l.is_constant() || owners[l.var_id()] == 1;
      });
      if (!independent) {
        next.push_back(std::move(c));
        continue;
      }
      if (clause_prob(c, {}).is_one()) {
        out.kept = {c};
        out.verdict = Verdict::tautology;
        return out;
      }
      removed = true;
    }
    out.kept = std::move(next);
  }
  if (out.kept.empty()) out.verdict = Verdict::not_tautology;
  return out;
}

namespace detail {

inline BigInt models_from_negation(const DyadicProb& p, std::uint32_t num_vars) {
  if (p.exponent() > num_vars) throw std::logic_error("negation probability finer than the variable count");
  return (BigInt(1) << num_vars) - (p.numerator() << (num_vars - p.exponent()));
}

inline EngineReport run(const CnfFormula& cnf, const EngineConfig& config, bool want_count) {
  config.validate();
  if (cnf.clause_count() > config.max_clauses) throw ClauseLimitExceeded(cnf.clause_count(), config.max_clauses);
  auto start = std::chrono::steady_clock::now();

  DnfFormula dnf = negate_cnf(cnf);
  EngineReport report;
  bool preprocess = config.preprocess_independent && !want_count;
  if (preprocess) {
    PreprocessResult pre = preprocess_independent(dnf);
    report.clauses_after_preprocess = pre.kept.size();
    if (pre.verdict)
      report.probability = *pre.verdict == Verdict::tautology ? DyadicProb::one() : DyadicProb::zero();
    else
      report.probability = dnf_prob(pre.kept, {}, config, &report.recursive_calls);
  } else {
    report.clauses_after_preprocess = dnf.clause_count();
    report.probability = dnf_prob(dnf.clauses(), {}, config, &report.recursive_calls);
    report.model_count = models_from_negation(report.probability, cnf.num_vars());
  }
  report.satisfiable = !report.probability.is_one();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace detail

/// CNF is satisfiable iff its negation is not a tautology.
inline EngineReport decide_cnf(const CnfFormula& cnf, const EngineConfig& config = {}) {
  return detail::run(cnf, config, false);
}

/// Exact model count 2^n * (1 - P(negation)); preprocessing is never applied.
inline EngineReport count_cnf(const CnfFormula& cnf, const EngineConfig& config = {}) {
  return detail::run(cnf, config, true);
}

}  // namespace probsat::engine
