#pragma once

// Brute-force truth-table semantics for formula probabilities. This is the
// reference the engine is checked against, so it shares no code with it.
//
// Rows are enumerated as a binary counter over the variable universe sorted
// by id, with the smallest id as the most significant bit.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "probsat/dyadic.hpp"
#include "probsat/errors.hpp"
#include "probsat/formula.hpp"

namespace probsat::oracle {

inline constexpr std::size_t kDefaultVariableLimit = 24;
// Row indices are 64-bit; no override can go past this.
inline constexpr std::size_t kHardVariableLimit = 62;

/// kDefaultVariableLimit, unless PROBSAT_ORACLE_LIMIT holds a number.
inline std::size_t default_variable_limit() {
  if (const char* env = std::getenv("PROBSAT_ORACLE_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultVariableLimit;
}

struct Options {
  std::size_t variable_limit = default_variable_limit();
};

namespace detail {

// Postfix program evaluated on 64 truth-table rows at once.
class BitProgram {
 public:
  BitProgram(const Formula& f, const std::vector<Var>& universe) : universe_(universe) { compile(f); }

  /// Counts rows in [0, 2^k) where the formula holds.
  BigInt count_true() const {
    const std::size_t k = universe_.size();
    const std::uint64_t rows = k >= 6 ? 64 : (std::uint64_t{1} << k);
    const std::uint64_t valid = rows == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
    const std::uint64_t blocks = k >= 6 ? (std::uint64_t{1} << (k - 6)) : 1;

    std::vector<std::uint64_t> masks(k);
    std::vector<std::uint64_t> stack;
    stack.reserve(code_.size());
    BigInt total = 0;
    std::uint64_t partial = 0;
    for (std::uint64_t block = 0; block < blocks; ++block) {
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t bit = k - 1 - j;
        masks[j] = bit < 6 ? kLowPatterns[bit] : (((block >> (bit - 6)) & 1) ? ~std::uint64_t{0} : 0);
      }
      std::uint64_t word = run(masks, stack) & valid;
      partial += static_cast<std::uint64_t>(std::popcount(word));
      if (partial >= (std::uint64_t{1} << 62)) {
        total += partial;
        partial = 0;
      }
    }
    total += partial;
    return total;
  }

  bool eval_row(std::uint64_t row) const {
    const std::size_t k = universe_.size();
    std::vector<std::uint64_t> masks(k);
    for (std::size_t j = 0; j < k; ++j) masks[j] = ((row >> (k - 1 - j)) & 1) ? ~std::uint64_t{0} : 0;
    std::vector<std::uint64_t> stack;
    return run(masks, stack) & 1;
  }

 private:
  enum class Op : std::uint8_t { push_var, push_true, push_false, op_not, op_and, op_or, op_implies };
  struct Instr {
    Op op;
    std::uint32_t slot;
  };

  // bit t of kLowPatterns[s] is (t >> s) & 1
  static constexpr std::uint64_t kLowPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
  };

  void compile(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::atom: {
        auto it = std::lower_bound(universe_.begin(), universe_.end(), f.var());
        if (it == universe_.end() || *it != f.var()) throw UnboundVariable(f.var().id());
        code_.push_back({Op::push_var, static_cast<std::uint32_t>(it - universe_.begin())});
        return;
      }
      case Formula::Kind::constant:
        code_.push_back({f.value() ? Op::push_true : Op::push_false, 0});
        return;
      case Formula::Kind::negation:
        compile(f.operand());
        code_.push_back({Op::op_not, 0});
        return;
      case Formula::Kind::conjunction:
      case Formula::Kind::disjunction:
      case Formula::Kind::implication:
        compile(f.lhs());
        compile(f.rhs());
        code_.push_back({f.kind() == Formula::Kind::conjunction   ? Op::op_and
                         : f.kind() == Formula::Kind::disjunction ? Op::op_or
                                                                  : Op::op_implies,
                         0});
        return;
    }
  }

  std::uint64_t run(const std::vector<std::uint64_t>& masks, std::vector<std::uint64_t>& stack) const {
    stack.clear();
    for (const auto& in : code_) {
      switch (in.op) {
        case Op::push_var:
          stack.push_back(masks[in.slot]);
          break;
        case Op::push_true:
          stack.push_back(~std::uint64_t{0});
          break;
        case Op::push_false:
          stack.push_back(0);
          break;
        case Op::op_not:
          stack.back() = ~stack.back();
          break;
        default: {
          std::uint64_t b = stack.back();
          stack.pop_back();
          std::uint64_t& a = stack.back();
          a = in.op == Op::op_and ? (a & b) : in.op == Op::op_or ? (a | b) : (~a | b);
        }
      }
    }
    return stack.back();
  }

  std::vector<Var> universe_;
  std::vector<Instr> code_;
};

inline std::vector<Var> checked_universe(const Formula& f, const std::set<Var>& over, const Options& opt) {
  for (Var v : vars(f))
    if (!over.count(v)) throw UnboundVariable(v.id());
  auto limit = std::min(opt.variable_limit, kHardVariableLimit);
  if (over.size() > limit) throw TooManyVariables(over.size(), limit);
  return {over.begin(), over.end()};
}

}  // namespace detail

/// Number of assignments over `over` that make `f` true.
inline BigInt count_true(const Formula& f, const std::set<Var>& over, const Options& opt = {}) {
  auto universe = detail::checked_universe(f, over, opt);
  return detail::BitProgram(f, universe).count_true();
}

/// count_true / 2^|over|; `over` defaults to vars(f).
inline DyadicProb probability(const Formula& f, const std::optional<std::set<Var>>& over = std::nullopt,
                              const Options& opt = {}) {
  std::set<Var> universe = over ? *over : vars(f);
  BigInt n = count_true(f, universe, opt);
  return DyadicProb::from_count(std::move(n), universe.size());
}

/// P(alpha | beta) = n(alpha & beta) / n(beta), reduced. Not always dyadic.
inline Rational conditional(const Formula& alpha, const Formula& beta, const Options& opt = {}) {
  std::set<Var> universe = vars(alpha);
  for (Var v : vars(beta)) universe.insert(v);
  BigInt given = count_true(beta, universe, opt);
  if (given.is_zero()) throw ConditionOnContradiction();
  BigInt both = count_true(conjunction(alpha, beta), universe, opt);
  return Rational(both, given);
}

inline bool is_satisfiable(const Formula& f, const Options& opt = {}) { return !probability(f, {}, opt).is_zero(); }
inline bool is_tautology(const Formula& f, const Options& opt = {}) { return probability(f, {}, opt).is_one(); }

inline bool equivalent(const Formula& a, const Formula& b, const Options& opt = {}) {
  std::set<Var> universe = vars(a);
  for (Var v : vars(b)) universe.insert(v);
  // a <-> b holds on every row
  Formula iff = conjunction(implication(a, b), implication(b, a));
  return count_true(iff, universe, opt) == (BigInt(1) << universe.size());
}

inline std::set<Var> first_vars(std::uint32_t n) {
  std::set<Var> out;
  for (std::uint32_t i = 1; i <= n; ++i) out.insert(Var(i));
  return out;
}

/// Satisfying assignments over all declared variables.
inline BigInt model_count_cnf(const CnfFormula& cnf, const Options& opt = {}) {
  auto limit = std::min(opt.variable_limit, kHardVariableLimit);
  if (cnf.num_vars() > limit) throw TooManyVariables(cnf.num_vars(), limit);
  return count_true(cnf_to_formula(cnf), first_vars(cnf.num_vars()), opt);
}

inline constexpr std::size_t kTableDumpLimit = 6;

/// One line per row: the assignment bits in universe order, then the value.
/// `names[i]` labels variable i+1 in the header; missing names print as x<id>.
inline void write_truth_table(std::ostream& out, const Formula& f, const std::vector<std::string>& names = {}) {
  std::set<Var> over = vars(f);
  if (over.size() > kTableDumpLimit) throw TooManyVariables(over.size(), kTableDumpLimit);
  std::vector<Var> universe(over.begin(), over.end());
  detail::BitProgram program(f, universe);
  for (Var v : universe)
    out << (v.id() <= names.size() ? names[v.id() - 1] : "x" + std::to_string(v.id())) << ' ';
  out << "| value\n";
  const std::uint64_t rows = std::uint64_t{1} << universe.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < universe.size(); ++j) out << ((r >> (universe.size() - 1 - j)) & 1) << ' ';
    out << "| " << (program.eval_row(r) ? 1 : 0) << '\n';
  }
}

}  // namespace probsat::oracle
