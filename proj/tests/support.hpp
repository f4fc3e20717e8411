#pragma once

// Test-only generators and reference computations. Nothing here calls the
// oracle or engine, so they can check each other against it.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "probsat/dyadic.hpp"
#include "probsat/formula.hpp"

namespace probsat::testkit {

/// Random formula over x1..x{max_vars} with depth at most `depth`.
inline Formula random_formula(std::mt19937_64& rng, std::uint32_t max_vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  int choice = pick(rng);
  switch (choice) {
    case 0:
    case 1: {
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0)
        return Formula::constant(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
      return atom(std::uniform_int_distribution<std::uint32_t>(1, max_vars)(rng));
    }
    case 2:
      return negation(random_formula(rng, max_vars, depth - 1));
    case 3:
      return conjunction(random_formula(rng, max_vars, depth - 1), random_formula(rng, max_vars, depth - 1));
    case 4:
      return disjunction(random_formula(rng, max_vars, depth - 1), random_formula(rng, max_vars, depth - 1));
    default:
      return implication(random_formula(rng, max_vars, depth - 1), random_formula(rng, max_vars, depth - 1));
  }
}

/// Random clause list with arbitrary widths, repeats and complementary pairs allowed.
inline std::vector<Clause> random_clauses(std::mt19937_64& rng, std::uint32_t n, std::size_t count,
                                          std::size_t max_width) {
  std::vector<Clause> out;
  std::uniform_int_distribution<std::size_t> width(0, max_width);
  std::uniform_int_distribution<std::uint32_t> var(1, n);
  for (std::size_t i = 0; i < count; ++i) {
    Clause c;
    for (std::size_t w = width(rng); w > 0; --w) c.literals.push_back(Literal(Var(var(rng)), rng() & 1));
    out.push_back(std::move(c));
  }
  return out;
}

/// Assignment of x1..x{n} from the bits of `row`, x1 as the most significant bit.
inline Assignment row_assignment(std::uint64_t row, std::uint32_t n) {
  Assignment a;
  for (std::uint32_t i = 1; i <= n; ++i) a.bind(Var(i), (row >> (n - i)) & 1);
  return a;
}

/// Counts rows over x1..x{n} by recursive eval, one assignment at a time.
inline std::uint64_t brute_count(const Formula& f, std::uint32_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) c += eval(f, row_assignment(row, n));
  return c;
}

/// Truth-table column of every subformula, built bottom-up over x1..x{n}.
inline std::vector<bool> table_column(const Formula& f, std::uint32_t n) {
  const std::size_t rows = std::size_t{1} << n;
  std::vector<bool> out(rows);
  switch (f.kind()) {
    case Formula::Kind::atom:
      for (std::size_t r = 0; r < rows; ++r) out[r] = (r >> (n - f.var().id())) & 1;
      return out;
    case Formula::Kind::constant:
      out.assign(rows, f.value());
      return out;
    case Formula::Kind::negation: {
      auto a = table_column(f.operand(), n);
      for (std::size_t r = 0; r < rows; ++r) out[r] = !a[r];
      return out;
    }
    default: {
      auto a = table_column(f.lhs(), n);
      auto b = table_column(f.rhs(), n);
      for (std::size_t r = 0; r < rows; ++r) {
        if (f.kind() == Formula::Kind::conjunction)
          out[r] = a[r] && b[r];
        else if (f.kind() == Formula::Kind::disjunction)
          out[r] = a[r] || b[r];
        else
          out[r] = !a[r] || b[r];
      }
      return out;
    }
  }
}

/// P of a conjunction of literals, computed directly.
inline Rational conjunction_prob(const std::vector<Literal>& lits) {
  std::map<std::uint32_t, bool> seen;
  for (Literal l : lits) {
    if (l.is_constant()) {
      if (!l.constant_value()) return 0;
      continue;
    }
    auto [it, inserted] = seen.emplace(l.var_id(), l.negated());
    if (!inserted && it->second != l.negated()) return 0;
  }
  return Rational(1, BigInt(1) << seen.size());
}

/// Inclusion-exclusion over every non-empty subset of clauses.
inline Rational subset_sum_prob(const std::vector<Clause>& clauses) {
  Rational total = 0;
  const std::size_t c = clauses.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<Literal> merged;
    int size = 0;
    for (std::size_t i = 0; i < c; ++i)
      if (mask >> i & 1) {
        ++size;
        merged.insert(merged.end(), clauses[i].literals.begin(), clauses[i].literals.end());
      }
    Rational term = conjunction_prob(merged);
    total += size % 2 ? term : Rational(-term);
  }
  return total;
}

}  // namespace probsat::testkit
