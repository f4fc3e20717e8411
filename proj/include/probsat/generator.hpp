#pragma once

// Reproducible random k-CNF instances.
//
// The stream is std::mt19937_64 seeded through std::seed_seq with
// {seed low 32 bits, seed high 32 bits, n, C, w}. Both are fully specified by
// the standard, and bounded draws use rejection sampling on raw outputs, so
// a given (n, C, w, seed) produces the same formula on every platform.
// Each clause picks w distinct variables with a partial Fisher-Yates shuffle
// and gives each literal a sign from the top bit of the next draw.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "probsat/errors.hpp"
#include "probsat/formula.hpp"

namespace probsat {

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline std::mt19937_64 instance_rng(std::uint32_t n, std::size_t clauses, std::uint32_t width, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), n,
                    static_cast<std::uint32_t>(clauses), width};
  return std::mt19937_64(seq);
}

inline CnfFormula generate_instance(std::uint32_t n, std::size_t clauses, std::uint32_t width, std::uint64_t seed) {
  if (width < 1 || width > n)
    throw InvalidParams("clause width must be between 1 and the variable count (got w=" + std::to_string(width) +
                        ", n=" + std::to_string(n) + ")");
  auto rng = instance_rng(n, clauses, width, seed);
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);

  std::vector<Clause> out;
  out.reserve(clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    Clause clause;
    for (std::uint32_t i = 0; i < width; ++i) {
      auto j = i + static_cast<std::uint32_t>(uniform_below(rng, n - i));
      std::swap(pool[i], pool[j]);
      clause.literals.push_back(Literal(Var(pool[i]), (rng() >> 63) != 0));
    }
    out.push_back(std::move(clause));
  }
  return CnfFormula(std::move(out), n);
}

}  // namespace probsat
