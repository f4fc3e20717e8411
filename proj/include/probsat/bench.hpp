#pragma once

// Engine vs truth-table timing over a grid of (n, C) cells.
//
// Clause-exponential work beats variable-exponential work when
// 2^n > C * 2^C, i.e. n > C + log2(C). Every row records that prediction next
// to measured times, and rows where both sides ran must agree on the verdict.
//
// n is the declared variable count of the generated instance, which can be
// larger than the number of variables the clauses actually mention.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "probsat/engine.hpp"
#include "probsat/errors.hpp"
#include "probsat/generator.hpp"
#include "probsat/oracle.hpp"

namespace probsat::bench {

struct BenchRecord {
  std::uint32_t n = 0;
  std::size_t clauses = 0;
  std::uint64_t seed = 0;
  double engine_ms = 0;
  std::optional<double> oracle_ms;
  std::uint64_t engine_calls = 0;
  bool crossover_predicted = false;
  std::optional<bool> agree;

  /// agree is present exactly when the oracle ran, and must then be true.
  bool valid() const { return agree.has_value() == oracle_ms.has_value() && agree.value_or(true); }
};

/// n > C + log2(C), evaluated exactly in integers. Requires C >= 1.
inline bool crossover_predicted(std::uint64_t n, std::uint64_t clauses) {
  if (clauses == 0) throw InvalidParams("crossover predicate needs at least one clause");
  if (n <= clauses) return false;
  std::uint64_t gap = n - clauses;
  return gap >= 64 || (std::uint64_t{1} << gap) > clauses;
}

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct BenchOptions {
  Range vars{10, 10};
  Range clauses{3, 3};
  std::size_t per_cell = 1;
  std::uint64_t seed = 1;
  std::uint32_t clause_width = 3;
  engine::EngineConfig engine;
  oracle::Options oracle;
};

class BenchDisagreement : public Error {
 public:
  explicit BenchDisagreement(BenchRecord r)
      : Error("engine and oracle disagree on n=" + std::to_string(r.n) + " C=" + std::to_string(r.clauses) +
              " seed=" + std::to_string(r.seed)),
        record_(r) {}
  const BenchRecord& record() const noexcept { return record_; }

 private:
  BenchRecord record_;
};

inline void validate(const BenchOptions& opt) {
  if (opt.vars.lo > opt.vars.hi || opt.clauses.lo > opt.clauses.hi) throw InvalidParams("empty range");
  if (opt.clauses.lo < 1) throw InvalidParams("clause range must start at 1 or more");
  if (opt.vars.hi > UINT32_MAX) throw InvalidParams("variable range too large");
  if (opt.per_cell < 1) throw InvalidParams("--per-cell must be at least 1");
  if (opt.clause_width < 1 || opt.clause_width > opt.vars.lo)
    throw InvalidParams("clause width must be between 1 and the smallest variable count");
}

/// Runs every cell in (n, C, seed) order. `on_row` sees each record as soon as
/// it is measured; a disagreement throws after reporting the offending row.
inline std::vector<BenchRecord> run_bench(const BenchOptions& opt,
                                          const std::function<void(const BenchRecord&)>& on_row = {}) {
  validate(opt);
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  engine::EngineConfig config = opt.engine;
  config.max_clauses = std::max<std::size_t>(config.max_clauses, opt.clauses.hi);

  std::vector<BenchRecord> rows;
  for (std::uint64_t n = opt.vars.lo; n <= opt.vars.hi; ++n) {
    for (std::uint64_t c = opt.clauses.lo; c <= opt.clauses.hi; ++c) {
      for (std::size_t j = 0; j < opt.per_cell; ++j) {
        BenchRecord r;
        r.n = static_cast<std::uint32_t>(n);
        r.clauses = c;
        r.seed = opt.seed + j;
        r.crossover_predicted = crossover_predicted(n, c);
        CnfFormula cnf = generate_instance(r.n, c, opt.clause_width, r.seed);

        auto t0 = clock::now();
        engine::EngineReport report = engine::decide_cnf(cnf, config);
        r.engine_ms = ms(clock::now() - t0);
        r.engine_calls = report.recursive_calls;

        if (n <= std::min(opt.oracle.variable_limit, oracle::kHardVariableLimit)) {
          auto t1 = clock::now();
          bool sat = oracle::model_count_cnf(cnf, opt.oracle) > 0;
          r.oracle_ms = ms(clock::now() - t1);
          r.agree = sat == report.satisfiable;
        }
        rows.push_back(r);
        if (on_row) on_row(r);
        if (r.agree == false) throw BenchDisagreement(r);
      }
    }
  }
  return rows;
}

inline constexpr std::string_view kCsvHeader = "n,C,seed,engine_ms,oracle_ms,engine_calls,crossover_predicted,agree";

inline std::string format_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << r.n << ',' << r.clauses << ',' << r.seed << ',' << r.engine_ms << ',';
  if (r.oracle_ms) os << *r.oracle_ms;
  os << ',' << r.engine_calls << ',' << (r.crossover_predicted ? "true" : "false") << ',';
  if (r.agree) os << (*r.agree ? "true" : "false");
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = line.find(',', pos);
    out.emplace_back(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos) return out;
    pos = comma + 1;
  }
}

inline bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InvalidParams("expected true/false, got '" + s + "'");
}

}  // namespace detail

/// Reads CSV produced by format_csv_row, header included.
inline std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw InvalidParams("missing bench CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = detail::split_commas(line);
    if (f.size() != 8) throw InvalidParams("bench CSV row needs 8 fields: " + line);
    try {
      BenchRecord r;
      r.n = static_cast<std::uint32_t>(std::stoul(f[0]));
      r.clauses = std::stoull(f[1]);
      r.seed = std::stoull(f[2]);
      r.engine_ms = std::stod(f[3]);
      if (!f[4].empty()) r.oracle_ms = std::stod(f[4]);
      r.engine_calls = std::stoull(f[5]);
      r.crossover_predicted = detail::parse_bool(f[6]);
      if (!f[7].empty()) r.agree = detail::parse_bool(f[7]);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw InvalidParams("malformed bench CSV row: " + line);
    }
  }
  return out;
}

}  // namespace probsat::bench
