#pragma once

// Subcommand bodies for the probsat tool. Each takes parsed options plus
// output streams and returns the process exit code, so tests can drive them
// without spawning a process.
//
// Exit codes: 10 satisfiable, 20 unsatisfiable, 0 other success, 1 error,
// 2 bench disagreement.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "probsat/bench.hpp"
#include "probsat/engine.hpp"
#include "probsat/io.hpp"
#include "probsat/oracle.hpp"

namespace probsat::cli {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagree = 2;

struct DecideOptions {
  std::string file;
  bool no_preprocess = false;
  bool memo = false;
  std::size_t max_clauses = 30;
};

struct CountOptions {
  std::string file;
  bool json = false;
  bool memo = false;
  std::size_t max_clauses = 30;
};

struct ProbOptions {
  std::string expression;
  bool table = false;
};

enum class OracleMode { decide, count };

struct BenchCliOptions {
  std::string vars = "10";
  std::string clauses = "3";
  std::size_t per_cell = 1;
  std::uint64_t seed = 1;
  std::uint32_t clause_width = 3;
  std::string out;  // empty or "-" writes to the output stream
};

namespace detail {

/// Reads a DIMACS file ("-" is stdin); diagnostics go to `err`.
inline std::optional<CnfFormula> load(const std::string& path, std::ostream& err) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << "error: cannot open " << path << "\n";
      return std::nullopt;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    io::DimacsResult r = io::parse_dimacs(text);
    for (const auto& w : r.warnings) err << "warning: " << path << ":" << w.to_string() << "\n";
    return std::move(r.cnf);
  } catch (const io::ParseError& e) {
    err << "error: " << path << ":" << e.diagnostic().to_string() << "\n";
    return std::nullopt;
  }
}

inline std::string describe(const DyadicProb& p) { return p.to_string() + " (approx " + p.approx_string() + ")"; }

inline double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

inline int verdict_exit(bool sat) { return sat ? kExitSat : kExitUnsat; }

/// "a:b" or a single value "a".
inline bench::Range parse_range(const std::string& s) {
  auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    std::string a = s.substr(0, colon), b = s.substr(colon + 1);
    auto lo = std::stoull(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    auto hi = std::stoull(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidParams("bad range '" + s + "', expected a:b");
  }
}

}  // namespace detail

inline int cmd_decide(const DecideOptions& opt, std::ostream& out, std::ostream& err) {
  auto cnf = detail::load(opt.file, err);
  if (!cnf) return kExitError;
  engine::EngineConfig config;
  config.preprocess_independent = !opt.no_preprocess;
  config.memoize = opt.memo;
  config.max_clauses = opt.max_clauses;
  try {
    engine::EngineReport r = engine::decide_cnf(*cnf, config);
    out << (r.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
    out << "probability of negation: " << detail::describe(r.probability) << "\n";
    out << "clauses: " << cnf->clause_count() << " (after preprocessing: " << r.clauses_after_preprocess << ")\n";
    out << "recursive calls: " << r.recursive_calls << "\n";
    return detail::verdict_exit(r.satisfiable);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int cmd_count(const CountOptions& opt, std::ostream& out, std::ostream& err) {
  auto cnf = detail::load(opt.file, err);
  if (!cnf) return kExitError;
  engine::EngineConfig config;
  config.memoize = opt.memo;
  config.max_clauses = opt.max_clauses;
  try {
    engine::EngineReport r = engine::count_cnf(*cnf, config);
    DyadicProb p = complement(r.probability);
    if (opt.json) {
      nlohmann::json j = {
          {"models", r.model_count->str()},
          {"probability_num", p.numerator().str()},
          {"probability_exp", p.exponent()},
          {"n", cnf->num_vars()},
          {"clauses", cnf->clause_count()},
          {"calls", r.recursive_calls},
          {"millis", detail::millis(r.elapsed)},
      };
      out << j.dump() << "\n";
    } else {
      out << "models: " << r.model_count->str() << "\n";
      out << "probability: " << detail::describe(p) << "\n";
      out << "recursive calls: " << r.recursive_calls << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int cmd_prob(const ProbOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    io::ParsedFormula parsed = io::parse_formula(opt.expression);
    auto universe = vars(parsed.formula);
    BigInt count = oracle::count_true(parsed.formula, universe);
    DyadicProb p = DyadicProb::from_count(count, universe.size());
    out << "probability: " << detail::describe(p) << "\n";
    out << "satisfying assignments: " << count.str() << " of " << (BigInt(1) << universe.size()).str() << "\n";
    if (opt.table) {
      if (universe.size() > oracle::kTableDumpLimit)
        err << "note: truth table skipped, more than " << oracle::kTableDumpLimit << " variables\n";
      else
        oracle::write_truth_table(out, parsed.formula, parsed.names);
    }
    return kExitOk;
  } catch (const io::ParseError& e) {
    err << "error: " << e.diagnostic().to_string() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int cmd_oracle(OracleMode mode, const std::string& file, std::ostream& out, std::ostream& err) {
  auto cnf = detail::load(file, err);
  if (!cnf) return kExitError;
  try {
    BigInt models = oracle::model_count_cnf(*cnf);
    DyadicProb p = DyadicProb::from_count(models, cnf->num_vars());
    if (mode == OracleMode::decide) {
      bool sat = !models.is_zero();
      out << (sat ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
      out << "probability of negation: " << detail::describe(complement(p)) << "\n";
      return detail::verdict_exit(sat);
    }
    out << "models: " << models.str() << "\n";
    out << "probability: " << detail::describe(p) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int cmd_convert(const std::string& file, std::ostream& out, std::ostream& err) {
  auto cnf = detail::load(file, err);
  if (!cnf) return kExitError;
  out << io::render_dnf(negate_cnf(*cnf)) << "\n";
  return kExitOk;
}

inline int cmd_bench(const BenchCliOptions& opt, std::ostream& out, std::ostream& err) {
  bench::BenchOptions bo;
  std::ofstream file;
  try {
    bo.vars = detail::parse_range(opt.vars);
    bo.clauses = detail::parse_range(opt.clauses);
    bo.per_cell = opt.per_cell;
    bo.seed = opt.seed;
    bo.clause_width = opt.clause_width;
    bench::validate(bo);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::ostream* csv = &out;
  if (!opt.out.empty() && opt.out != "-") {
    file.open(opt.out);
    if (!file) {
      err << "error: cannot write " << opt.out << "\n";
      return kExitError;
    }
    csv = &file;
  }
  *csv << bench::kCsvHeader << "\n";
  try {
    auto rows = bench::run_bench(bo, [&](const bench::BenchRecord& r) { *csv << bench::format_csv_row(r) << "\n"; });
    csv->flush();
    if (!*csv) {
      err << "error: write failed\n";
      return kExitError;
    }
    err << rows.size() << " instances, all checked rows agree\n";
    return kExitOk;
  } catch (const bench::BenchDisagreement& e) {
    csv->flush();
    err << "error: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace probsat::cli
