#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "probsat/cli.hpp"

int main(int argc, char** argv) {
  using namespace probsat::cli;

  CLI::App app{"Exact probabilistic SAT decision and model counting"};
  app.require_subcommand(1);

  DecideOptions decide;
  auto* decide_cmd = app.add_subcommand("decide", "decide satisfiability of a DIMACS CNF");
  decide_cmd->add_option("file", decide.file, "DIMACS file, - for stdin")->required();
  decide_cmd->add_flag("--no-preprocess", decide.no_preprocess, "keep independent clauses");
  decide_cmd->add_flag("--memo", decide.memo, "cache sub-results of the recursion");
  decide_cmd->add_option("--max-clauses", decide.max_clauses, "refuse formulas with more clauses")
      ->check(CLI::PositiveNumber);

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "exact model count of a DIMACS CNF");
  count_cmd->add_option("file", count.file, "DIMACS file, - for stdin")->required();
  count_cmd->add_flag("--json", count.json, "print a JSON object");
  count_cmd->add_flag("--memo", count.memo, "cache sub-results of the recursion");
  count_cmd->add_option("--max-clauses", count.max_clauses, "refuse formulas with more clauses")
      ->check(CLI::PositiveNumber);

  ProbOptions prob;
  auto* prob_cmd = app.add_subcommand("prob", "probability of a propositional expression");
  prob_cmd->add_option("expression", prob.expression, "e.g. \"(p & q) | (w & m)\"")->required();
  prob_cmd->add_flag("--table", prob.table, "print the truth table (up to 6 variables)");

  std::string oracle_mode;
  std::string oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "truth-table baseline for decide/count");
  oracle_cmd->add_option("mode", oracle_mode, "decide or count")->required()->check(CLI::IsMember({"decide", "count"}));
  oracle_cmd->add_option("file", oracle_file, "DIMACS file, - for stdin")->required();

  std::string convert_file;
  auto* convert_cmd = app.add_subcommand("convert", "print the DNF negation of a DIMACS CNF");
  convert_cmd->add_option("file", convert_file, "DIMACS file, - for stdin")->required();

  BenchCliOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "engine vs truth-table timing CSV");
  bench_cmd->add_option("--vars", bench.vars, "variable range a:b")->capture_default_str();
  bench_cmd->add_option("--clauses", bench.clauses, "clause range a:b")->capture_default_str();
  bench_cmd->add_option("--per-cell", bench.per_cell, "instances per (n, C) cell")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "base seed; instance j uses seed + j")->capture_default_str();
  bench_cmd->add_option("--clause-width", bench.clause_width, "literals per clause")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV path, stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*decide_cmd) return cmd_decide(decide, std::cout, std::cerr);
  if (*count_cmd) return cmd_count(count, std::cout, std::cerr);
  if (*prob_cmd) return cmd_prob(prob, std::cout, std::cerr);
  if (*oracle_cmd)
    return cmd_oracle(oracle_mode == "decide" ? OracleMode::decide : OracleMode::count, oracle_file, std::cout,
                      std::cerr);
  if (*convert_cmd) return cmd_convert(convert_file, std::cout, std::cerr);
  if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
  return kExitError;
}
