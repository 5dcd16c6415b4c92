#include <iostream>

#include <CLI/CLI11.hpp>

#include "cli/commands.hpp"

using namespace orecurv;
using namespace orecurv::cli;

namespace {

int emit(const Outcome& o, bool as_json) {
  if (as_json)
    std::cout << o.report.dump(2) << "\n";
  else
    std::cout << o.text;
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desingularization and p-curvature of linear recurrence operators"};
  app.require_subcommand(1);
  bool as_json = false;

  DesingOptions dopt;
  std::string dfile;
  auto* desing = app.add_subcommand("desing", "apparent singularities and order-1 desingularization");
  desing->add_option("file", dfile, "operator file")->required();
  desing->add_option("--method", dopt.method, "alg2, alg3 or lclm")->check(CLI::IsMember({"alg2", "alg3", "lclm"}));
  desing->add_option("--k", dopt.k, "order of the random left factor for --method lclm")->check(CLI::PositiveNumber);
  desing->add_option("--trials", dopt.trials, "trials for --method lclm")->check(CLI::PositiveNumber);
  desing->add_option("--seed", dopt.seed, "random seed");
  desing->add_option("--mod", dopt.mod, "reduce a rational operator modulo this prime");
  desing->add_flag("--compose-lclm", dopt.compose_lclm, "use prim(lclm(L1, L2)) of the first two operators");
  desing->add_flag("--json", as_json, "print the JSON report");

  ChiOptions copt;
  std::string cfile;
  auto* chi_cmd = app.add_subcommand("chi", "characteristic polynomial of the p-curvature");
  chi_cmd->add_option("file", cfile, "operator file")->required();
  chi_cmd->add_option("--mod", copt.mod, "reduce a rational operator modulo this prime");
  chi_cmd->add_option("--prime-cap", copt.prime_cap, "largest accepted characteristic");
  chi_cmd->add_flag("--xi-desing", copt.xi_desing, "also run the truncated pipeline and compare");
  chi_cmd->add_flag("--full", copt.full, "include prim_chi and chi_tilde");
  chi_cmd->add_flag("--compose-lclm", copt.compose_lclm, "use prim(lclm(L1, L2)) of the first two operators");
  chi_cmd->add_flag("--json", as_json, "print the JSON report");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("corpus", vopt.corpus_dir, "directory of .op files");
  verify->add_option("--suite", vopt.suite, "lemma28, main-theorem, desing or all")
      ->check(CLI::IsMember({"lemma28", "main-theorem", "desing", "all"}));
  verify->add_option("--random", vopt.random, "random cases per property")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--mod", vopt.mod, "prime for random cases");
  verify->add_option("--prime-cap", vopt.prime_cap, "largest accepted characteristic");
  verify->add_flag("--json", as_json, "print the JSON summary");

  BenchOptions bopt;
  bool csv = false;
  auto* bench = app.add_subcommand("bench", "time exact chi against the truncated pipeline");
  bench->add_option("corpus", bopt.corpus_dir, "directory of .op files")->required();
  bench->add_option("--repeat", bopt.repeat, "runs to average")->check(CLI::PositiveNumber);
  bench->add_option("--mod", bopt.mod, "prime for rational operators");
  bench->add_option("--prime-cap", bopt.prime_cap, "largest accepted characteristic");
  bench->add_flag("--csv", csv, "CSV output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (*desing) return emit(cmd_desing(read_input(dfile), dopt), as_json);
    if (*chi_cmd) return emit(cmd_chi(read_input(cfile), copt), as_json);
    if (*verify) {
      Outcome o = cmd_verify(vopt);
      int code = emit(o, as_json);
      if (as_json && code != 0) {
        for (const auto& c : o.report["checks"])
          if (c.contains("counterexample")) std::cerr << c["id"].get<std::string>() << ":\n" << c["counterexample"].get<std::string>() << "\n";
      }
      return code;
    }
    if (*bench) {
      std::cout << cmd_bench(bopt);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
