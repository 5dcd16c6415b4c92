#ifndef ORECURV_CLI_SUITES_HPP
#define ORECURV_CLI_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parse.hpp"
#include "orecurv/pcurv.hpp"

namespace orecurv::cli {

struct CheckResult {
  CheckResult(std::string id_, std::string property_) : id(std::move(id_)), property(std::move(property_)) {}

  std::string id;
  std::string property;
  bool passed = true;
  int cases = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;

  // Records one evaluated case; the first failure is kept as the counterexample.
  void record(bool ok, const std::string& witness);
};

struct CorpusEntry {
  std::string path;
  std::string name;
  std::string text;
  OperatorFile file;
  AnyOperator op;  // the operator under test (the primitive LCLM of the lines when compose=lclm)
};

std::vector<CorpusEntry> load_corpus(const std::string& dir);
CorpusEntry load_entry(const std::string& path);

// Operator lines joined with "; ", preceded by the field line.
std::string verbatim(const CorpusEntry& e);
std::string verbatim(const OreP& l);

struct SuiteParams {
  std::vector<std::uint64_t> primes{5};
  std::uint64_t seed = 1;
  std::uint64_t prime_cap = kDefaultPrimeCap;
  int pairs = 0;          // random multiplicativity pairs per prime
  int coprime_pairs = 0;  // random LCLM pairs per prime
  int operators = 0;      // random single operators per prime
  int central = 0;        // random central operators per prime
  int sandwich = 0;       // random sandwich cases per prime
  int denom_pairs = 0;    // random denominator-multiplicativity pairs per prime

  // Every count set to n (central gets a fifth of it, at least one when n > 0).
  static SuiteParams uniform(int n, std::vector<std::uint64_t> primes, std::uint64_t seed);
};

std::vector<CheckResult> run_chi_properties(const SuiteParams& params, const std::vector<CorpusEntry>& corpus);
std::vector<CheckResult> run_denominator_theorem(const SuiteParams& params, const std::vector<CorpusEntry>& corpus);
std::vector<CheckResult> run_desing(const SuiteParams& params, const std::vector<CorpusEntry>& corpus);
CheckResult run_expectations(const std::vector<CorpusEntry>& corpus, std::uint64_t prime_cap);

}  // namespace orecurv::cli

#endif
