#ifndef ORECURV_CLI_COMMANDS_HPP
#define ORECURV_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "parse.hpp"
#include "report.hpp"

namespace orecurv::cli {

enum ExitCode { kOk = 0, kInvariant = 1, kParse = 2, kPrecondition = 3, kResource = 4, kInternal = 5 };

int exit_code_for(ErrorCode code);

struct Outcome {
  int exit_code = kOk;
  json report;
  std::string text;  // human-readable rendering
};

struct InputFile {
  std::string path;
  std::string text;
};

InputFile read_input(const std::string& path);

struct DesingOptions {
  std::string method = "alg2";
  int k = 1;
  int trials = 2;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> mod;
  bool compose_lclm = false;
};

Outcome cmd_desing(const InputFile& in, const DesingOptions& opt);

struct ChiOptions {
  std::optional<std::uint64_t> mod;
  std::uint64_t prime_cap = kDefaultPrimeCap;
  bool xi_desing = false;
  bool full = false;
  bool compose_lclm = false;
};

Outcome cmd_chi(const InputFile& in, const ChiOptions& opt);

struct VerifyOptions {
  std::optional<std::string> corpus_dir;
  std::string suite = "all";
  int random = 0;
  std::uint64_t seed = 1;
  std::uint64_t mod = 5;
  std::uint64_t prime_cap = kDefaultPrimeCap;
};

Outcome cmd_verify(const VerifyOptions& opt);

struct BenchOptions {
  std::string corpus_dir;
  int repeat = 10;
  std::optional<std::uint64_t> mod;
  std::uint64_t prime_cap = kDefaultPrimeCap;
};

inline constexpr const char* kCsvHeader = "name,order,xdeg,d1,t_exact_ms,t_xi_desing_ms";

// CSV text, header first, one row per F_p corpus operator (Q operators need --mod).
std::string cmd_bench(const BenchOptions& opt);

}  // namespace orecurv::cli

#endif
