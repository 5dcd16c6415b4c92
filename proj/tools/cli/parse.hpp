#ifndef ORECURV_CLI_PARSE_HPP
#define ORECURV_CLI_PARSE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "orecurv/ore.hpp"

namespace orecurv::cli {

struct OperatorLine {
  std::string text;
  int line = 0;
  int column = 1;
};

// p=<prime> field line, operator expressions in x and t, optional key=value metadata
// (name=, source=, expect.<field>=). Lines may also be separated by ';'.
struct OperatorFile {
  FieldSpec field;
  bool has_field = false;
  std::string name;
  std::string source;
  std::vector<OperatorLine> operators;
  std::map<std::string, std::string> metadata;
};

using AnyOperator = std::variant<OreP, OreQ>;

OperatorFile parse_operator_file(const std::string& text);
OperatorFile read_operator_file(const std::string& path);

template <class F>
OrePoly<F> parse_expression(const F& field, const std::string& text, int line = 1, int column = 1);

// Parses the first operator line of the file.
AnyOperator parse_operator(const std::string& text);
AnyOperator parse_operator_line(const OperatorFile& file, std::size_t index);

// Polynomial in x from the same grammar (no t allowed).
template <class F>
Poly<F> parse_poly(const F& field, const std::string& text);

}  // namespace orecurv::cli

#endif
