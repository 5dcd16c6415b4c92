#include "parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace orecurv::cli {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  enum Kind { Number, X, T, Op, LParen, RParen, End } kind;
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& s, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    int col = static_cast<int>(i) + column;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
    } else if (ch == 'x') {
      out.push_back({Token::X, "x", col});
      ++i;
    } else if (ch == 't') {
      out.push_back({Token::T, "t", col});
      ++i;
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^') {
      out.push_back({Token::Op, std::string(1, ch), col});
      ++i;
    } else if (ch == '(') {
      out.push_back({Token::LParen, "(", col});
      ++i;
    } else if (ch == ')') {
      out.push_back({Token::RParen, ")", col});
      ++i;
    } else {
      fail(line, col, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(s.size()) + column});
  return out;
}

template <class F>
class Parser {
 public:
  Parser(const F& field, const std::string& text, int line, int column)
      : field_(field), line_(line), toks_(tokenize(text, line, column)) {}

  OrePoly<F> run() {
    OrePoly<F> r = expr();
    if (peek().kind != Token::End) fail(line_, peek().col, "unexpected '" + peek().text + "'");
    return r;
  }

 private:
  using Op = OrePoly<F>;

  const Token& peek() const { return toks_[pos_]; }
  bool is_op(char c) const { return peek().kind == Token::Op && peek().text[0] == c; }

  Op constant(const typename F::value_type& v) { return Op::scalar(RatFun<F>(Poly<F>::constant(field_, v))); }

  Op expr() {
    Op r = term();
    while (is_op('+') || is_op('-')) {
      bool minus = is_op('-');
      ++pos_;
      Op t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }

  Op term() {
    Op r = unary();
    while (is_op('*') || is_op('/')) {
      bool divide = is_op('/');
      const Token& at = peek();
      ++pos_;
      Op f = unary();
      if (divide) {
        if (f.order() != 0 || !f.coeffs()[0].is_polynomial() || f.coeffs()[0].num().degree() != 0)
          fail(line_, at.col, "division is only supported by a nonzero constant");
        r = r.left_scale(f.coeffs()[0].inv());
      } else {
        r = ore_mul(r, f);
      }
    }
    return r;
  }

  Op unary() {
    if (is_op('-')) {
      ++pos_;
      return -unary();
    }
    if (is_op('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Op power() {
    Op base = atom();
    if (!is_op('^')) return base;
    const Token& caret = peek();
    ++pos_;
    bool negative = false;
    if (is_op('-')) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Token::Number) fail(line_, peek().col, "exponent must be an integer literal");
    if (negative) fail(line_, caret.col, "negative exponent");
    const std::string digits = peek().text;
    ++pos_;
    if (digits.size() > 6) fail(line_, caret.col, "exponent too large");
    int e = std::stoi(digits);
    Op r = constant(field_.one());
    for (int i = 0; i < e; ++i) r = ore_mul(r, base);
    return r;
  }

  Op atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Number: {
        ++pos_;
        return constant(field_.from_mpz(mpz_class(tok.text)));
      }
      case Token::X:
        ++pos_;
        return Op::scalar(RatFun<F>(Poly<F>::x(field_)));
      case Token::T:
        ++pos_;
        return Op::tau_power(field_, 1);
      case Token::LParen: {
        ++pos_;
        Op r = expr();
        if (peek().kind != Token::RParen) fail(line_, peek().col, "expected ')'");
        ++pos_;
        return r;
      }
      case Token::End:
        fail(line_, tok.col, "unexpected end of expression");
      default:
        fail(line_, tok.col, "unexpected '" + tok.text + "'");
    }
  }

  F field_;
  int line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

template <class F>
OrePoly<F> parse_expression(const F& field, const std::string& text, int line, int column) {
  OrePoly<F> r = Parser<F>(field, text, line, column).run();
  if (r.is_zero()) fail(line, column, "operator is zero");
  return r;
}

template <class F>
Poly<F> parse_poly(const F& field, const std::string& text) {
  OrePoly<F> r = Parser<F>(field, text, 1, 1).run();
  if (r.is_zero()) return Poly<F>(field);
  if (r.order() != 0 || !r.coeffs()[0].is_polynomial()) fail(1, 1, "expected a polynomial in x");
  return r.coeffs()[0].num();
}

OperatorFile parse_operator_file(const std::string& text) {
  OperatorFile file;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    while (start <= raw.size()) {
      std::size_t end = raw.find(';', start);
      if (end == std::string::npos) end = raw.size();
      std::string piece = raw.substr(start, end - start);
      const int column = static_cast<int>(start + piece.find_first_not_of(" \t\r")) + 1;
      start = end + 1;
      std::string seg = trim(piece);
      if (seg.empty()) continue;
      std::size_t eq = seg.find('=');
      if (eq == std::string::npos) {
        file.operators.push_back({seg, line, column});
        continue;
      }
      std::string key = trim(seg.substr(0, eq));
      std::string value = trim(seg.substr(eq + 1));
      if (key == "p") {
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
          fail(line, 1, "field line must be p=<prime> or p=0");
        try {
          file.field = FieldSpec::make(std::stoull(value));
        } catch (const Error& e) {
          fail(line, 1, e.what());
        } catch (const std::out_of_range&) {
          fail(line, 1, "prime out of range");
        }
        file.has_field = true;
      } else if (key == "name") {
        file.name = value;
      } else if (key == "source") {
        file.source = value;
      } else if (!key.empty()) {
        file.metadata[key] = value;
      } else {
        fail(line, 1, "empty key");
      }
    }
  }
  if (!file.has_field) fail(line + 1, 1, "missing field line p=<prime>");
  if (file.operators.empty()) fail(line + 1, 1, "missing operator line");
  return file;
}

OperatorFile read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  OperatorFile f = parse_operator_file(ss.str());
  if (f.name.empty()) {
    std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    f.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return f;
}

AnyOperator parse_operator_line(const OperatorFile& file, std::size_t index) {
  const OperatorLine& op = file.operators.at(index);
  if (file.field.is_rational()) return parse_expression(RationalField(), op.text, op.line, op.column);
  return parse_expression(PrimeField(file.field), op.text, op.line, op.column);
}

AnyOperator parse_operator(const std::string& text) { return parse_operator_line(parse_operator_file(text), 0); }

template OrePoly<PrimeField> parse_expression(const PrimeField&, const std::string&, int, int);
template OrePoly<RationalField> parse_expression(const RationalField&, const std::string&, int, int);
template Poly<PrimeField> parse_poly(const PrimeField&, const std::string&);
template Poly<RationalField> parse_poly(const RationalField&, const std::string&);

}  // namespace orecurv::cli
