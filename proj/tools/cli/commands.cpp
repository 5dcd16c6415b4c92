#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orecurv/desing.hpp"
#include "suites.hpp"

namespace orecurv::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::PrimeTooLarge:
      return kResource;
    case ErrorCode::NotCentral:
    case ErrorCode::PrecisionContract:
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kPrecondition;
  }
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
auto timed(double& ms, Fn&& fn) {
  auto start = Clock::now();
  if constexpr (std::is_void_v<decltype(fn())>) {
    fn();
    ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  } else {
    auto r = fn();
    ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  }
}

struct Loaded {
  OperatorFile file;
  AnyOperator op;
  json timings = json::object();
};

Loaded load(const InputFile& in, bool compose) {
  double parse_ms = 0;
  OperatorFile file;
  AnyOperator first = OreP(PrimeField(2));
  std::optional<AnyOperator> second;
  timed(parse_ms, [&] {
    try {
      file = parse_operator_file(in.text);
      first = parse_operator_line(file, 0);
      if (compose && file.operators.size() >= 2) second = parse_operator_line(file, 1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw Error(ErrorCode::ParseError, e.what());
    }
  });
  if (file.name.empty()) {
    std::string base = in.path.substr(in.path.find_last_of('/') + 1);
    file.name = base.substr(0, base.find_last_of('.'));
  }
  Loaded l{file, first};
  l.timings["parse"] = parse_ms;
  if (compose) {
    if (!second) throw Error(ErrorCode::IndexOutOfRange, "--compose-lclm needs two operator lines");
    double ms = 0;
    l.op = timed(ms, [&] {
      return std::visit(
          [&](const auto& a) -> AnyOperator { return lclm_prim(a, std::get<std::decay_t<decltype(a)>>(*second)); },
          first);
    });
    l.timings["compose_lclm"] = ms;
  }
  return l;
}

// Reduces a rational operator when --mod is given; rejects a conflicting modulus.
AnyOperator apply_mod(const AnyOperator& op, std::optional<std::uint64_t> mod) {
  if (!mod) return op;
  if (const OreP* l = std::get_if<OreP>(&op)) {
    if (l->field().characteristic() != *mod)
      throw Error(ErrorCode::FieldMismatch, "--mod conflicts with the field line of the file");
    return op;
  }
  Reduction r = reduce_mod_p(std::get<OreQ>(op), *mod);
  if (r.order_dropped) throw Error(ErrorCode::DegenerateReduction, "the leading coefficient vanishes modulo " + std::to_string(*mod));
  return r.op;
}

// Long polynomials are abbreviated in the text rendering; JSON always carries them in full.
template <class F>
std::string text_of(const Poly<F>& f, const std::string& var = "x") {
  std::string s = f.to_string(var);
  if (s.size() <= 160) return s;
  return "<degree " + std::to_string(f.degree()) + " polynomial, see --json>";
}

json header(const char* command, const InputFile& in, const OperatorFile& file, const FieldSpec& field) {
  json r;
  r["schema"] = kSchema;
  r["command"] = command;
  r["input_digest"] = input_digest(in.text);
  r["name"] = file.name;
  r["field"] = field_to_json(field);
  return r;
}

std::string field_text(const FieldSpec& f) {
  return f.is_rational() ? "Q" : "F_" + std::to_string(f.characteristic);
}

template <class F>
Outcome desing_typed(const OrePoly<F>& l, const DesingOptions& opt, json r) {
  std::ostringstream text;
  double ms = 0;
  DesingReport<F> d = timed(ms, [&] {
    if (opt.method == "alg2") return lc1_algorithm2(l);
    if (opt.method == "alg3") return lc1_tc1_algorithm3(l);
    if (!is_primitive(l)) throw Error(ErrorCode::NotPrimitive, "operator is not primitive");
    Poly<F> b = lclm_method(l, opt.k, opt.trials, opt.seed);
    Poly<F> c0 = lc0(l);
    return DesingReport<F>{DesingMethod::lclm_mc, c0, b, exact_div(c0, b), std::nullopt, {}};
  });
  r["timings_ms"]["desing"] = ms;
  r["method"] = opt.method;
  r["order"] = l.order();
  r["x_degree"] = l.x_degree();
  r["lc0"] = poly_to_json(d.lc0);
  r["lc1"] = poly_to_json(d.lc1);
  r["rp1"] = poly_to_json(d.rp1);
  if (d.tc_bound) r["tc_bound"] = poly_to_json(*d.tc_bound);
  if (opt.method == "lclm") r["k"] = opt.k;
  json w = json::array();
  for (const auto& x : d.witnesses) w.push_back({{"index", x.index}, {"lc0", poly_to_json(x.lc0)}});
  r["witnesses"] = w;

  text << "name: " << r["name"].get<std::string>() << "\n"
       << "field: " << field_text(l.field().spec()) << "\n"
       << "method: " << opt.method << "\n"
       << "order: " << l.order() << "\n"
       << "x-degree: " << l.x_degree() << "\n"
       << "lc0: " << text_of(d.lc0) << "\n"
       << (opt.method == "alg3" ? "l: " : opt.method == "lclm" ? "lc" + std::to_string(opt.k) + " bound: " : "lc1: ")
       << text_of(d.lc1) << " (x-degree " << d.lc1.degree() << ")\n"
       << "rp1: " << text_of(d.rp1) << "\n";
  if (d.tc_bound) text << "t: " << text_of(*d.tc_bound) << "\n";
  return {kOk, r, text.str()};
}

// deg of N(alpha) with the power of Z removed.
int d1_of(const PolyP& rp1) {
  PolyP n = norm(rp1);
  return n.degree() - valuation(n);
}

}  // namespace

Outcome cmd_desing(const InputFile& in, const DesingOptions& opt) {
  if (opt.method != "alg2" && opt.method != "alg3" && opt.method != "lclm")
    throw Error(ErrorCode::ParseError, "unknown method '" + opt.method + "'");
  Loaded ld = load(in, opt.compose_lclm);
  AnyOperator op = apply_mod(ld.op, opt.mod);
  return std::visit(
      [&](const auto& l) {
        json r = header("desing", in, ld.file, l.field().spec());
        r["timings_ms"] = ld.timings;
        return desing_typed(l, opt, r);
      },
      op);
}

Outcome cmd_chi(const InputFile& in, const ChiOptions& opt) {
  Loaded ld = load(in, opt.compose_lclm);
  if (ld.file.field.is_rational() && !opt.mod)
    throw Error(ErrorCode::NeedsPositiveCharacteristic, "chi needs p > 0 in the file or --mod");
  OreP raw = std::get<OreP>(apply_mod(ld.op, opt.mod));
  if (raw.field().characteristic() > opt.prime_cap)
    throw Error(ErrorCode::PrimeTooLarge, "p = " + std::to_string(raw.field().characteristic()) +
                                              " exceeds the prime cap " + std::to_string(opt.prime_cap));
  OreP l = prim(raw);
  json r = header("chi", in, ld.file, l.field().spec());
  json t = ld.timings;
  double ms = 0;
  ChiResult c = timed(ms, [&] { return chi(l, opt.prime_cap); });
  t["chi_exact"] = ms;
  ms = 0;
  DesingReport<PrimeField> d = timed(ms, [&] { return lc1_algorithm2(l); });
  t["desing"] = ms;
  ms = 0;
  auto classes = timed(ms, [&] { return true_singularity_classes(l, opt.prime_cap); });
  t["classes"] = ms;
  int d1 = d1_of(d.rp1);

  Outcome out;
  std::optional<XiReport> xi;
  if (opt.xi_desing) {
    ms = 0;
    xi = timed(ms, [&] { return xi_p_desing_report(l, opt.prime_cap); });
    t["xi_desing"] = ms;
    r["xi_desing_agrees"] = xi->prim_chi == c.prim_chi;
    if (xi->prim_chi != c.prim_chi) out.exit_code = kInvariant;
  }

  r["order"] = l.order();
  r["x_degree"] = l.x_degree();
  r["lc0"] = poly_to_json(d.lc0);
  r["lc1"] = poly_to_json(d.lc1);
  r["rp1"] = poly_to_json(d.rp1);
  r["d1"] = d1;
  r["denom_chi"] = poly_to_json(c.denom);
  r["true_singularity_classes"] = classes_to_json(classes);
  if (opt.full) {
    r["prim_chi"] = center_to_json(c.prim_chi);
    if (c.chi_tilde) r["chi_tilde"] = center_to_json(*c.chi_tilde);
  }
  r["timings_ms"] = t;
  out.report = r;

  std::ostringstream text;
  text << "name: " << ld.file.name << "\n"
       << "field: " << field_text(l.field().spec()) << "\n"
       << "order: " << l.order() << "\n"
       << "x-degree: " << l.x_degree() << "\n"
       << "lc1: " << text_of(d.lc1) << "\n"
       << "rp1: " << text_of(d.rp1) << "\n"
       << "d1: " << d1 << "\n"
       << "denom_chi: " << text_of(c.denom, "Z") << "\n";
  text << "true singularities:";
  if (classes.empty()) text << " none";
  for (const auto& cl : classes) text << " [" << text_of(cl.representative) << "]^" << cl.multiplicity;
  text << "\n";
  if (opt.full) {
    text << "prim_chi: " << c.prim_chi.to_string() << "\n";
    if (c.chi_tilde) text << "chi_tilde: " << c.chi_tilde->to_string() << "\n";
  }
  if (xi) {
    text << "xi_p_desing: " << (xi->prim_chi == c.prim_chi ? "agrees" : "DISAGREES") << " (precision " << xi->precision
         << ")\n";
    if (xi->prim_chi != c.prim_chi) text << "xi result: " << xi->prim_chi.to_string() << "\n";
  }
  out.text = text.str();
  return out;
}

Outcome cmd_verify(const VerifyOptions& opt) {
  static const std::vector<std::string> suites{"lemma28", "main-theorem", "desing", "all"};
  if (std::find(suites.begin(), suites.end(), opt.suite) == suites.end())
    throw Error(ErrorCode::ParseError, "unknown suite '" + opt.suite + "'");
  if (!opt.corpus_dir && opt.random <= 0)
    throw Error(ErrorCode::IndexOutOfRange, "verify needs a corpus directory or --random N");
  if (!is_prime_u64(opt.mod)) throw Error(ErrorCode::NotPrime, "--mod must be prime");

  std::vector<CorpusEntry> corpus;
  if (opt.corpus_dir) corpus = load_corpus(*opt.corpus_dir);
  SuiteParams params = SuiteParams::uniform(opt.random, {opt.mod}, opt.seed);
  params.prime_cap = opt.prime_cap;

  std::vector<CheckResult> checks;
  auto add = [&](std::vector<CheckResult> cs) { checks.insert(checks.end(), cs.begin(), cs.end()); };
  const bool all = opt.suite == "all";
  if (all || opt.suite == "lemma28") add(run_chi_properties(params, corpus));
  if (all || opt.suite == "main-theorem") add(run_denominator_theorem(params, corpus));
  if (all || opt.suite == "desing") add(run_desing(params, corpus));
  if (!corpus.empty()) checks.push_back(run_expectations(corpus, opt.prime_cap));
  std::sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });

  json r;
  r["schema"] = kSchema;
  r["command"] = "verify";
  r["suite"] = opt.suite;
  r["seed"] = opt.seed;
  r["mod"] = opt.mod;
  r["random"] = opt.random;
  r["corpus"] = opt.corpus_dir ? json(*opt.corpus_dir) : json(nullptr);
  r["corpus_size"] = corpus.size();
  bool passed = true;
  std::ostringstream text;
  json list = json::array();
  for (const auto& c : checks) {
    json j{{"id", c.id}, {"property", c.property}, {"passed", c.passed}, {"cases", c.cases}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (!c.notes.empty()) j["notes"] = c.notes;
    list.push_back(j);
    passed = passed && c.passed;
    text << (c.passed ? "PASS " : "FAIL ") << c.id << " (" << c.cases << " cases): " << c.property << "\n";
    for (const auto& n : c.notes) text << "  note: " << n << "\n";
    if (c.counterexample) text << "  counterexample:\n" << *c.counterexample << "\n";
  }
  r["checks"] = list;
  r["passed"] = passed;
  text << (passed ? "all checks passed" : "verification FAILED") << "\n";
  return {passed ? kOk : kInvariant, r, text.str()};
}

std::string cmd_bench(const BenchOptions& opt) {
  if (opt.repeat < 1) throw Error(ErrorCode::IndexOutOfRange, "--repeat must be positive");
  std::vector<CorpusEntry> corpus = load_corpus(opt.corpus_dir);
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& e : corpus) {
    if (std::holds_alternative<OreQ>(e.op) && !opt.mod) continue;
    AnyOperator op = e.op;
    if (std::holds_alternative<OreQ>(op)) op = apply_mod(op, opt.mod);
    OreP l = prim(std::get<OreP>(op));
    double exact = 0, xi = 0;
    int d1 = 0;
    for (int i = 0; i < opt.repeat; ++i) {
      timed(exact, [&] { (void)chi(l, opt.prime_cap); });
      XiReport x = timed(xi, [&] { return xi_p_desing_report(l, opt.prime_cap); });
      d1 = x.d1;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", exact / opt.repeat, xi / opt.repeat);
    out << e.name << "," << l.order() << "," << l.x_degree() << "," << d1 << "," << buf << "\n";
  }
  return out.str();
}

}  // namespace orecurv::cli
