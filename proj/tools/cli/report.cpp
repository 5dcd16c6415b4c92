#include "report.hpp"

#include <cstdio>
#include <set>

namespace orecurv::cli {

json poly_to_json(const PolyP& f) {
  json out = json::array();
  for (auto c : f.coeffs()) out.push_back(c);
  return out;
}

json poly_to_json(const PolyQ& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

PolyP poly_from_json(const PrimeField& field, const json& j) {
  std::vector<std::uint64_t> c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, "expected an unsigned coefficient");
    std::uint64_t x = v.get<std::uint64_t>();
    if (x >= field.characteristic()) throw Error(ErrorCode::ParseError, "coefficient not reduced");
    c.push_back(x);
  }
  return PolyP(field, std::move(c));
}

PolyQ poly_from_json(const RationalField& field, const json& j) {
  std::vector<mpq_class> c;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, "expected a rational string");
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad rational literal");
    q.canonicalize();
    c.push_back(q);
  }
  return PolyQ(field, std::move(c));
}

json center_to_json(const CenterPoly& c) {
  json out = json::array();
  for (const auto& p : c.polys()) out.push_back(poly_to_json(p));
  return out;
}

CenterPoly center_from_json(const PrimeField& field, const json& j) {
  std::vector<PolyP> cs;
  for (const auto& v : j) cs.push_back(poly_from_json(field, v));
  return CenterPoly::from_polys(field, cs);
}

json classes_to_json(const std::vector<SingularityClass>& classes) {
  json out = json::array();
  for (const auto& c : classes)
    out.push_back({{"representative", poly_to_json(c.representative)}, {"multiplicity", c.multiplicity}});
  return out;
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json field_to_json(const FieldSpec& spec) { return {{"characteristic", spec.characteristic}}; }

namespace {

struct Check {
  std::string* why;
  bool ok = true;

  bool fail(const std::string& msg) {
    if (ok && why) *why = msg;
    ok = false;
    return false;
  }

  bool has(const json& j, const char* key) {
    if (!j.contains(key)) return fail(std::string("missing field '") + key + "'");
    return true;
  }

  bool integer(const json& j, const char* key, bool required = true) {
    if (!j.contains(key)) return required ? fail(std::string("missing field '") + key + "'") : true;
    if (!j[key].is_number_integer()) return fail(std::string("field '") + key + "' must be an integer");
    return true;
  }

  bool poly(const json& v, const std::string& what, std::uint64_t p) {
    if (!v.is_array()) return fail(what + " must be a coefficient list");
    for (const auto& c : v) {
      if (p == 0) {
        mpq_class q;
        if (!c.is_string() || q.set_str(c.get<std::string>(), 10) != 0) return fail(what + " has a bad rational");
      } else if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= p) {
        return fail(what + " has a coefficient outside [0, p)");
      }
    }
    if (!v.empty()) {
      const json& last = v.back();
      if ((p == 0 && last == "0") || (p != 0 && last == 0)) return fail(what + " is not trimmed");
    }
    return true;
  }

  bool poly_field(const json& j, const char* key, std::uint64_t p, bool required = true) {
    if (!j.contains(key)) return required ? fail(std::string("missing field '") + key + "'") : true;
    return poly(j[key], key, p);
  }

  bool center(const json& j, const char* key, std::uint64_t p) {
    if (!j.contains(key)) return true;
    if (!j[key].is_array()) return fail(std::string(key) + " must be a list");
    for (const auto& c : j[key]) poly(c, key, p);
    return ok;
  }

  void timings(const json& j) {
    if (!has(j, "timings_ms")) return;
    if (!j["timings_ms"].is_object()) {
      fail("timings_ms must be an object");
      return;
    }
    for (const auto& [k, v] : j["timings_ms"].items())
      if (!v.is_number() || v.get<double>() < 0) fail("timing '" + k + "' must be a nonnegative number");
  }
};

}  // namespace

bool validate_report(const json& r, std::string* why) {
  Check c{why};
  if (!r.is_object()) return c.fail("report must be an object");
  if (!c.has(r, "schema") || r["schema"] != kSchema) return c.fail("schema must be ore-curvature/1");
  if (!c.has(r, "command") || !r["command"].is_string()) return c.fail("command must be a string");
  const std::string cmd = r["command"];

  if (cmd == "verify") {
    if (!c.has(r, "checks") || !r["checks"].is_array()) return c.fail("checks must be a list");
    if (!c.has(r, "passed") || !r["passed"].is_boolean()) return c.fail("passed must be a boolean");
    std::string prev;
    bool all = true;
    for (const auto& ch : r["checks"]) {
      if (!ch.is_object() || !ch.contains("id") || !ch["id"].is_string()) return c.fail("check without id");
      if (!ch.contains("property") || !ch["property"].is_string()) return c.fail("check without property");
      if (!ch.contains("passed") || !ch["passed"].is_boolean()) return c.fail("check without verdict");
      c.integer(ch, "cases");
      if (!prev.empty() && ch["id"].get<std::string>() < prev) return c.fail("checks not sorted by id");
      prev = ch["id"];
      all = all && ch["passed"].get<bool>();
    }
    if (all != r["passed"].get<bool>()) return c.fail("overall verdict disagrees with the checks");
    return c.ok;
  }

  if (cmd != "desing" && cmd != "chi") return c.fail("unknown command '" + cmd + "'");
  if (!c.has(r, "input_digest") || !r["input_digest"].is_string()) return c.fail("input_digest must be a string");
  if (!c.has(r, "field") || !r["field"].is_object() || !r["field"].contains("characteristic") ||
      !r["field"]["characteristic"].is_number_unsigned())
    return c.fail("field.characteristic must be an unsigned integer");
  const std::uint64_t p = r["field"]["characteristic"];
  c.integer(r, "order");
  c.integer(r, "x_degree");
  c.poly_field(r, "lc0", p);
  c.poly_field(r, "lc1", p);
  c.poly_field(r, "rp1", p);
  c.poly_field(r, "tc_bound", p, false);
  c.timings(r);
  if (!c.ok) return false;

  if (cmd == "desing") {
    if (!c.has(r, "method") || !r["method"].is_string()) return c.fail("method must be a string");
    static const std::set<std::string> methods{"alg2", "alg3", "lclm"};
    if (!methods.count(r["method"])) return c.fail("unknown method");
    if (r.contains("witnesses")) {
      if (!r["witnesses"].is_array()) return c.fail("witnesses must be a list");
      for (const auto& w : r["witnesses"]) {
        c.integer(w, "index");
        c.poly_field(w, "lc0", p);
      }
    }
    return c.ok;
  }

  if (p == 0) return c.fail("chi reports need a positive characteristic");
  c.integer(r, "d1");
  c.poly_field(r, "denom_chi", p);
  c.center(r, "prim_chi", p);
  c.center(r, "chi_tilde", p);
  if (!c.has(r, "true_singularity_classes") || !r["true_singularity_classes"].is_array())
    return c.fail("true_singularity_classes must be a list");
  for (const auto& cl : r["true_singularity_classes"]) {
    c.poly_field(cl, "representative", p);
    c.integer(cl, "multiplicity");
  }
  if (r.contains("xi_desing_agrees") && !r["xi_desing_agrees"].is_boolean())
    return c.fail("xi_desing_agrees must be a boolean");
  return c.ok;
}

}  // namespace orecurv::cli
