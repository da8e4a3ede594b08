#include "lelong/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lelong/error.hpp"

namespace lelong {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Input, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(path, "expected a finite number");
  return x;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long>();
}

double number_or(const Json& j, const char* key, const std::string& path, double fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : number(*it, path + "." + key);
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const char* class_name(EigenClass k) {
  switch (k) {
    case EigenClass::PositiveRational: return "rational";
    case EigenClass::PositiveIrrational: return "irrational";
    case EigenClass::Negative: return "negative";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Eigenvalue& l) {
  Json j{{"value", l.value()}, {"class", class_name(l.kind())}};
  if (l.has_fraction()) {
    j["a"] = l.numerator();
    j["b"] = l.denominator();
  }
  return j;
}

Json to_json(const HarmonicSpec& spec) {
  if (spec.is_fourier()) {
    const auto& f = spec.as_fourier();
    Json modes = Json::array();
    for (const auto& m : f.modes) modes.push_back(Json::array({m.k, m.a, m.b}));
    Json j{{"type", "fourier"}, {"b", f.b}, {"a0", f.a0}, {"b0", f.b0}, {"modes", modes}};
    if (f.strip_c) j["strip_c"] = *f.strip_c;
    return j;
  }
  const auto& p = spec.as_poisson();
  return Json{{"type", "poisson"},
              {"boundary", {{"ys", p.boundary.ys}, {"values", p.boundary.values}, {"tail", p.boundary.tail}}},
              {"c_lin", p.c_lin}};
}

Json to_json(const TransversalAtom& a) {
  Json j{{"alpha", Json::array({a.alpha.real(), a.alpha.imag()})}, {"weight", a.weight}, {"spec", to_json(a.harmonic)}};
  if (a.support == AtomSupport::WholeLeaf) j["support"] = "leaf";
  return j;
}

Json to_json(const Current& c) {
  Json atoms = Json::array();
  for (const auto& a : c.atoms()) atoms.push_back(to_json(a));
  return Json{{"lambda", to_json(c.lambda())}, {"atoms", atoms}};
}

Json to_json(const MassResult& m) {
  return Json{{"r", m.r}, {"value", m.value}, {"error_estimate", m.error_estimate}};
}

Json to_json(const LelongEstimate& e) {
  return Json{{"rs", e.rs},
              {"nus", e.nus},
              {"errs", e.errs},
              {"monotone_violation", e.monotone_violation},
              {"monotone_ok", e.monotone_ok},
              {"limit_estimate", e.limit_estimate},
              {"limit_bracket", Json::array({e.limit_bracket.first, e.limit_bracket.second})},
              {"fit", {{"slope", e.fit.slope}, {"intercept", e.fit.intercept}, {"r_squared", e.fit.r_squared}}},
              {"growth", e.growth},
              {"diverging", e.diverging}};
}

Json to_json(const VerificationReport& r) {
  Json observed = Json::array();
  // JSON has no infinity; keep the slot and mark it null.
  for (double x : r.observed) observed.push_back(std::isfinite(x) ? Json(x) : Json(nullptr));
  return Json{{"case_id", r.case_id},        {"lambda", r.lambda},
              {"claim", claim_name(r.claim)}, {"observed", observed},
              {"verdict", verdict_name(r.verdict)}, {"details", r.details}};
}

Json to_json(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Eigenvalue eigenvalue_from_json(const Json& j, const std::string& path) {
  const Json& cls = field(j, "class", path);
  if (!cls.is_string()) bad(path + ".class", "expected a string");
  const std::string c = cls.get<std::string>();
  const bool frac = j.contains("a") || j.contains("b");
  long a = 0, b = 0;
  if (frac) {
    a = integer(field(j, "a", path), path + ".a");
    b = integer(field(j, "b", path), path + ".b");
  }
  std::optional<double> value;
  if (j.contains("value")) value = number(j["value"], path + ".value");
  auto check_value = [&](const Eigenvalue& l) {
    if (value && std::abs(*value - l.value()) > 1e-12 * std::max(1.0, std::abs(l.value())))
      bad(path + ".value", "does not match a/b");
    return l;
  };
  if (c == "rational") {
    if (!frac) bad(path + ".a", "missing");
    return check_value(Eigenvalue::rational(a, b));
  }
  if (c == "irrational") {
    if (!value) bad(path + ".value", "missing");
    return Eigenvalue::irrational(*value);
  }
  if (c == "negative") {
    if (frac) return check_value(Eigenvalue::negative_rational(-a, b));
    if (!value) bad(path + ".value", "missing");
    return Eigenvalue::negative(*value);
  }
  bad(path + ".class", "expected rational, irrational or negative");
}

HarmonicSpec spec_from_json(const Json& j, const std::string& path) {
  const Json& type = field(j, "type", path);
  if (!type.is_string()) bad(path + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "fourier") {
    FourierSpec f;
    if (j.contains("b")) f.b = static_cast<int>(integer(j["b"], path + ".b"));
    f.a0 = number_or(j, "a0", path, 0.0);
    f.b0 = number_or(j, "b0", path, 0.0);
    if (j.contains("strip_c")) f.strip_c = number(j["strip_c"], path + ".strip_c");
    if (j.contains("modes")) {
      const Json& ms = j["modes"];
      if (!ms.is_array()) bad(path + ".modes", "expected an array");
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::string mp = path + ".modes[" + std::to_string(i) + "]";
        if (!ms[i].is_array() || ms[i].size() != 3) bad(mp, "expected [k, a, b]");
        f.modes.push_back({static_cast<int>(integer(ms[i][0], mp + "[0]")), number(ms[i][1], mp + "[1]"),
                           number(ms[i][2], mp + "[2]")});
      }
    }
    return HarmonicSpec::fourier(std::move(f));
  }
  if (t == "poisson") {
    PoissonSpec p;
    const std::string bp = path + ".boundary";
    const Json& bd = field(j, "boundary", path);
    p.boundary.ys = numbers(field(bd, "ys", bp), bp + ".ys");
    p.boundary.values = numbers(field(bd, "values", bp), bp + ".values");
    p.boundary.tail = number_or(bd, "tail", bp, 0.0);
    p.c_lin = number_or(j, "c_lin", path, 0.0);
    return HarmonicSpec::poisson(std::move(p));
  }
  bad(path + ".type", "expected fourier or poisson");
}

Current current_from_json(const Json& j) {
  if (!j.is_object()) bad("current", "expected an object");
  const Eigenvalue l = eigenvalue_from_json(field(j, "lambda", "current"), "lambda");
  const Json& as = field(j, "atoms", "current");
  if (!as.is_array() || as.empty()) bad("atoms", "expected a nonempty array");
  std::vector<TransversalAtom> atoms;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string p = "atoms[" + std::to_string(i) + "]";
    TransversalAtom a;
    const std::vector<double> z = numbers(field(as[i], "alpha", p), p + ".alpha");
    if (z.size() != 2) bad(p + ".alpha", "expected [re, im]");
    a.alpha = {z[0], z[1]};
    a.weight = number(field(as[i], "weight", p), p + ".weight");
    a.harmonic = spec_from_json(field(as[i], "spec", p), p + ".spec");
    if (as[i].contains("support")) {
      const Json& s = as[i]["support"];
      if (s == "leaf") a.support = AtomSupport::WholeLeaf;
      else if (s != "component") bad(p + ".support", "expected component or leaf");
    }
    atoms.push_back(std::move(a));
  }
  return build_current(l, std::move(atoms));
}

Current parse_current(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Input, std::string("malformed JSON: ") + e.what());
  }
  return current_from_json(j);
}

Current load_current(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_current(ss.str());
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int digits) {
  char buf[512];
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string schedule_csv(const LelongEstimate& est) {
  std::string out = "r,nu,err,monotone_violation\n";
  for (std::size_t i = 0; i < est.rs.size(); ++i) {
    out += format_number(est.rs[i]) + ',' + format_number(est.nus[i]) + ',' + format_number(est.errs[i]) + ',' +
           (est.monotone_violation[i] ? "1" : "0") + '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Input, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::Input, "failed writing " + path);
}

}  // namespace lelong
