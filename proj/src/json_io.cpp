#include "hfm/json_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hfm/error.hpp"

namespace hfm {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

// Exact value of a decimal literal such as "-12.5e-3", or of "p/q".
std::optional<Rational> parse_exact(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    try {
      Rational q{std::string(s), 10};
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return q;
    } catch (...) {
      return std::nullopt;
    }
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string digits;
  int scale = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      any = true;
      if (dot) ++scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return std::nullopt;
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr == s.data() + i) return std::nullopt;
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (i != s.size()) return std::nullopt;
  mpz_class num(digits, 10), ten = 10, p;
  long shift = exponent - scale;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
  Rational q = shift >= 0 ? Rational(num * p) : Rational(num, p);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_exact(const Rational& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return q.get_str();
  int k = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
  mpz_class n = q.get_num() * scale / q.get_den();
  bool negative = n < 0;
  std::string s = mpz_class(abs(n)).get_str();
  if (k > 0) {
    if (static_cast<int>(s.size()) <= k) s = std::string(k - s.size() + 1, '0') + s;
    s.insert(s.size() - k, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return negative ? "-" + s : s;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec == std::errc() && ptr == s.data() + s.size()) return x;
  }
  fail(path, "expected a decimal number");
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  if (j.is_number_float() || j.is_string()) {
    std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    if (auto q = parse_exact(text)) return *q;
  }
  fail(path, "expected an exact decimal or p/q value");
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json_text(text, path);
}

// ------------------------------------------------------------------ elements

Json element_to_json(const Element& x) {
  const auto& f = x.field();
  switch (f.kind()) {
    case HyperfieldKind::Krasner:
    case HyperfieldKind::Sign:
    case HyperfieldKind::FiniteField: return x.integer();
    case HyperfieldKind::Tropical: return format_exact(x.rational());
    case HyperfieldKind::Rational: return x.rational().get_str();
    case HyperfieldKind::Triangle: return format_double(x.real());
    case HyperfieldKind::Phase:
      if (x.is_zero()) return 0;
      return Json{{"angle", x.real()}};
  }
  return nullptr;
}

Element element_from_json(const Hyperfield& f, const Json& j, const std::string& path) {
  try {
    switch (f.kind()) {
      case HyperfieldKind::Krasner:
      case HyperfieldKind::Sign:
        if (!j.is_number_integer()) fail(path, "expected an integer element of " + f.name());
        return f.kind() == HyperfieldKind::Krasner ? Element::krasner(j.get<int>()) : Element::sign(j.get<int>());
      case HyperfieldKind::FiniteField:
        if (!j.is_number_integer()) fail(path, "expected an integer residue");
        return Element::in(f, j.get<std::int64_t>());
      case HyperfieldKind::Tropical:
      case HyperfieldKind::Rational: return Element::in(f, parse_rational(j, path));
      case HyperfieldKind::Triangle: return Element::triangle(parse_double(j, path));
      case HyperfieldKind::Phase:
        if (j.is_number() && j.get<double>() == 0) return f.zero();
        if (j.is_object()) return Element::phase_angle(parse_double(member(j, "angle", path), path + ".angle"), f.involution());
        fail(path, "expected {\"angle\": radians} or 0");
    }
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    fail(path, msg);
  }
  fail(path, "unsupported hyperfield");
}

// ------------------------------------------------------------------ ground sets

Json ground_set_to_json(const GroundSet& g) {
  Json out = Json::array();
  for (const auto& l : g.labels()) {
    if (g.numeric()) {
      out.push_back(std::stoll(l));
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroundSet ground_set_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> labels;
  bool numeric = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_number_integer()) {
      labels.push_back(std::to_string(j[i].get<long long>()));
    } else if (j[i].is_string()) {
      labels.push_back(j[i].get<std::string>());
      numeric = false;
    } else {
      fail(path + "[" + std::to_string(i) + "]", "labels must be integers or strings");
    }
  }
  try {
    return GroundSet(std::move(labels), numeric);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

namespace {

std::string label_of(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  fail(path, "labels must be integers or strings");
}

Json label_json(const GroundSet& g, int e) {
  if (g.numeric()) return std::stoll(g.label(e));
  return g.label(e);
}

Hyperfield field_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a hyperfield name");
  try {
    return Hyperfield::parse(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json subset_to_json(const GroundSet& g, Subset s) {
  Json out = Json::array();
  for (int e : elements(s)) out.push_back(label_json(g, e));
  return out;
}

Subset subset_from_json(const GroundSet& g, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  Subset s = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    std::string l = label_of(j[i], p);
    int e;
    try {
      e = g.index_of(l);
    } catch (const InputError& err) {
      fail(p, err.what());
    }
    if (contains(s, e)) fail(p, "repeated label " + l);
    s |= bit(e);
  }
  return s;
}

// ------------------------------------------------------------------ vectors and signatures

Json fvector_to_json(const FVector& x, const GroundSet& g) {
  Json entries = Json::object();
  for (int e : elements(x.support())) entries[g.label(e)] = element_to_json(x[e]);
  return Json{{"hyperfield", x.field().name()}, {"entries", entries}};
}

FVector fvector_from_json(const Json& j, const Hyperfield& field, const GroundSet& g, const std::string& path) {
  const Json* entries = &j;
  std::string epath = path;
  if (j.is_object() && j.contains("entries")) {
    if (j.contains("hyperfield") && !(field_from_json(j["hyperfield"], path + ".hyperfield") == field))
      fail(path + ".hyperfield", "does not match the enclosing hyperfield " + field.name());
    entries = &j["entries"];
    epath = path + ".entries";
  }
  if (!entries->is_object()) fail(epath, "expected an object mapping labels to elements");
  FVector x = FVector::zero(field, g.size());
  for (const auto& [label, value] : entries->items()) {
    int e;
    try {
      e = g.index_of(label);
    } catch (const InputError& err) {
      fail(epath + "." + label, err.what());
    }
    x.set(e, element_from_json(field, value, epath + "." + label));
  }
  return x;
}

Json signature_to_json(const Signature& sig) {
  Json circuits = Json::array();
  for (const auto& x : sig.vectors) circuits.push_back(fvector_to_json(x, sig.ground));
  return Json{{"hyperfield", sig.field.name()}, {"ground_set", ground_set_to_json(sig.ground)}, {"circuits", circuits}};
}

Signature signature_from_json(const Json& j, std::vector<std::string>* warnings) {
  Signature sig;
  sig.field = field_from_json(member(j, "hyperfield", "$"), "$.hyperfield");
  sig.ground = ground_set_from_json(member(j, "ground_set", "$"), "$.ground_set");
  const Json* list = nullptr;
  std::string key = "circuits";
  if (j.contains("circuits")) {
    list = &j["circuits"];
  } else if (j.contains("cocircuits")) {
    list = &j["cocircuits"];
    key = "cocircuits";
  } else {
    fail("$", "missing field \"circuits\"");
  }
  if (!list->is_array()) fail("$." + key, "expected an array of vectors");
  for (std::size_t i = 0; i < list->size(); ++i)
    sig.vectors.push_back(fvector_from_json((*list)[i], sig.field, sig.ground, "$." + key + "[" + std::to_string(i) + "]"));
  int removed = normalize_signature(sig);
  if (removed > 0 && warnings)
    warnings->push_back("collapsed " + std::to_string(removed) + " duplicate projective class" + (removed > 1 ? "es" : ""));
  return sig;
}

// ------------------------------------------------------------------ GP functions and matroids

Json gp_to_json(const GPFunction& phi) {
  Json values = Json::array();
  for (Subset s : phi.support())
    values.push_back(Json{{"subset", subset_to_json(phi.ground(), s)}, {"value", element_to_json(phi.value(s))}});
  return Json{{"hyperfield", phi.field().name()},
              {"ground_set", ground_set_to_json(phi.ground())},
              {"rank", phi.rank()},
              {"values", values}};
}

GPFunction gp_from_json(const Json& j) {
  Hyperfield field = field_from_json(member(j, "hyperfield", "$"), "$.hyperfield");
  GroundSet g = ground_set_from_json(member(j, "ground_set", "$"), "$.ground_set");
  const Json& r = member(j, "rank", "$");
  if (!r.is_number_integer() || r.get<int>() < 0 || r.get<int>() > g.size()) fail("$.rank", "expected an integer in [0, |E|]");
  GPFunction phi(field, g, r.get<int>());
  const Json& values = member(j, "values", "$");
  if (!values.is_array()) fail("$.values", "expected an array");
  std::vector<bool> seen(std::size_t{1} << g.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string p = "$.values[" + std::to_string(i) + "]";
    Subset s = subset_from_json(g, member(values[i], "subset", p), p + ".subset");
    if (cardinality(s) != phi.rank()) fail(p + ".subset", "size differs from the rank");
    if (seen[s]) fail(p + ".subset", "subset listed twice");
    seen[s] = true;
    phi.set(s, element_from_json(field, member(values[i], "value", p), p + ".value"));
  }
  return phi;
}

Json matroid_to_json(const Matroid& m, const GroundSet& g) {
  Json circuits = Json::array();
  for (Subset c : m.circuits()) circuits.push_back(subset_to_json(g, c));
  return Json{{"ground_set", ground_set_to_json(g)}, {"circuits", circuits}};
}

Matroid matroid_from_json(const Json& j, GroundSet* ground) {
  GroundSet g = ground_set_from_json(member(j, "ground_set", "$"), "$.ground_set");
  const Json& list = member(j, "circuits", "$");
  if (!list.is_array()) fail("$.circuits", "expected an array of label lists");
  std::vector<Subset> circuits;
  for (std::size_t i = 0; i < list.size(); ++i)
    circuits.push_back(subset_from_json(g, list[i], "$.circuits[" + std::to_string(i) + "]"));
  if (ground) *ground = g;
  return Matroid::from_circuits(g.size(), circuits);
}

// ------------------------------------------------------------------ reports

Json witness_to_json(const Witness& w, const GroundSet& g) {
  Json vectors = Json::array();
  for (const auto& v : w.vectors) vectors.push_back(fvector_to_json(v, g));
  Json els = Json::array();
  for (int e : w.elements) els.push_back(label_json(g, e));
  Json out{{"axiom", w.axiom}, {"message", w.message}, {"vectors", vectors}, {"elements", els}};
  if (w.basis) out["basis"] = subset_to_json(g, w.basis);
  return out;
}

Json gp_witness_to_json(const GPWitness& w, const GroundSet& g) {
  Json terms = Json::array();
  for (const auto& t : w.terms) terms.push_back(element_to_json(t));
  Json out{{"axiom", w.axiom},
           {"message", w.message},
           {"I", subset_to_json(g, from_elements(w.I))},
           {"J", subset_to_json(g, from_elements(w.J))},
           {"terms", terms}};
  if (!w.terms.empty() && w.terms.front().field().kind() == HyperfieldKind::Phase)
    out["phase_margin"] = phase_zero_margin(w.terms);
  return out;
}

Json classification_to_json(const Classification& c, const GroundSet& g) {
  Json out{{"verdict", verdict_name(c.verdict)}};
  if (c.witness) out["witness"] = witness_to_json(*c.witness, g);
  return out;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json axioms = Json::array();
  auto one = [](const AxiomCheck& a) {
    Json j{{"name", a.name}, {"passed", a.passed}};
    if (!a.passed) j["witness"] = a.witness;
    return j;
  };
  for (const auto& a : r.axioms) axioms.push_back(one(a));
  return Json{{"hyperfield", r.field.name()},
              {"exhaustive", r.exhaustive},
              {"all_passed", r.all_passed()},
              {"axioms", axioms},
              {"double_distributivity", one(r.double_distributivity)}};
}

}  // namespace hfm
