#pragma once

#include "cfcalc/complex.hpp"
#include "cfcalc/dmodule.hpp"
#include "cfcalc/errors.hpp"
#include "cfcalc/maps.hpp"
#include "cfcalc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cfcalc {

/// Euler obstruction of a stratum: `default_value` on Y, except at the listed simplices.
struct EuSpec {
  Integer default_value = 1;
  std::vector<ProbeValue> overrides;
  bool operator==(const EuSpec&) const = default;
};

struct StratumSpec {
  std::string name;
  std::string support;  ///< subcomplex name; "X" is the whole complex
  int codim = 0;
  Integer multiplicity = 1;
  EuSpec eu;
  bool smooth = true;
  bool operator==(const StratumSpec&) const = default;
};

struct RealFormSpec {
  std::string m;  ///< subcomplex name
  int complex_dim = 1;
  std::optional<VertexMap> conjugation;  ///< moved vertices only
  bool operator==(const RealFormSpec&) const = default;
};

/// Document form of a scene, as read from or written to a scene file.
struct Scene {
  std::string name;
  std::string comment;
  std::vector<Simplex> maximal_simplices;
  std::map<std::string, std::vector<Simplex>> subcomplexes;
  RealFormSpec real_form;
  std::vector<StratumSpec> strata;
  std::vector<Simplex> probes;
  Expectations expect;
  bool operator==(const Scene&) const = default;
};

/// Built objects of a validated scene.
struct SceneModel {
  Scene scene;
  SimplicialComplex complex;
  std::map<std::string, Subcomplex> subcomplexes;
  RealComplexPair pair;
  CharacteristicCycle cycle;

  VerificationReport verify() const { return verify_scene(scene.name, pair, cycle, scene.expect); }
};

inline constexpr const char* whole_complex_name = "X";

namespace detail {

inline std::vector<Simplex> maximal_of(const SimplicialComplex& k, const std::vector<Simplex>& gens) {
  return Subcomplex::closure(k, gens).complex().maximal_simplices();
}

inline void sort_values(std::vector<ProbeValue>& v) {
  std::sort(v.begin(), v.end(), [](const ProbeValue& a, const ProbeValue& b) { return a.at < b.at; });
}

}  // namespace detail

/// Validates a scene and builds its objects. Throws SemanticError with a path.
inline SceneModel instantiate(const Scene& scene) {
  SceneModel out;
  out.scene = scene;
  auto fail = [](std::string path, const std::string& what) -> void { throw SemanticError(std::move(path), what); };

  try {
    out.complex = SimplicialComplex::from_generators(scene.maximal_simplices);
  } catch (const Error& e) {
    fail("complex.maximal_simplices", e.what());
  }
  const auto& k = out.complex;

  out.subcomplexes.emplace(whole_complex_name, Subcomplex::whole(k));
  for (const auto& [name, gens] : scene.subcomplexes) {
    const std::string path = "subcomplexes." + name;
    if (name == whole_complex_name) fail(path, "the name 'X' is reserved for the whole complex");
    for (const auto& g : gens)
      if (!k.contains(g)) fail(path, "generator " + g.to_string() + " is not a simplex of the complex");
    out.subcomplexes.emplace(name, Subcomplex::closure(k, gens));
  }
  auto resolve = [&](const std::string& path, const std::string& name) -> const Subcomplex& {
    auto it = out.subcomplexes.find(name);
    if (it == out.subcomplexes.end()) throw SemanticError(path, "unresolved name '" + name + "'");
    return it->second;
  };

  auto& pair = out.pair;
  pair.x = k;
  pair.m = resolve("real_form.M", scene.real_form.m);
  pair.n = scene.real_form.complex_dim;
  if (pair.n < 1) fail("real_form.complex_dim", "must be a positive integer");
  if (scene.real_form.conjugation) {
    for (const auto& [v, w] : *scene.real_form.conjugation)
      if (!k.has_vertex(v) || !k.has_vertex(w))
        fail("real_form.conjugation." + v, "unknown vertex in '" + v + "' -> '" + w + "'");
    try {
      pair.conj = Involution(k, *scene.real_form.conjugation);
    } catch (const Error& e) {
      fail("real_form.conjugation", e.what());
    }
    if (!(fixed_point_set(*pair.conj) == pair.m)) fail("real_form.conjugation", "fixed point set is not M");
  }
  for (std::size_t i = 0; i < scene.probes.size(); ++i)
    if (!pair.m.contains(scene.probes[i]))
      fail("probes[" + std::to_string(i) + "]", "probe " + scene.probes[i].to_string() + " is not a simplex of M");
  pair.probes = scene.probes;

  std::set<std::string> names;
  for (std::size_t j = 0; j < scene.strata.size(); ++j) {
    const auto& spec = scene.strata[j];
    const std::string path = "strata[" + std::to_string(j) + "]";
    if (spec.name.empty()) fail(path + ".name", "must be nonempty");
    if (!names.insert(spec.name).second) fail(path + ".name", "duplicate stratum name '" + spec.name + "'");
    Stratum s;
    s.name = spec.name;
    s.support = resolve(path + ".Y", spec.support);
    s.codim = spec.codim;
    s.multiplicity = spec.multiplicity;
    s.smooth = spec.smooth;
    if (spec.codim < 0 || spec.codim > pair.n)
      fail(path + ".codim", "must lie in [0, " + std::to_string(pair.n) + "]");
    if (spec.multiplicity <= 0) fail(path + ".multiplicity", "must be a positive integer");
    if (s.support.empty()) fail(path + ".Y", "Y is empty");
    if (!s.support.connected()) fail(path + ".Y", "Y is not connected");
    if (spec.eu.default_value != 1)
      fail(path + ".eu.default", "the Euler obstruction is 1 on the smooth locus, so the default must be 1");
    s.eu = spec.eu.default_value * indicator(s.support);
    for (std::size_t o = 0; o < spec.eu.overrides.size(); ++o) {
      const auto& ov = spec.eu.overrides[o];
      const std::string opath = path + ".eu.overrides[" + std::to_string(o) + "]";
      if (!s.support.contains(ov.at)) fail(opath, "simplex " + ov.at.to_string() + " is not in Y");
      if (spec.smooth && ov.value != 1)
        fail(opath, "smooth stratum requires Eu_Y = 1_Y (closed submanifold), got " + to_string(ov.value) + " at " +
                        ov.at.to_string());
      s.eu.set(ov.at, ov.value);
    }
    for (std::size_t i = 0; i < j; ++i)
      if (out.cycle.strata[i].support == s.support)
        fail(path + ".Y", "same Y as stratum '" + out.cycle.strata[i].name + "'");
    try {
      validate(s);
    } catch (const Error& e) {
      fail(path, e.what());
    }
    if (pair.conj)
      for (std::size_t i = 0; i < k.size(); ++i)
        if (s.support.contains_index(i) && !s.support.contains_index(pair.conj->image_index(i)))
          fail(path + ".Y", "Y is not invariant under the conjugation");
    out.cycle.strata.push_back(std::move(s));
  }

  auto check_values = [&](const std::vector<ProbeValue>& values, const std::string& path) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!pair.m.contains(values[i].at))
        fail(path + "[" + std::to_string(i) + "]", "simplex " + values[i].at.to_string() + " is not in M");
  };
  check_values(scene.expect.hyperfunction_index, "expect.hyperfunction_index");
  check_values(scene.expect.parity, "expect.parity");
  for (std::size_t i = 0; i < scene.expect.parity.size(); ++i)
    if (scene.expect.parity[i].value != 0 && scene.expect.parity[i].value != 1)
      fail("expect.parity[" + std::to_string(i) + "]", "parity values are 0 or 1");
  if (!scene.expect.hyperfunction_index.empty())
    for (std::size_t j = 0; j < out.cycle.strata.size(); ++j)
      if (real_trace(pair, out.cycle.strata[j]).empty())
        fail("strata[" + std::to_string(j) + "].Y", "Y does not meet M, but the scene asserts index values");
  return out;
}

/// Normal form: closures replaced by their maximal simplices, everything sorted,
/// identity entries dropped from the conjugation.
inline Scene canonicalize(Scene s) {
  const auto k = SimplicialComplex::from_generators(s.maximal_simplices);
  s.maximal_simplices = k.maximal_simplices();
  for (auto& [name, gens] : s.subcomplexes) {
    bool known = true;
    for (const auto& g : gens) known = known && k.contains(g);
    if (known) gens = detail::maximal_of(k, gens);
  }
  if (s.real_form.conjugation)
    std::erase_if(*s.real_form.conjugation, [](const auto& kv) { return kv.first == kv.second; });
  for (auto& st : s.strata) detail::sort_values(st.eu.overrides);
  std::sort(s.probes.begin(), s.probes.end());
  s.probes.erase(std::unique(s.probes.begin(), s.probes.end()), s.probes.end());
  detail::sort_values(s.expect.hyperfunction_index);
  detail::sort_values(s.expect.parity);
  return s;
}

// ---------------------------------------------------------------------------
// JSON encoding

namespace detail {

using nlohmann::json;

inline json to_json(const Simplex& s) { return s.vertices(); }

inline json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(n));
  return json(n.str());
}

inline json to_json(const std::vector<ProbeValue>& values, const char* key) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(json{{"at", to_json(v.at)}, {key, to_json(v.value)}});
  return arr;
}

inline json to_json(const std::vector<Simplex>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

/// Indented output where arrays of scalars (simplices, lists of names) stay on
/// one line and every other array or object gets one element per line.
inline void write_compact(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << inner << json(it.key()).dump() << ": ";
      write_compact(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
    return;
  }
  const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
  if (j.is_array() && !j.empty() && !scalars) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      write_compact(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
    return;
  }
  if (j.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << "]";
    return;
  }
  os << j.dump();
}

[[noreturn]] inline void type_error(const std::string& path, const std::string& what) {
  throw SemanticError(path, what);
}

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) type_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) type_error(path.empty() ? key : path + "." + key, "missing key");
  return *it;
}

inline std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) type_error(path, "expected a string");
  return j.get<std::string>();
}

inline Integer as_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto digits = s.substr(!s.empty() && s[0] == '-' ? 1 : 0);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return Integer(s);
  }
  type_error(path, "expected an integer");
}

inline int as_int(const json& j, const std::string& path) {
  const auto v = as_integer(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) type_error(path, "integer out of range");
  return static_cast<int>(v);
}

inline Simplex as_simplex(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) type_error(path, "expected a nonempty array of vertex names");
  std::vector<std::string> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  try {
    return Simplex(std::move(v));
  } catch (const Error& e) {
    type_error(path, e.what());
  }
}

inline std::vector<Simplex> as_simplices(const json& j, const std::string& path) {
  if (!j.is_array()) type_error(path, "expected an array of simplices");
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_simplex(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<ProbeValue> as_values(const json& j, const char* key, const std::string& path) {
  if (!j.is_array()) type_error(path, "expected an array");
  std::vector<ProbeValue> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    out.push_back({as_simplex(member(j[i], "at", p), p + ".at"), as_integer(member(j[i], key, p), p + "." + key)});
  }
  return out;
}

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; }))
      type_error(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

/// Canonical scene text: keys in alphabetical order, simplices sorted.
inline std::string emit_scene(const Scene& raw) {
  using detail::json;
  using detail::to_json;
  const Scene s = canonicalize(raw);
  json doc = json::object();
  doc["name"] = s.name;
  if (!s.comment.empty()) doc["comment"] = s.comment;
  doc["complex"] = json{{"maximal_simplices", to_json(s.maximal_simplices)}};
  json subs = json::object();
  for (const auto& [name, gens] : s.subcomplexes) subs[name] = to_json(gens);
  doc["subcomplexes"] = subs;
  json rf{{"M", s.real_form.m}, {"complex_dim", s.real_form.complex_dim}};
  if (s.real_form.conjugation) rf["conjugation"] = *s.real_form.conjugation;
  doc["real_form"] = rf;
  json strata = json::array();
  for (const auto& st : s.strata)
    strata.push_back(json{{"name", st.name},
                          {"Y", st.support},
                          {"codim", st.codim},
                          {"multiplicity", to_json(st.multiplicity)},
                          {"eu", json{{"default", to_json(st.eu.default_value)}, {"overrides", to_json(st.eu.overrides, "value")}}},
                          {"smooth", st.smooth}});
  doc["strata"] = strata;
  doc["probes"] = to_json(s.probes);
  doc["expect"] = json{{"hyperfunction_index", to_json(s.expect.hyperfunction_index, "value")},
                       {"parity", to_json(s.expect.parity, "value")}};
  std::ostringstream os;
  detail::write_compact(os, doc, 0);
  os << "\n";
  return os.str();
}

/// Parses and fully validates scene text. The result is in canonical form.
inline Scene parse_scene(const std::string& text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    std::string what = e.what();
    if (auto p = what.find("syntax error while parsing"); p != std::string::npos) what = what.substr(p);
    throw SyntaxError(line, col, what);
  }
  if (!doc.is_object()) throw SemanticError("$", "scene must be a JSON object");
  detail::reject_unknown_keys(doc, {"name", "comment", "complex", "subcomplexes", "real_form", "strata", "probes", "expect"}, "");

  Scene s;
  s.name = detail::as_string(detail::member(doc, "name", ""), "name");
  if (auto it = doc.find("comment"); it != doc.end()) s.comment = detail::as_string(*it, "comment");
  const auto& cx = detail::member(doc, "complex", "");
  detail::reject_unknown_keys(cx, {"maximal_simplices"}, "complex");
  s.maximal_simplices = detail::as_simplices(detail::member(cx, "maximal_simplices", "complex"), "complex.maximal_simplices");

  if (auto it = doc.find("subcomplexes"); it != doc.end()) {
    if (!it->is_object()) detail::type_error("subcomplexes", "expected an object");
    for (auto sub = it->begin(); sub != it->end(); ++sub)
      s.subcomplexes[sub.key()] = detail::as_simplices(sub.value(), "subcomplexes." + sub.key());
  }

  const auto& rf = detail::member(doc, "real_form", "");
  detail::reject_unknown_keys(rf, {"M", "complex_dim", "conjugation"}, "real_form");
  s.real_form.m = detail::as_string(detail::member(rf, "M", "real_form"), "real_form.M");
  s.real_form.complex_dim = detail::as_int(detail::member(rf, "complex_dim", "real_form"), "real_form.complex_dim");
  if (auto it = rf.find("conjugation"); it != rf.end() && !it->is_null()) {
    if (!it->is_object()) detail::type_error("real_form.conjugation", "expected an object of vertex -> vertex");
    VertexMap m;
    for (auto e = it->begin(); e != it->end(); ++e) m[e.key()] = detail::as_string(e.value(), "real_form.conjugation." + e.key());
    s.real_form.conjugation = std::move(m);
  }

  const auto& strata = detail::member(doc, "strata", "");
  if (!strata.is_array()) detail::type_error("strata", "expected an array");
  for (std::size_t j = 0; j < strata.size(); ++j) {
    const std::string p = "strata[" + std::to_string(j) + "]";
    const auto& sj = strata[j];
    detail::reject_unknown_keys(sj, {"name", "Y", "codim", "multiplicity", "eu", "smooth"}, p);
    StratumSpec st;
    st.name = detail::as_string(detail::member(sj, "name", p), p + ".name");
    st.support = detail::as_string(detail::member(sj, "Y", p), p + ".Y");
    st.codim = detail::as_int(detail::member(sj, "codim", p), p + ".codim");
    st.multiplicity = detail::as_integer(detail::member(sj, "multiplicity", p), p + ".multiplicity");
    if (auto it = sj.find("smooth"); it != sj.end()) {
      if (!it->is_boolean()) detail::type_error(p + ".smooth", "expected true or false");
      st.smooth = it->get<bool>();
    }
    if (auto it = sj.find("eu"); it != sj.end()) {
      detail::reject_unknown_keys(*it, {"default", "overrides"}, p + ".eu");
      if (auto d = it->find("default"); d != it->end()) st.eu.default_value = detail::as_integer(*d, p + ".eu.default");
      if (auto o = it->find("overrides"); o != it->end()) st.eu.overrides = detail::as_values(*o, "value", p + ".eu.overrides");
    }
    s.strata.push_back(std::move(st));
  }

  if (auto it = doc.find("probes"); it != doc.end()) s.probes = detail::as_simplices(*it, "probes");
  if (auto it = doc.find("expect"); it != doc.end()) {
    detail::reject_unknown_keys(*it, {"hyperfunction_index", "parity"}, "expect");
    if (auto h = it->find("hyperfunction_index"); h != it->end())
      s.expect.hyperfunction_index = detail::as_values(*h, "value", "expect.hyperfunction_index");
    if (auto q = it->find("parity"); q != it->end()) s.expect.parity = detail::as_values(*q, "value", "expect.parity");
  }

  instantiate(s);
  return canonicalize(std::move(s));
}

inline SceneModel load_scene(const std::string& text) { return instantiate(parse_scene(text)); }

}  // namespace cfcalc
