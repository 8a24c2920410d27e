#pragma once

#include "cfcalc/function.hpp"
#include "cfcalc/scene.hpp"
#include "cfcalc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace cfcalc {

/// "simplex<TAB>value" lines in canonical simplex order; zeros omitted unless `all`.
template <class V>
std::string format_table(const BasicConstructibleFunction<V>& f, bool all = false) {
  std::ostringstream os;
  const auto& k = f.ambient();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (all || f[i] != V{}) os << k.simplex(i).to_string() << '\t' << to_string(f[i]) << '\n';
  return os.str();
}

template <class V>
nlohmann::json function_json(const std::string& name, const BasicConstructibleFunction<V>& f, bool all = false) {
  nlohmann::json values = nlohmann::json::array();
  const auto& k = f.ambient();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (all || f[i] != V{})
      values.push_back({{"simplex", k.simplex(i).vertices()}, {"value", detail::to_json(Integer(to_string(f[i])))}});
  return {{"function", name}, {"values", values}};
}

inline std::string format_report(const VerificationReport& r) {
  std::size_t w_check = 5, w_probe = 5, w_exp = 8, w_comp = 8;
  for (const auto& e : r.entries) {
    w_check = std::max(w_check, e.check.size());
    w_probe = std::max(w_probe, e.probe.size());
    w_exp = std::max(w_exp, e.expected.size());
    w_comp = std::max(w_comp, e.computed.size());
  }
  auto cell = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream os;
  os << "scene: " << r.scene << '\n';
  os << cell("check", w_check) << cell("probe", w_probe) << cell("expected", w_exp) << cell("computed", w_comp)
     << "status\n";
  for (const auto& e : r.entries) {
    os << cell(e.check, w_check) << cell(e.probe, w_probe) << cell(e.expected, w_exp) << cell(e.computed, w_comp)
       << to_string(e.status);
    if (!e.note.empty()) os << "  (" << e.note << ")";
    os << '\n';
  }
  std::size_t pass = 0, fail = 0, na = 0;
  for (const auto& e : r.entries) {
    if (e.status == CheckStatus::pass) ++pass;
    else if (e.status == CheckStatus::fail) ++fail;
    else ++na;
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << pass << " passed, " << fail << " failed, " << na
     << " not applicable)\n";
  return os.str();
}

inline nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j{{"check", e.check},
                     {"probe", e.probe},
                     {"expected", e.expected},
                     {"computed", e.computed},
                     {"status", to_string(e.status)}};
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(j);
  }
  return {{"scene", r.scene}, {"passed", r.passed()}, {"entries", entries}};
}

}  // namespace cfcalc
