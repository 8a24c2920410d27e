#pragma once

#include "cfcalc/calculus.hpp"
#include "cfcalc/dmodule.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace cfcalc {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "n/a";
  }
  return "?";
}

struct CheckEntry {
  std::string check;
  std::string probe;  ///< simplex "a,b", or "*" for whole-function checks
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
  std::string note;

  bool operator==(const CheckEntry&) const = default;
};

struct VerificationReport {
  std::string scene;
  std::vector<CheckEntry> entries;

  bool passed() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
  }

  std::vector<CheckEntry> failures() const {
    std::vector<CheckEntry> out;
    for (const auto& e : entries)
      if (e.status == CheckStatus::fail) out.push_back(e);
    return out;
  }

  /// Entries for one check name.
  std::vector<CheckEntry> of(const std::string& check) const {
    std::vector<CheckEntry> out;
    for (const auto& e : entries)
      if (e.check == check) out.push_back(e);
    return out;
  }
};

struct ProbeValue {
  Simplex at;
  Integer value;
  bool operator==(const ProbeValue&) const = default;
};

/// Values a scene asserts at its probes, independent of the engine.
struct Expectations {
  std::vector<ProbeValue> hyperfunction_index;
  std::vector<ProbeValue> parity;
  bool operator==(const Expectations&) const = default;
};

namespace detail {

inline CheckEntry compare(std::string check, const Simplex& at, const Integer& expected, const Integer& computed,
                          std::string note = {}) {
  return {std::move(check), at.to_string(), to_string(expected), to_string(computed),
          expected == computed ? CheckStatus::pass : CheckStatus::fail, std::move(note)};
}

/// Whole-function comparison; reports the first mismatching simplex.
inline CheckEntry compare_functions(std::string check, const ConstructibleFunction& expected,
                                    const ConstructibleFunction& computed, std::string note) {
  const auto& k = expected.ambient();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (expected[i] != computed[i])
      return {std::move(check), "*", "identity", "differs at " + k.simplex(i).to_string() + ": " +
                                                     to_string(expected[i]) + " vs " + to_string(computed[i]),
              CheckStatus::fail, std::move(note)};
  return {std::move(check), "*", "identity", "holds", CheckStatus::pass, std::move(note)};
}

}  // namespace detail

/// Runs every applicable identity on a scene and compares it to `expect`.
///
/// Checks, by name:
///   base_change             i^!(k_! Eu) = k'_!(i'^! Eu) for each stratum
///   boundary_parity         i^* j_* j^* phi is even at probes (conjugation present)
///   conjugation_invariance  phi is invariant under the conjugation
///   dimension_formula       hyperfunction index = sum m_j 1_{M_j} (all strata smooth)
///   expected_index          hyperfunction index vs the scene's asserted values
///   expected_parity         parity index vs the scene's asserted values
///   orbit_parity            Euler integral of phi is even and equals that of pi_* phi
///                           (strongly free conjugation)
///   parity_formula          hyperfunction index mod 2 = parity index
///   shriek_indicator        i^!(1_Y) = (-1)^(n-codim) 1_{M_j} off the singular locus
///   triangle_identity       i^* phi = i^! phi + i^* j_* j^* phi
/// where phi is the solution index. Entries are sorted by check, then probe.
inline VerificationReport verify_scene(const std::string& name, const RealComplexPair& pair,
                                       const CharacteristicCycle& cc, const Expectations& expect = {}) {
  validate(pair, cc);
  VerificationReport report{name, {}};
  auto& out = report.entries;
  const auto& msub = pair.m;
  const auto& mk = msub.complex();

  const auto phi = solution_index(cc, pair.x);
  const auto hyper = signed_by(pair.n, shriek_restrict(msub, phi));
  const auto parity = parity_index(pair, cc);

  const Stratum* singular = nullptr;
  for (const auto& s : cc.strata)
    if (!s.smooth && !singular) singular = &s;
  if (singular) {
    out.push_back({"dimension_formula", "*", "-", "-", CheckStatus::not_applicable,
                   "singular stratum '" + singular->name + "'"});
  } else {
    const auto dim = hyperfunction_dimension(pair, cc);
    for (const auto& p : pair.probes) {
      const auto i = mk.index_of(p);
      out.push_back(detail::compare("dimension_formula", p, dim[i], hyper[i]));
    }
  }

  for (const auto& p : pair.probes) {
    const auto i = mk.index_of(p);
    out.push_back(detail::compare("parity_formula", p, Integer(parity[i].bit() ? 1 : 0), Integer(odd(hyper[i]) ? 1 : 0)));
  }

  for (const auto& s : cc.strata) {
    const auto mj = real_trace(pair, s);
    const auto lhs = shriek_restrict(msub, indicator(s.support));
    for (const auto& p : pair.probes) {
      const auto i = mk.index_of(p);
      const auto xi = msub.to_parent(i);
      const std::string note = "stratum '" + s.name + "'";
      if (s.singular_at(xi)) {
        out.push_back({"shriek_indicator", p.to_string(), "-", to_string(lhs[i]), CheckStatus::not_applicable,
                       note + ": singular point"});
        continue;
      }
      const Integer expected = mj.contains_index(xi) ? signed_by(pair.n - s.codim, Integer(1)) : Integer(0);
      out.push_back(detail::compare("shriek_indicator", p, expected, lhs[i], note));
    }
  }

  for (const auto& s : cc.strata) {
    const auto mj_in_x = real_trace(pair, s);
    // M_j as a subcomplex of Y, for the pair (M_j, Y).
    const auto mj_in_y = Subcomplex::where(s.support.complex(), [&](std::size_t yi) {
      return mj_in_x.contains_index(s.support.to_parent(yi));
    });
    const auto mj_in_m = Subcomplex::where(mk, [&](std::size_t mi) { return mj_in_x.contains_index(msub.to_parent(mi)); });
    const auto eu_on_y = restrict_to(s.support, s.eu);
    const auto lhs = shriek_restrict(msub, extend_by_zero(s.support, eu_on_y));
    // M_j inside Y and inside M are the same complex, so the function carries over.
    const auto rhs = extend_by_zero(mj_in_m, shriek_restrict(mj_in_y, eu_on_y));
    out.push_back(detail::compare_functions("base_change", rhs, lhs, "stratum '" + s.name + "'"));
  }

  {
    const auto terms = triangle_decompose(msub, phi);
    const auto plain = restrict_to(msub, phi);
    out.push_back(detail::compare_functions("triangle_identity", plain, terms.shriek + terms.boundary, "all of M"));
    for (const auto& p : pair.probes) {
      const auto i = mk.index_of(p);
      out.push_back(detail::compare("triangle_identity", p, plain[i], terms.shriek[i] + terms.boundary[i]));
    }
    if (pair.conj) {
      for (const auto& p : pair.probes) {
        const auto i = mk.index_of(p);
        const auto& b = terms.boundary[i];
        out.push_back({"boundary_parity", p.to_string(), "even", to_string(b),
                       !odd(b) ? CheckStatus::pass : CheckStatus::fail, {}});
      }
    }
  }

  if (pair.conj) {
    const bool inv = is_invariant(*pair.conj, phi);
    out.push_back({"conjugation_invariance", "*", "invariant", inv ? "invariant" : "not invariant",
                   inv ? CheckStatus::pass : CheckStatus::fail, {}});
    if (pair.conj->strongly_free()) {
      const auto chi = euler_integral(phi);
      const auto pushed = orbit_pushforward(*pair.conj, phi);
      const auto chi_quotient = euler_integral(pushed);
      const bool ok = !odd(chi) && chi == chi_quotient;
      out.push_back({"orbit_parity", "*", "even, equal to the quotient integral " + to_string(chi_quotient),
                     to_string(chi), ok ? CheckStatus::pass : CheckStatus::fail, {}});
    } else {
      out.push_back({"orbit_parity", "*", "-", "-", CheckStatus::not_applicable, "conjugation has fixed points"});
    }
  }

  for (const auto& e : expect.hyperfunction_index) {
    auto i = mk.find(e.at);
    if (!i) throw InvalidInput("expected value at " + e.at.to_string() + ", which is not a simplex of M");
    out.push_back(detail::compare("expected_index", e.at, e.value, hyper[*i]));
  }
  for (const auto& e : expect.parity) {
    auto i = mk.find(e.at);
    if (!i) throw InvalidInput("expected parity at " + e.at.to_string() + ", which is not a simplex of M");
    out.push_back(detail::compare("expected_parity", e.at, e.value, Integer(parity[*i].bit() ? 1 : 0)));
  }

  std::stable_sort(out.begin(), out.end(), [](const CheckEntry& a, const CheckEntry& b) {
    return std::tie(a.check, a.probe) < std::tie(b.check, b.probe);
  });
  return report;
}

/// Appends randomized identity checks on the scene's own complexes: duality
/// is an involution on X, and the triangle identity holds on (M, X). Values
/// lie in [-5, 5]; the sample stream depends only on `seed`.
inline void append_randomized_checks(VerificationReport& report, const RealComplexPair& pair, std::uint64_t seed,
                                     int samples = 20) {
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Integer(static_cast<int>(rng() % 11) - 5); };
  for (int t = 0; t < samples; ++t) {
    ConstructibleFunction g(pair.x);
    for (std::size_t i = 0; i < pair.x.size(); ++i) g[i] = draw();
    const std::string probe = "#" + std::to_string(t);
    const bool involution = dual(dual(g)) == g;
    report.entries.push_back({"random_duality", probe, "D(D g) = g", involution ? "holds" : "differs",
                              involution ? CheckStatus::pass : CheckStatus::fail, {}});
    const auto terms = triangle_decompose(pair.m, g);
    const bool tri = terms.shriek + terms.boundary == restrict_to(pair.m, g);
    report.entries.push_back({"random_triangle", probe, "identity", tri ? "holds" : "differs",
                              tri ? CheckStatus::pass : CheckStatus::fail, {}});
  }
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const CheckEntry& a, const CheckEntry& b) {
    return std::tie(a.check, a.probe) < std::tie(b.check, b.probe);
  });
}

}  // namespace cfcalc
