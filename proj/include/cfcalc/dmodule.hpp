#pragma once

#include "cfcalc/calculus.hpp"
#include "cfcalc/complex.hpp"
#include "cfcalc/function.hpp"
#include "cfcalc/maps.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfcalc {

/// One conormal component of the characteristic cycle: a closed irreducible
/// Y of complex codimension `codim`, its multiplicity, and its Euler
/// obstruction (input data, 1 on the smooth locus).
struct Stratum {
  std::string name;
  Subcomplex support;
  int codim = 0;
  Integer multiplicity = 1;
  ConstructibleFunction eu;
  bool smooth = true;

  /// Simplices of Y where the Euler obstruction differs from 1.
  bool singular_at(std::size_t ambient_index) const {
    return support.contains_index(ambient_index) && eu[ambient_index] != 1;
  }
};

/// Checks the per-stratum invariants; throws InvalidInput.
inline void validate(const Stratum& s) {
  const std::string who = "stratum '" + s.name + "'";
  if (s.name.empty()) throw InvalidInput("stratum name is empty");
  if (s.support.empty()) throw InvalidInput(who + ": Y is empty");
  if (!s.support.connected()) throw InvalidInput(who + ": Y is not connected");
  if (s.multiplicity <= 0) throw InvalidInput(who + ": multiplicity must be positive");
  if (s.codim < 0) throw InvalidInput(who + ": codimension must be nonnegative");
  if (!(s.eu.ambient() == s.support.parent())) throw InvalidInput(who + ": Euler obstruction lives on another complex");
  bool has_smooth_point = false;
  for (std::size_t i = 0; i < s.eu.ambient().size(); ++i) {
    const bool in_y = s.support.contains_index(i);
    if (!in_y && s.eu[i] != 0)
      throw InvalidInput(who + ": Euler obstruction is nonzero off Y at " + s.eu.ambient().simplex(i).to_string());
    if (in_y && s.eu[i] == 1) has_smooth_point = true;
    if (in_y && s.smooth && s.eu[i] != 1)
      throw InvalidInput(who + ": smooth stratum needs Eu_Y = 1_Y, but Eu = " + to_string(s.eu[i]) + " at " +
                         s.eu.ambient().simplex(i).to_string());
  }
  if (!has_smooth_point) throw InvalidInput(who + ": Euler obstruction is never 1 (empty smooth locus)");
}

inline Stratum smooth_stratum(std::string name, Subcomplex y, int codim, Integer multiplicity) {
  Stratum s{std::move(name), y, codim, std::move(multiplicity), indicator(y), true};
  validate(s);
  return s;
}

struct CharacteristicCycle {
  std::vector<Stratum> strata;

  bool all_smooth() const {
    for (const auto& s : strata)
      if (!s.smooth) return false;
    return true;
  }

  /// Concatenation of cycles (sum of the underlying modules).
  friend CharacteristicCycle operator+(CharacteristicCycle a, const CharacteristicCycle& b) {
    a.strata.insert(a.strata.end(), b.strata.begin(), b.strata.end());
    return a;
  }
};

inline void validate(const CharacteristicCycle& cc) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < cc.strata.size(); ++i) {
    validate(cc.strata[i]);
    if (!names.insert(cc.strata[i].name).second)
      throw InvalidInput("duplicate stratum name '" + cc.strata[i].name + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (cc.strata[j].support == cc.strata[i].support)
        throw InvalidInput("strata '" + cc.strata[j].name + "' and '" + cc.strata[i].name + "' have the same Y");
  }
}

/// A complex model X with the real form M it complexifies.
struct RealComplexPair {
  SimplicialComplex x;
  Subcomplex m;
  int n = 1;  ///< complex dimension of X, real dimension of M
  std::optional<Involution> conj;
  std::vector<Simplex> probes;  ///< interior simplices of M where local statements are asserted
};

inline void validate(const RealComplexPair& p) {
  if (!(p.m.parent() == p.x)) throw InvalidInput("M is not a subcomplex of X");
  if (p.n < 1) throw InvalidInput("complex dimension must be positive");
  if (p.conj) {
    if (!(p.conj->complex() == p.x)) throw InvalidInput("conjugation acts on another complex");
    if (!(fixed_point_set(*p.conj) == p.m)) throw InvalidInput("fixed point set of the conjugation is not M");
  }
  for (const auto& s : p.probes)
    if (!p.m.contains(s)) throw InvalidInput("probe " + s.to_string() + " is not a simplex of M");
}

/// Cross-checks a pair against a cycle on the same X.
inline void validate(const RealComplexPair& p, const CharacteristicCycle& cc) {
  validate(p);
  validate(cc);
  for (const auto& s : cc.strata) {
    if (!(s.support.parent() == p.x)) throw InvalidInput("stratum '" + s.name + "' lives on another complex");
    if (s.codim > p.n)
      throw InvalidInput("stratum '" + s.name + "': codimension " + std::to_string(s.codim) +
                         " exceeds the complex dimension " + std::to_string(p.n));
    if (p.conj) {
      for (std::size_t i = 0; i < p.x.size(); ++i)
        if (s.support.contains_index(i) && !s.support.contains_index(p.conj->image_index(i)))
          throw InvalidInput("stratum '" + s.name + "' is not invariant under the conjugation");
    }
  }
}

/// M_j = Y_j cap M.
inline Subcomplex real_trace(const RealComplexPair& p, const Stratum& s) { return intersect(s.support, p.m); }

/// Local index function: sum over strata of (-1)^codim * m * Eu_Y.
inline ConstructibleFunction solution_index(const CharacteristicCycle& cc, const SimplicialComplex& x) {
  ConstructibleFunction out(x);
  for (const auto& s : cc.strata) {
    if (!(s.eu.ambient() == x)) throw InvalidInput("stratum '" + s.name + "' lives on another complex");
    out += signed_by(s.codim, Integer(s.multiplicity)) * s.eu;
  }
  return out;
}

/// Stalkwise Euler characteristic of the hyperfunction solution complex:
/// (-1)^n * i^!(solution_index), as a function on M.
inline ConstructibleFunction hyperfunction_index(const RealComplexPair& p, const CharacteristicCycle& cc) {
  return signed_by(p.n, shriek_restrict(p.m, solution_index(cc, p.x)));
}

/// Sum of m_j * 1_{M_j}. Only meaningful when every Y_j is smooth.
inline ConstructibleFunction hyperfunction_dimension(const RealComplexPair& p, const CharacteristicCycle& cc) {
  ConstructibleFunction out(p.m.complex());
  for (const auto& s : cc.strata) {
    if (!s.smooth)
      throw PreconditionError("dimension formula does not apply: stratum '" + s.name + "' is singular");
    out += Integer(s.multiplicity) * restrict_to(p.m, indicator(real_trace(p, s)));
  }
  return out;
}

/// Sum of m_j * Eu_{Y_j} on M, reduced mod 2.
inline Mod2Function parity_index(const RealComplexPair& p, const CharacteristicCycle& cc) {
  ConstructibleFunction sum(p.x);
  for (const auto& s : cc.strata) sum += Integer(s.multiplicity) * s.eu;
  return mod2_reduce(restrict_to(p.m, sum));
}

}  // namespace cfcalc
