#pragma once

#include "cfcalc/complex.hpp"
#include "cfcalc/function.hpp"
#include "cfcalc/maps.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cfcalc {

/// (f^* g)(s) = g(f(s)).
template <class V>
BasicConstructibleFunction<V> pullback(const SimplicialMap& f, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == f.target())) throw InvalidInput("pullback: function does not live on the map target");
  BasicConstructibleFunction<V> out(f.source());
  for (std::size_t i = 0; i < f.source().size(); ++i) out[i] = g[f.image_index(i)];
  return out;
}

/// Proper pushforward: fiberwise compactly supported Euler integral,
/// (f_! g)(t) = sum over s with f(s) = t of (-1)^(dim s - dim t) g(s).
template <class V>
BasicConstructibleFunction<V> pushforward(const SimplicialMap& f, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == f.source())) throw InvalidInput("pushforward: function does not live on the map source");
  BasicConstructibleFunction<V> out(f.target());
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (g[i] == V{}) continue;
    const auto t = f.image_index(i);
    out[t] += signed_by(src.simplex(i).dim() - tgt.simplex(t).dim(), g[i]);
  }
  return out;
}

/// Duality: (D g)(s) = sum over t containing s of (-1)^dim t * g(t).
/// D is an involution and D(1) = (-1)^d on a closed d-manifold.
template <class V>
BasicConstructibleFunction<V> dual(const BasicConstructibleFunction<V>& g) {
  const auto& k = g.ambient();
  BasicConstructibleFunction<V> out(k);
  for (std::size_t t = 0; t < k.size(); ++t) {
    if (g[t] == V{}) continue;
    const V term = signed_by(k.simplex(t).dim(), g[t]);
    for (auto s : k.faces(t)) out[s] += term;
  }
  return out;
}

/// i^*: plain restriction to a closed subset.
template <class V>
BasicConstructibleFunction<V> restrict_to(const Subcomplex& m, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == m.parent())) throw InvalidInput("restriction: function does not live on the parent complex");
  BasicConstructibleFunction<V> out(m.complex());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = g[m.to_parent(i)];
  return out;
}

/// Extension by zero from a closed subset to its parent.
template <class V>
BasicConstructibleFunction<V> extend_by_zero(const Subcomplex& m, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == m.complex())) throw InvalidInput("extension: function does not live on the subcomplex");
  BasicConstructibleFunction<V> out(m.parent());
  for (std::size_t i = 0; i < m.size(); ++i) out[m.to_parent(i)] = g[i];
  return out;
}

/// i^! = D_M . i^* . D_X.
template <class V>
BasicConstructibleFunction<V> shriek_restrict(const Subcomplex& m, const BasicConstructibleFunction<V>& g) {
  return dual(restrict_to(m, dual(g)));
}

// Functions on an open subset U of X are stored as functions on X supported
// inside U. Stars of simplices of U stay inside U, so D_U is D_X cut to U.

template <class V>
void require_supported_in(const OpenSubset& u, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == u.parent())) throw InvalidInput("function does not live on the parent of the open subset");
  for (auto i : g.support())
    if (!u.contains_index(i))
      throw InvalidInput("function on an open subset is nonzero at " + u.parent().simplex(i).to_string() +
                         ", outside the subset");
}

/// j^*: restriction to an open subset.
template <class V>
BasicConstructibleFunction<V> open_restrict(const OpenSubset& u, const BasicConstructibleFunction<V>& g) {
  if (!(g.ambient() == u.parent())) throw InvalidInput("function does not live on the parent of the open subset");
  auto out = g;
  for (std::size_t i = 0; i < out.ambient().size(); ++i)
    if (!u.contains_index(i)) out[i] = V{};
  return out;
}

/// D_U, the duality of the open subset itself.
template <class V>
BasicConstructibleFunction<V> open_dual(const OpenSubset& u, const BasicConstructibleFunction<V>& g) {
  require_supported_in(u, g);
  return open_restrict(u, dual(g));
}

/// j_!: extension by zero from an open subset.
template <class V>
BasicConstructibleFunction<V> open_extend(const OpenSubset& u, const BasicConstructibleFunction<V>& g) {
  require_supported_in(u, g);
  return g;
}

/// j_* = D_X . j_! . D_U. On U it returns g; on the complement it records the
/// Euler characteristic of nearby sections.
template <class V>
BasicConstructibleFunction<V> open_pushforward(const OpenSubset& u, const BasicConstructibleFunction<V>& g) {
  return dual(open_extend(u, open_dual(u, g)));
}

template <class V>
struct TriangleTerms {
  BasicConstructibleFunction<V> shriek;    ///< i^! g
  BasicConstructibleFunction<V> boundary;  ///< i^* j_* j^* g
};

/// Both outer terms of the triangle i_* i^! -> id -> j_* j^*, restricted to M.
/// Their sum is i^* g.
template <class V>
TriangleTerms<V> triangle_decompose(const Subcomplex& m, const BasicConstructibleFunction<V>& g) {
  const auto u = complement_open(m);
  return {shriek_restrict(m, g), restrict_to(m, open_pushforward(u, open_restrict(u, g)))};
}

/// Quotient of a complex by a strongly free involution, with the orbit map.
struct OrbitQuotient {
  SimplicialComplex quotient;
  SimplicialMap projection;
};

/// Name of the orbit {v, tau(v)}.
inline std::string orbit_vertex(const std::string& v, const std::string& w) {
  return v < w ? v + "|" + w : w + "|" + v;
}

inline OrbitQuotient orbit_quotient(const Involution& tau) {
  if (!tau.strongly_free())
    throw InvalidInput("involution is not strongly free; refine the model before taking the quotient");
  const auto& k = tau.complex();
  VertexMap proj;
  for (const auto& v : k.vertices()) proj[v] = orbit_vertex(v, tau(v));
  std::vector<Simplex> gens;
  std::map<Simplex, std::size_t> seen;
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::vector<std::string> img;
    for (const auto& v : k.simplex(i).vertices()) img.push_back(proj[v]);
    Simplex s(std::move(img));
    auto [it, fresh] = seen.emplace(s, i);
    const auto other = it->second;
    if (!fresh && other != i && other != tau.image_index(i))
      throw InvalidInput("orbits of " + k.simplex(other).to_string() + " and " + k.simplex(i).to_string() +
                         " have the same vertices; the quotient is not simplicial, refine the model");
    gens.push_back(s);
  }
  auto q = SimplicialComplex::from_generators(gens);
  return {q, SimplicialMap(k, q, std::move(proj))};
}

/// pi_* for the orbit map: (pi_* a)(orbit of s) = a(s) + a(tau s).
template <class V>
BasicConstructibleFunction<V> orbit_pushforward(const Involution& tau, const BasicConstructibleFunction<V>& a) {
  return pushforward(orbit_quotient(tau).projection, a);
}

template <class V>
bool is_invariant(const Involution& tau, const BasicConstructibleFunction<V>& a) {
  return pullback(tau.map(), a) == a;
}

}  // namespace cfcalc
