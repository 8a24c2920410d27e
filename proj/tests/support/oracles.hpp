#pragma once

// Independent reference computations. These work on explicit simplex lists
// with subset tests and never touch the library's face/coface tables or
// precomputed map images, so they check the engine rather than mirror it.

#include "cfcalc/cfcalc.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cfcalc::oracle {

using Values = std::map<Simplex, Integer>;

inline Values values_of(const ConstructibleFunction& f) {
  Values out;
  for (std::size_t i = 0; i < f.ambient().size(); ++i) out[f.ambient().simplex(i)] = f[i];
  return out;
}

inline int sign(int d) { return d % 2 == 0 ? 1 : -1; }

/// Star sum straight from the definition.
inline Values dual(const std::vector<Simplex>& space, const Values& f) {
  Values out;
  for (const auto& s : space) {
    Integer acc = 0;
    for (const auto& t : space)
      if (s.is_face_of(t)) acc += sign(t.dim()) * (f.count(t) ? f.at(t) : Integer(0));
    out[s] = acc;
  }
  return out;
}

/// D_M(restrict(D_X f)) on explicit lists.
inline Values shriek(const std::vector<Simplex>& x, const std::vector<Simplex>& m, const Values& f) {
  const auto dx = dual(x, f);
  Values restricted;
  for (const auto& s : m) restricted[s] = dx.at(s);
  return dual(m, restricted);
}

/// Fiber sums with the vertex map applied by hand.
inline Values pushforward(const SimplicialMap& f, const Values& g) {
  Values out;
  for (const auto& t : f.target().simplices()) out[t] = 0;
  for (const auto& [s, v] : g) {
    std::set<std::string> img;
    for (const auto& x : s.vertices()) img.insert(f.vertex_map().at(x));
    const Simplex t(std::vector<std::string>(img.begin(), img.end()));
    out[t] += sign(s.dim() - t.dim()) * v;
  }
  return out;
}

/// Compactly supported Euler characteristic from the f-vector.
inline Integer chi_c(const SimplicialComplex& k) {
  Integer acc = 0;
  const auto f = k.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) acc += sign(static_cast<int>(d)) * Integer(f[d]);
  return acc;
}

/// Number of connected components of the link of vertex `v` inside the
/// simplex set `y`: the branch count of a curve germ at v.
inline int link_components(const std::vector<Simplex>& y, const std::string& v) {
  std::set<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& s : y) {
    if (!s.has_vertex(v)) continue;
    std::vector<std::string> rest;
    for (const auto& w : s.vertices())
      if (w != v) rest.push_back(w);
    for (const auto& w : rest) verts.insert(w);
    if (rest.size() == 2) edges.emplace_back(rest[0], rest[1]);
  }
  std::map<std::string, std::string> parent;
  for (const auto& w : verts) parent[w] = w;
  std::function<std::string(const std::string&)> find = [&](const std::string& a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  std::set<std::string> roots;
  for (const auto& w : verts) roots.insert(find(w));
  return static_cast<int>(roots.size());
}

}  // namespace cfcalc::oracle
