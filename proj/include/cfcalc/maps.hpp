#pragma once

#include "cfcalc/complex.hpp"
#include "cfcalc/errors.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cfcalc {

using VertexMap = std::map<std::string, std::string>;

/// Vertex map that sends every source simplex onto a target simplex.
class SimplicialMap {
 public:
  SimplicialMap() = default;

  SimplicialMap(SimplicialComplex source, SimplicialComplex target, VertexMap vertex_map)
      : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
    for (const auto& v : source_.vertices()) {
      auto it = vertex_map_.find(v);
      if (it == vertex_map_.end()) throw InvalidInput("vertex map is not defined on '" + v + "'");
      if (!target_.has_vertex(it->second))
        throw InvalidInput("vertex map sends '" + v + "' to '" + it->second +
                           "', which is not a target vertex");
    }
    for (const auto& [v, w] : vertex_map_)
      if (!source_.has_vertex(v)) throw InvalidInput("vertex map mentions unknown vertex '" + v + "'");
    image_.reserve(source_.size());
    for (const auto& s : source_.simplices()) {
      auto img = apply(s);
      auto j = target_.find(img);
      if (!j)
        throw InvalidInput("map is not simplicial: image of " + s.to_string() + " is " +
                           img.to_string() + ", not a target simplex");
      image_.push_back(*j);
    }
  }

  static SimplicialMap identity(const SimplicialComplex& k) {
    VertexMap m;
    for (const auto& v : k.vertices()) m[v] = v;
    return SimplicialMap(k, k, std::move(m));
  }

  /// The map to a one-point complex {pt}.
  static SimplicialMap to_point(const SimplicialComplex& k, const std::string& pt = "pt") {
    VertexMap m;
    for (const auto& v : k.vertices()) m[v] = pt;
    return SimplicialMap(k, build_complex({{pt}}), std::move(m));
  }

  /// Inclusion of a subcomplex into its parent.
  static SimplicialMap inclusion(const Subcomplex& sub) {
    VertexMap m;
    for (const auto& v : sub.complex().vertices()) m[v] = v;
    return SimplicialMap(sub.complex(), sub.parent(), std::move(m));
  }

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const VertexMap& vertex_map() const { return vertex_map_; }

  const std::string& operator()(const std::string& v) const { return vertex_map_.at(v); }

  Simplex apply(const Simplex& s) const {
    std::vector<std::string> img;
    img.reserve(s.size());
    for (const auto& v : s.vertices()) img.push_back(vertex_map_.at(v));
    return Simplex::spanned_by(std::move(img));
  }

  /// Target index of the image of source simplex `i`.
  std::size_t image_index(std::size_t i) const { return image_[i]; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  VertexMap vertex_map_;
  std::vector<std::size_t> image_;
};

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw InvalidInput("maps are not composable");
  VertexMap m;
  for (const auto& [v, w] : f.vertex_map()) m[v] = g(w);
  return SimplicialMap(f.source(), g.target(), std::move(m));
}

/// Simplicial self-map of order two. A simplex mapped onto itself as a set has
/// all of its vertices fixed (regularity), so the fixed simplices form a
/// subcomplex equal to the geometric fixed set.
class Involution {
 public:
  Involution() = default;

  Involution(const SimplicialComplex& k, VertexMap vertex_map) : map_(k, k, complete(k, std::move(vertex_map))) {
    for (const auto& [v, w] : map_.vertex_map())
      if (map_(w) != v) throw InvalidInput("not an involution: '" + v + "' -> '" + w + "' -> '" + map_(w) + "'");
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (map_.image_index(i) != i) continue;
      for (const auto& v : k.simplex(i).vertices())
        if (map_(v) != v)
          throw InvalidInput("involution is not regular on " + k.simplex(i).to_string() +
                             " (refine the triangulation)");
    }
  }

  const SimplicialMap& map() const { return map_; }
  const SimplicialComplex& complex() const { return map_.source(); }
  const std::string& operator()(const std::string& v) const { return map_(v); }
  std::size_t image_index(std::size_t i) const { return map_.image_index(i); }

  /// Every simplex is disjoint from its image.
  bool strongly_free() const {
    for (const auto& s : complex().simplices())
      for (const auto& v : s.vertices())
        if (s.has_vertex(map_(v))) return false;
    return true;
  }

  /// Moved vertices only; the identity elsewhere is implied.
  VertexMap moved_vertices() const {
    VertexMap out;
    for (const auto& [v, w] : map_.vertex_map())
      if (v != w) out.emplace(v, w);
    return out;
  }

 private:
  static VertexMap complete(const SimplicialComplex& k, VertexMap m) {
    for (const auto& v : k.vertices()) m.try_emplace(v, v);
    return m;
  }

  SimplicialMap map_;
};

/// Simplices all of whose vertices are fixed.
inline Subcomplex fixed_point_set(const Involution& tau) {
  const auto& k = tau.complex();
  std::vector<Simplex> fixed;
  for (const auto& s : k.simplices()) {
    bool all = true;
    for (const auto& v : s.vertices()) all = all && tau(v) == v;
    if (all) fixed.push_back(s);
  }
  return Subcomplex::of(k, fixed);
}

struct Product {
  SimplicialComplex complex;
  SimplicialMap proj_first;
  SimplicialMap proj_second;
};

/// Name of the product vertex (a, b).
inline std::string product_vertex(const std::string& a, const std::string& b) { return a + ":" + b; }

/// Staircase triangulation of |K| x |L|. Vertices are pairs (a, b); a simplex is
/// a strictly increasing chain in the coordinatewise order whose coordinates
/// span simplices of K and L. `order_k` and `order_l` list each vertex set once,
/// smallest first.
inline Product product(const SimplicialComplex& k, const SimplicialComplex& l,
                       const std::vector<std::string>& order_k, const std::vector<std::string>& order_l) {
  auto rank_of = [](const SimplicialComplex& c, const std::vector<std::string>& order, const char* which) {
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (!rank.emplace(order[i], i).second)
        throw InvalidInput(std::string("vertex order of ") + which + " lists '" + order[i] + "' twice");
    for (const auto& v : c.vertices())
      if (!rank.count(v)) throw InvalidInput(std::string("vertex order of ") + which + " omits '" + v + "'");
    if (rank.size() != c.vertices().size())
      throw InvalidInput(std::string("vertex order of ") + which + " names unknown vertices");
    return rank;
  };
  const auto rank_k = rank_of(k, order_k, "first factor");
  const auto rank_l = rank_of(l, order_l, "second factor");

  auto sorted_by = [](const Simplex& s, const std::map<std::string, std::size_t>& rank) {
    auto v = s.vertices();
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return rank.at(x) < rank.at(y); });
    return v;
  };

  std::vector<Simplex> top;
  for (const auto& sk : k.maximal_simplices()) {
    const auto a = sorted_by(sk, rank_k);
    for (const auto& sl : l.maximal_simplices()) {
      const auto b = sorted_by(sl, rank_l);
      const std::size_t p = a.size() - 1, q = b.size() - 1;
      // Monotone lattice paths from (0,0) to (p,q): choose which of the p+q steps go right.
      for (std::size_t mask = 0; mask < (std::size_t{1} << (p + q)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p) continue;
        std::size_t i = 0, j = 0;
        std::vector<std::string> chain{product_vertex(a[0], b[0])};
        for (std::size_t step = 0; step < p + q; ++step) {
          if (mask & (std::size_t{1} << step)) ++i;
          else ++j;
          chain.push_back(product_vertex(a[i], b[j]));
        }
        top.emplace_back(std::move(chain));
      }
    }
  }
  auto complex = SimplicialComplex::from_generators(top);

  const auto vk = k.vertices(), vl = l.vertices();
  if (complex.vertices().size() != vk.size() * vl.size())
    throw InvalidInput("product vertex names collide; avoid ':' in factor vertex names");
  VertexMap first, second;
  for (const auto& a : vk)
    for (const auto& b : vl) {
      first[product_vertex(a, b)] = a;
      second[product_vertex(a, b)] = b;
    }
  Product out{complex, SimplicialMap(complex, k, std::move(first)), SimplicialMap(complex, l, std::move(second))};
  return out;
}

/// Subcomplex A x B of a staircase product: simplices projecting into A and B.
inline Subcomplex product_subcomplex(const Product& prod, const Subcomplex& a, const Subcomplex& b) {
  return Subcomplex::where(prod.complex, [&](std::size_t i) {
    return a.contains_index(prod.proj_first.image_index(i)) && b.contains_index(prod.proj_second.image_index(i));
  });
}

}  // namespace cfcalc
