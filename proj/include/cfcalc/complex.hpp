#pragma once

#include "cfcalc/errors.hpp"
#include "cfcalc/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfcalc {

/// Finite face-closed set of simplices. Immutable; copies share storage.
///
/// Simplices are stored in lexicographic order of their sorted vertex lists,
/// so an index is a stable handle as long as the complex is the same value.
class SimplicialComplex {
 public:
  SimplicialComplex() : data_(std::make_shared<Data>()) {}

  /// Face closure of the given simplices.
  static SimplicialComplex from_generators(const std::vector<Simplex>& generators) {
    std::set<Simplex> all;
    for (const auto& g : generators)
      for (auto& f : g.faces()) all.insert(std::move(f));
    return from_sorted(std::vector<Simplex>(all.begin(), all.end()));
  }

  /// `simplices` must be sorted, duplicate-free and face-closed.
  static SimplicialComplex from_closed_set(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    for (const auto& s : simplices)
      for (const auto& f : s.faces())
        if (!std::binary_search(simplices.begin(), simplices.end(), f))
          throw InvalidInput("set is not face-closed: face " + f.to_string() + " of " +
                             s.to_string() + " is missing");
    return from_sorted(std::move(simplices));
  }

  std::size_t size() const { return data_->simplices.size(); }
  bool empty() const { return data_->simplices.empty(); }
  const Simplex& simplex(std::size_t i) const { return data_->simplices[i]; }
  const std::vector<Simplex>& simplices() const { return data_->simplices; }
  int dimension() const { return data_->dimension; }

  std::optional<std::size_t> find(const Simplex& s) const {
    const auto& v = data_->simplices;
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  bool contains(const Simplex& s) const { return find(s).has_value(); }

  std::size_t index_of(const Simplex& s) const {
    if (auto i = find(s)) return *i;
    throw NotFound("simplex " + s.to_string() + " is not in the complex");
  }

  /// Indices of all simplices containing simplex `i`, itself included.
  const std::vector<std::size_t>& cofaces(std::size_t i) const { return data_->cofaces[i]; }

  /// Indices of all nonempty faces of simplex `i`, itself included.
  const std::vector<std::size_t>& faces(std::size_t i) const { return data_->faces[i]; }

  std::vector<std::string> vertices() const {
    std::vector<std::string> out;
    for (const auto& s : data_->simplices)
      if (s.size() == 1) out.push_back(s[0]);
    return out;
  }

  bool has_vertex(const std::string& v) const { return contains(Simplex{v}); }

  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (data_->cofaces[i].size() == 1) out.push_back(simplex(i));
    return out;
  }

  /// Number of simplices in each dimension.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& s : data_->simplices) ++f[static_cast<std::size_t>(s.dim())];
    return f;
  }

  /// Identity of storage; structurally equal complexes may differ here.
  bool same_storage(const SimplicialComplex& o) const { return data_ == o.data_; }

  bool operator==(const SimplicialComplex& o) const {
    return data_ == o.data_ || data_->simplices == o.data_->simplices;
  }

 private:
  struct Data {
    std::vector<Simplex> simplices;
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::vector<std::size_t>> cofaces;
    int dimension = -1;
  };

  explicit SimplicialComplex(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  static SimplicialComplex from_sorted(std::vector<Simplex> sorted) {
    auto d = std::make_shared<Data>();
    d->simplices = std::move(sorted);
    const auto& v = d->simplices;
    d->faces.resize(v.size());
    d->cofaces.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      d->dimension = std::max(d->dimension, v[i].dim());
      for (const auto& f : v[i].faces()) {
        auto j = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), f) - v.begin());
        d->faces[i].push_back(j);
        d->cofaces[j].push_back(i);
      }
      std::sort(d->faces[i].begin(), d->faces[i].end());
    }
    return SimplicialComplex(std::move(d));
  }

  std::shared_ptr<const Data> data_;
};

/// Builds the face closure of a list of vertex lists.
inline SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& maximal) {
  std::vector<Simplex> gens;
  gens.reserve(maximal.size());
  for (const auto& m : maximal) gens.emplace_back(m);
  return SimplicialComplex::from_generators(gens);
}

/// Closed star of `s`: every simplex having `s` as a face.
inline std::vector<Simplex> star(const SimplicialComplex& k, const Simplex& s) {
  std::vector<Simplex> out;
  for (auto j : k.cofaces(k.index_of(s))) out.push_back(k.simplex(j));
  return out;
}

/// Face-closed subset of a parent complex; models closed sets such as M or Y.
class Subcomplex {
 public:
  Subcomplex() = default;

  /// Face closure of `generators` inside `parent`.
  static Subcomplex closure(const SimplicialComplex& parent, const std::vector<Simplex>& generators) {
    std::vector<bool> mask(parent.size(), false);
    for (const auto& g : generators)
      for (auto f : parent.faces(parent.index_of(g))) mask[f] = true;
    return Subcomplex(parent, std::move(mask));
  }

  /// Exactly the given simplices; they must be face-closed.
  static Subcomplex of(const SimplicialComplex& parent, const std::vector<Simplex>& simplices) {
    std::vector<bool> mask(parent.size(), false);
    for (const auto& s : simplices) mask[parent.index_of(s)] = true;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (mask[i])
        for (auto f : parent.faces(i))
          if (!mask[f])
            throw InvalidInput("subset is not face-closed: " + parent.simplex(f).to_string() +
                               " is a face of " + parent.simplex(i).to_string());
    return Subcomplex(parent, std::move(mask));
  }

  static Subcomplex whole(const SimplicialComplex& parent) {
    return Subcomplex(parent, std::vector<bool>(parent.size(), true));
  }

  /// Filter of the parent by a face-closed predicate on indices.
  template <class Pred>
  static Subcomplex where(const SimplicialComplex& parent, Pred&& keep) {
    std::vector<bool> mask(parent.size(), false);
    for (std::size_t i = 0; i < parent.size(); ++i) mask[i] = keep(i);
    std::vector<Simplex> members;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (mask[i]) members.push_back(parent.simplex(i));
    return of(parent, members);
  }

  const SimplicialComplex& parent() const { return parent_; }
  /// The subcomplex as a complex in its own right.
  const SimplicialComplex& complex() const { return self_; }

  bool contains_index(std::size_t parent_index) const { return mask_[parent_index]; }
  bool contains(const Simplex& s) const {
    auto i = parent_.find(s);
    return i && mask_[*i];
  }
  std::size_t size() const { return self_.size(); }
  bool empty() const { return self_.empty(); }

  /// Parent index of the subcomplex's `i`-th simplex.
  std::size_t to_parent(std::size_t i) const { return to_parent_[i]; }
  /// Index inside the subcomplex of a parent simplex that belongs to it.
  std::size_t from_parent(std::size_t parent_index) const { return from_parent_[parent_index]; }

  const std::vector<bool>& mask() const { return mask_; }

  bool connected() const {
    const auto verts = self_.vertices();
    if (verts.empty()) return false;
    std::vector<std::size_t> comp(verts.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    auto pos = [&](const std::string& v) {
      return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const auto& s : self_.simplices())
      if (s.size() == 2) comp[find(pos(s[0]))] = find(pos(s[1]));
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (find(i) != find(0)) return false;
    return true;
  }

  bool operator==(const Subcomplex& o) const { return parent_ == o.parent_ && mask_ == o.mask_; }

 private:
  Subcomplex(SimplicialComplex parent, std::vector<bool> mask)
      : parent_(std::move(parent)), mask_(std::move(mask)) {
    std::vector<Simplex> members;
    from_parent_.assign(parent_.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (mask_[i]) {
        from_parent_[i] = members.size();
        to_parent_.push_back(i);
        members.push_back(parent_.simplex(i));
      }
    // Parent order restricted to a subset is still sorted and face-closed.
    self_ = SimplicialComplex::from_closed_set(std::move(members));
  }

  SimplicialComplex parent_;
  SimplicialComplex self_;
  std::vector<bool> mask_;
  std::vector<std::size_t> to_parent_;
  std::vector<std::size_t> from_parent_;
};

inline Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  if (!(a.parent() == b.parent())) throw InvalidInput("subcomplexes of different complexes");
  return Subcomplex::where(a.parent(), [&](std::size_t i) { return a.contains_index(i) && b.contains_index(i); });
}

/// Coface-closed subset of a parent complex; models open sets such as X \ M.
class OpenSubset {
 public:
  OpenSubset() = default;

  static OpenSubset of(const SimplicialComplex& parent, std::vector<bool> mask) {
    if (mask.size() != parent.size()) throw InvalidInput("mask size does not match complex");
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (mask[i])
        for (auto c : parent.cofaces(i))
          if (!mask[c])
            throw InvalidInput("subset is not open: coface " + parent.simplex(c).to_string() +
                               " of " + parent.simplex(i).to_string() + " is missing");
    OpenSubset u;
    u.parent_ = parent;
    u.mask_ = std::move(mask);
    return u;
  }

  const SimplicialComplex& parent() const { return parent_; }
  bool contains_index(std::size_t i) const { return mask_[i]; }
  bool contains(const Simplex& s) const {
    auto i = parent_.find(s);
    return i && mask_[*i];
  }
  const std::vector<bool>& mask() const { return mask_; }

  std::vector<Simplex> simplices() const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (mask_[i]) out.push_back(parent_.simplex(i));
    return out;
  }

  std::size_t size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

 private:
  SimplicialComplex parent_;
  std::vector<bool> mask_;
};

/// U = K \ M.
inline OpenSubset complement_open(const Subcomplex& m) {
  std::vector<bool> mask(m.parent().size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !m.contains_index(i);
  return OpenSubset::of(m.parent(), std::move(mask));
}

/// Complement of an explicit simplex set, which must be face-closed in `k`.
inline OpenSubset complement_open(const SimplicialComplex& k, const std::vector<Simplex>& closed) {
  return complement_open(Subcomplex::of(k, closed));
}

inline SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
  if (k.has_vertex(apex)) throw InvalidInput("cone apex '" + apex + "' is already a vertex");
  std::vector<Simplex> gens{Simplex{apex}};
  for (const auto& s : k.maximal_simplices()) {
    auto v = s.vertices();
    v.push_back(apex);
    gens.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_generators(gens);
}

}  // namespace cfcalc
