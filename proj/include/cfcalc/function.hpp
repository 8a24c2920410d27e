#pragma once

#include "cfcalc/complex.hpp"
#include "cfcalc/errors.hpp"
#include "cfcalc/values.hpp"

#include <utility>
#include <vector>

namespace cfcalc {

/// Function constant on open simplices, with values in the ring `V`
/// (`Integer` or `Mod2`). Support may be any subset of simplices.
template <class V>
class BasicConstructibleFunction {
 public:
  using value_type = V;

  BasicConstructibleFunction() = default;

  explicit BasicConstructibleFunction(SimplicialComplex ambient)
      : ambient_(std::move(ambient)), values_(ambient_.size()) {}

  BasicConstructibleFunction(SimplicialComplex ambient, std::vector<V> values)
      : ambient_(std::move(ambient)), values_(std::move(values)) {
    if (values_.size() != ambient_.size()) throw InvalidInput("value vector does not match the complex size");
  }

  const SimplicialComplex& ambient() const { return ambient_; }

  const V& operator[](std::size_t i) const { return values_[i]; }
  V& operator[](std::size_t i) { return values_[i]; }

  V at(const Simplex& s) const { return values_[ambient_.index_of(s)]; }

  BasicConstructibleFunction& set(const Simplex& s, V v) {
    values_[ambient_.index_of(s)] = std::move(v);
    return *this;
  }

  const std::vector<V>& values() const { return values_; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != V{}) out.push_back(i);
    return out;
  }

  bool is_zero() const { return support().empty(); }

  BasicConstructibleFunction& operator+=(const BasicConstructibleFunction& o) {
    require_same_ambient(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }

  BasicConstructibleFunction& operator-=(const BasicConstructibleFunction& o) {
    require_same_ambient(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }

  BasicConstructibleFunction& operator*=(const V& c) {
    for (auto& v : values_) v = v * c;
    return *this;
  }

  friend BasicConstructibleFunction operator+(BasicConstructibleFunction a, const BasicConstructibleFunction& b) {
    return a += b;
  }
  friend BasicConstructibleFunction operator-(BasicConstructibleFunction a, const BasicConstructibleFunction& b) {
    return a -= b;
  }
  friend BasicConstructibleFunction operator-(BasicConstructibleFunction a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }
  friend BasicConstructibleFunction operator*(const V& c, BasicConstructibleFunction a) { return a *= c; }
  friend BasicConstructibleFunction operator*(BasicConstructibleFunction a, const V& c) { return a *= c; }

  /// Pointwise product.
  friend BasicConstructibleFunction operator*(BasicConstructibleFunction a, const BasicConstructibleFunction& b) {
    a.require_same_ambient(b);
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] = a.values_[i] * b.values_[i];
    return a;
  }

  bool operator==(const BasicConstructibleFunction& o) const {
    return ambient_ == o.ambient_ && values_ == o.values_;
  }

  void require_same_ambient(const BasicConstructibleFunction& o) const {
    if (!(ambient_ == o.ambient_)) throw InvalidInput("constructible functions live on different complexes");
  }

 private:
  SimplicialComplex ambient_;
  std::vector<V> values_;
};

using ConstructibleFunction = BasicConstructibleFunction<Integer>;
using Mod2Function = BasicConstructibleFunction<Mod2>;

template <class V = Integer>
BasicConstructibleFunction<V> constant(const SimplicialComplex& k, const V& c) {
  return BasicConstructibleFunction<V>(k, std::vector<V>(k.size(), c));
}

/// 1_S for a closed subset, as a function on its parent.
template <class V = Integer>
BasicConstructibleFunction<V> indicator(const Subcomplex& s) {
  BasicConstructibleFunction<V> f(s.parent());
  for (std::size_t i = 0; i < s.parent().size(); ++i)
    if (s.contains_index(i)) f[i] = V(1);
  return f;
}

/// 1_U for an open subset, as a function on its parent.
template <class V = Integer>
BasicConstructibleFunction<V> indicator(const OpenSubset& u) {
  BasicConstructibleFunction<V> f(u.parent());
  for (std::size_t i = 0; i < u.parent().size(); ++i)
    if (u.contains_index(i)) f[i] = V(1);
  return f;
}

/// Compactly supported Euler integral: sum of (-1)^dim(s) * f(s).
template <class V>
V euler_integral(const BasicConstructibleFunction<V>& f) {
  V total{};
  const auto& k = f.ambient();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (f[i] != V{}) total += signed_by(k.simplex(i).dim(), f[i]);
  return total;
}

inline Mod2Function mod2_reduce(const ConstructibleFunction& f) {
  Mod2Function out(f.ambient());
  for (std::size_t i = 0; i < f.ambient().size(); ++i) out[i] = reduce_mod2(f[i]);
  return out;
}

}  // namespace cfcalc
