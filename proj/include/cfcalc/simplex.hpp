#pragma once

#include "cfcalc/errors.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace cfcalc {

/// A nonempty set of vertex identifiers, kept sorted. An open simplex is the
/// unit of "position": every function in this library is constant on it.
class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidInput("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end()) throw InvalidInput("duplicate vertex '" + *dup + "' in simplex");
  }

  Simplex(std::initializer_list<std::string> vertices)
      : Simplex(std::vector<std::string>(vertices)) {}

  /// Accepts duplicates and collapses them; used for images under maps.
  static Simplex spanned_by(std::vector<std::string> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Simplex(std::move(vertices));
  }

  /// Parses "a,b,c" (whitespace around names is ignored).
  static Simplex parse(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
      auto b = cur.find_first_not_of(" \t");
      auto e = cur.find_last_not_of(" \t");
      if (b == std::string::npos) throw InvalidInput("empty vertex name in '" + text + "'");
      out.push_back(cur.substr(b, e - b + 1));
      cur.clear();
    };
    for (char ch : text) {
      if (ch == ',') flush();
      else cur.push_back(ch);
    }
    flush();
    return Simplex(std::move(out));
  }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& operator[](std::size_t i) const { return vertices_[i]; }

  bool has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
  }

  /// All nonempty subsets, including the simplex itself.
  std::vector<Simplex> faces() const {
    const std::size_t n = vertices_.size();
    if (n > 24) throw InvalidInput("simplex too large to enumerate faces");
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) f.vertices_.push_back(vertices_[i]);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ',';
      s += vertices_[i];
    }
    return s;
  }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<std::string> vertices_;
};

}  // namespace cfcalc
