#pragma once

#include "cfcalc/complex.hpp"
#include "cfcalc/maps.hpp"
#include "cfcalc/scene.hpp"

#include <map>
#include <string>
#include <vector>

namespace cfcalc {

using ModelParams = std::map<std::string, Integer>;

struct ModelInfo {
  std::string name;
  std::string description;
  ModelParams defaults;
};

inline const std::vector<ModelInfo>& model_catalog() {
  static const std::vector<ModelInfo> catalog{
      {"antipodal_cover", "2k-gon circle with the antipodal (strongly free) conjugation; M empty", {{"k", 3}, {"m", 1}}},
      {"kashiwara_point", "(C, R, 0) with strata {0} (codim 1, mult d0) and C (codim 0, mult d1)",
       {{"d0", 2}, {"d1", 3}, {"k", 3}}},
      {"node_curve", "C^2 model with Y = {xy = 0} (Eu = 2 at the node), codim 1", {{"k", 3}, {"m", 1}}},
      {"pair_C_R", "2k-sector disk with reflection conjugation, M = diameter, Y = X", {{"k", 3}, {"m", 1}}},
      {"smooth_line_in_C2", "C^2 model with Y = C x {0} (codim 1) and optionally the origin (codim 2)",
       {{"k", 3}, {"m", 4}, {"point_multiplicity", 0}}},
  };
  return catalog;
}

namespace detail {

inline std::string rim(int i) { return "r" + std::to_string(i); }

/// Disk model of C near 0: center "c" coned over a 2k-gon r0..r(2k-1).
struct DiskModel {
  SimplicialComplex disk;
  std::vector<Simplex> diameter;  ///< maximal simplices of the real axis r0-c-rk
  VertexMap reflection;           ///< r_i -> r_(-i), fixing the diameter
  std::vector<std::string> order; ///< c, r0, r1, ... (for staircase products)
  int k = 3;
};

inline DiskModel disk_model(int k) {
  DiskModel d;
  d.k = k;
  std::vector<Simplex> tris;
  for (int i = 0; i < 2 * k; ++i) tris.push_back(Simplex{"c", rim(i), rim((i + 1) % (2 * k))});
  d.disk = SimplicialComplex::from_generators(tris);
  d.diameter = {Simplex{"c", rim(0)}, Simplex{"c", rim(k)}};
  for (int i = 0; i < 2 * k; ++i) d.reflection[rim(i)] = rim((2 * k - i) % (2 * k));
  d.reflection["c"] = "c";
  d.order.push_back("c");
  for (int i = 0; i < 2 * k; ++i) d.order.push_back(rim(i));
  return d;
}

inline Integer param(const ModelParams& given, const ModelInfo& info, const std::string& key) {
  auto it = given.find(key);
  return it != given.end() ? it->second : info.defaults.at(key);
}

inline int small_param(const ModelParams& given, const ModelInfo& info, const std::string& key, int lo, int hi) {
  const Integer v = param(given, info, key);
  if (v < lo || v > hi)
    throw InvalidInput("parameter " + key + " = " + v.str() + " is outside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  return static_cast<int>(v);
}

inline Integer nonneg_param(const ModelParams& given, const ModelInfo& info, const std::string& key, int lo) {
  const Integer v = param(given, info, key);
  if (v < lo) throw InvalidInput("parameter " + key + " = " + v.str() + " must be at least " + std::to_string(lo));
  return v;
}

inline std::vector<Simplex> closed_star_of(const Subcomplex& m, const Simplex& center) {
  return star(m.complex(), center);
}

inline Integer parity_of(const Integer& v) { return odd(v) ? 1 : 0; }

/// Expected values from an explicit per-probe function.
template <class F>
void expect_at_probes(Scene& s, F&& value) {
  for (const auto& p : s.probes) {
    const Integer v = value(p);
    s.expect.hyperfunction_index.push_back({p, v});
    s.expect.parity.push_back({p, parity_of(v)});
  }
}

struct PlaneModel {
  DiskModel disk;
  Product prod;
  Subcomplex real_plane;   ///< diameter x diameter
  Subcomplex first_axis;   ///< disk x {c}
  Subcomplex second_axis;  ///< {c} x disk
  std::string origin;
};

inline PlaneModel plane_model(int k) {
  PlaneModel p;
  p.disk = disk_model(k);
  p.prod = product(p.disk.disk, p.disk.disk, p.disk.order, p.disk.order);
  const auto whole = Subcomplex::whole(p.disk.disk);
  const auto dia = Subcomplex::closure(p.disk.disk, p.disk.diameter);
  const auto center = Subcomplex::closure(p.disk.disk, {Simplex{"c"}});
  p.real_plane = product_subcomplex(p.prod, dia, dia);
  p.first_axis = product_subcomplex(p.prod, whole, center);
  p.second_axis = product_subcomplex(p.prod, center, whole);
  p.origin = product_vertex("c", "c");
  return p;
}

}  // namespace detail

/// Builds a built-in scene. Parameters not given take their catalog defaults.
inline Scene build_model(const std::string& name, const ModelParams& params = {}) {
  const ModelInfo* info = nullptr;
  for (const auto& m : model_catalog())
    if (m.name == name) info = &m;
  if (!info) throw InvalidInput("unknown model '" + name + "'");
  for (const auto& [key, v] : params)
    if (!info->defaults.count(key)) throw InvalidInput("model '" + name + "' has no parameter '" + key + "'");

  Scene s;
  s.name = name;

  if (name == "pair_C_R" || name == "kashiwara_point") {
    const int k = detail::small_param(params, *info, "k", 3, 64);
    const auto d = detail::disk_model(k);
    s.maximal_simplices = d.disk.maximal_simplices();
    s.subcomplexes["M"] = d.diameter;
    s.real_form = {"M", 1, d.reflection};
    const auto m = Subcomplex::closure(d.disk, d.diameter);
    s.probes = detail::closed_star_of(m, Simplex{"c"});
    if (name == "pair_C_R") {
      const Integer mult = detail::nonneg_param(params, *info, "m", 1);
      s.strata.push_back({"X", "X", 0, mult, {}, true});
      detail::expect_at_probes(s, [&](const Simplex&) { return mult; });
    } else {
      const Integer d0 = detail::nonneg_param(params, *info, "d0", 0);
      const Integer d1 = detail::nonneg_param(params, *info, "d1", 0);
      s.comment = "classical value: index at the origin is d0 + d1";
      s.subcomplexes["origin"] = {Simplex{"c"}};
      if (d0 > 0) s.strata.push_back({"origin", "origin", 1, d0, {}, true});
      if (d1 > 0) s.strata.push_back({"X", "X", 0, d1, {}, true});
      detail::expect_at_probes(s, [&](const Simplex& p) { return p == Simplex{"c"} ? Integer(d0 + d1) : d1; });
    }
  } else if (name == "antipodal_cover") {
    const int k = detail::small_param(params, *info, "k", 3, 64);
    const Integer mult = detail::nonneg_param(params, *info, "m", 1);
    VertexMap antipodal;
    for (int i = 0; i < 2 * k; ++i) {
      s.maximal_simplices.push_back(Simplex{detail::rim(i), detail::rim((i + 1) % (2 * k))});
      antipodal[detail::rim(i)] = detail::rim((i + k) % (2 * k));
    }
    s.comment = "free conjugation: M is empty and the orbit map is a degree-two cover of a k-gon";
    s.subcomplexes["M"] = {};
    s.real_form = {"M", 1, antipodal};
    s.strata.push_back({"X", "X", 0, mult, {}, true});
  } else {
    const int k = detail::small_param(params, *info, "k", 3, 8);
    const auto p = detail::plane_model(k);
    s.maximal_simplices = p.prod.complex.maximal_simplices();
    s.subcomplexes["M"] = p.real_plane.complex().maximal_simplices();
    s.real_form = {"M", 2, std::nullopt};
    s.probes = detail::closed_star_of(p.real_plane, Simplex{p.origin});
    const Integer mult = detail::nonneg_param(params, *info, "m", 1);
    const auto on_axis = [&](const Subcomplex& axis, const Simplex& q) {
      return axis.contains(q);
    };
    if (name == "smooth_line_in_C2") {
      const Integer pm = detail::nonneg_param(params, *info, "point_multiplicity", 0);
      s.subcomplexes["line"] = p.first_axis.complex().maximal_simplices();
      s.strata.push_back({"line", "line", 1, mult, {}, true});
      if (pm > 0) {
        s.subcomplexes["origin"] = {Simplex{p.origin}};
        s.strata.push_back({"origin", "origin", 2, pm, {}, true});
      }
      detail::expect_at_probes(s, [&](const Simplex& q) {
        Integer v = on_axis(p.first_axis, q) ? mult : Integer(0);
        if (q == Simplex{p.origin}) v += pm;
        return v;
      });
    } else if (name == "node_curve") {
      auto node = p.first_axis.complex().maximal_simplices();
      for (const auto& t : p.second_axis.complex().maximal_simplices()) node.push_back(t);
      s.subcomplexes["node"] = node;
      s.comment =
          "Eu(node) = 2: the Euler obstruction of a curve germ is its multiplicity, and the link of the "
          "crossing in Y has two components, one per smooth branch";
      StratumSpec st{"node", "node", 1, mult, {}, false};
      st.eu.overrides.push_back({Simplex{p.origin}, 2});
      s.strata.push_back(st);
      // i^!(Eu) is -2 at the node and -1 on the open axes; the index is -m times that.
      detail::expect_at_probes(s, [&](const Simplex& q) {
        if (q == Simplex{p.origin}) return Integer(2 * mult);
        return on_axis(p.first_axis, q) || on_axis(p.second_axis, q) ? mult : Integer(0);
      });
    } else {
      throw InvalidInput("unknown model '" + name + "'");
    }
  }
  return canonicalize(std::move(s));
}

}  // namespace cfcalc
