#include "support/oracles.hpp"
#include "support/random_models.hpp"

#include <gtest/gtest.h>

namespace cfcalc {
namespace {

SimplicialComplex interval() { return build_complex({{"a", "b"}}); }
SimplicialComplex circle3() { return build_complex({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

SimplicialComplex polygon(int n, const std::string& p) {
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({p + std::to_string(i), p + std::to_string((i + 1) % n)});
  return build_complex(edges);
}

Involution antipodal(int n, const std::string& p) {
  VertexMap m;
  for (int i = 0; i < n; ++i) m[p + std::to_string(i)] = p + std::to_string((i + n / 2) % n);
  return Involution(polygon(n, p), m);
}

/// Hexagon h0..h5 wrapped twice around the triangle t0 t1 t2.
SimplicialMap double_cover() {
  VertexMap m;
  for (int i = 0; i < 6; ++i) m["h" + std::to_string(i)] = "t" + std::to_string(i % 3);
  return SimplicialMap(polygon(6, "h"), polygon(3, "t"), m);
}

SimplicialComplex tetra_boundary() {
  return build_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

/// 2k-sector disk and its diameter r0 - c - rk.
struct Disk {
  SimplicialComplex x;
  Subcomplex diameter;
};

Disk disk(int k = 3) {
  std::vector<std::vector<std::string>> tris;
  for (int i = 0; i < 2 * k; ++i) tris.push_back({"c", "r" + std::to_string(i), "r" + std::to_string((i + 1) % (2 * k))});
  auto x = build_complex(tris);
  return {x, Subcomplex::closure(x, {Simplex{"c", "r0"}, Simplex{"c", "r" + std::to_string(k)}})};
}

ConstructibleFunction values(const SimplicialComplex& k, std::vector<std::pair<Simplex, int>> v) {
  ConstructibleFunction f(k);
  for (auto& [s, x] : v) f.set(s, x);
  return f;
}

TEST(Indicator, Examples) {
  auto k = interval();
  EXPECT_EQ(indicator(Subcomplex::whole(k)), constant(k, Integer(1)));
  EXPECT_TRUE(indicator(Subcomplex::closure(k, {})).is_zero());
  auto u = complement_open(k, {Simplex{"a"}, Simplex{"b"}});
  EXPECT_EQ(indicator(u), values(k, {{Simplex{"a", "b"}, 1}}));
}

TEST(PointwiseOps, Examples) {
  auto k = interval();
  testing::Gen gen(1);
  auto phi = gen.function(k);
  EXPECT_EQ(phi + ConstructibleFunction(k), phi);
  EXPECT_EQ(Integer(2) * indicator(Subcomplex::whole(k)), constant(k, Integer(2)));
  auto x = build_complex({{"a", "b", "c"}});
  auto m = Subcomplex::closure(x, {Simplex{"a", "b"}});
  auto y = Subcomplex::closure(x, {Simplex{"b", "c"}});
  EXPECT_EQ(indicator(m) * indicator(y), indicator(intersect(m, y)));
  EXPECT_THROW(phi + ConstructibleFunction(x), InvalidInput);
}

TEST(EulerIntegral, Examples) {
  EXPECT_EQ(euler_integral(indicator(Subcomplex::whole(circle3()))), 0);
  EXPECT_EQ(euler_integral(indicator(Subcomplex::whole(tetra_boundary()))), 2);
  EXPECT_EQ(euler_integral(indicator(complement_open(interval(), {Simplex{"a"}, Simplex{"b"}}))), -1);
}

TEST(Pullback, Examples) {
  testing::Gen gen(2);
  auto k = circle3();
  auto psi = gen.function(k);
  EXPECT_EQ(pullback(SimplicialMap::identity(k), psi), psi);
  auto to_pt = SimplicialMap::to_point(k);
  EXPECT_EQ(pullback(to_pt, constant(to_pt.target(), Integer(7))), constant(k, Integer(7)));
  auto cover = double_cover();
  EXPECT_EQ(pullback(cover, constant(cover.target(), Integer(1))), constant(cover.source(), Integer(1)));
}

TEST(Pushforward, Examples) {
  auto k = circle3();
  EXPECT_EQ(pushforward(SimplicialMap::to_point(k), constant(k, Integer(1))).at(Simplex{"pt"}), 0);
  auto cover = double_cover();
  const auto one = constant(cover.source(), Integer(1));
  const auto pushed = pushforward(cover, one);
  EXPECT_EQ(oracle::values_of(pushed), oracle::pushforward(cover, oracle::values_of(one)));
  EXPECT_EQ(pushed, constant(cover.target(), Integer(2)));
  EXPECT_EQ(pushforward(SimplicialMap::to_point(interval()), constant(interval(), Integer(1))).at(Simplex{"pt"}), 1);
}

TEST(Dual, Examples) {
  auto pt = build_complex({{"p"}});
  EXPECT_EQ(dual(constant(pt, Integer(1))), constant(pt, Integer(1)));
  EXPECT_EQ(dual(constant(circle3(), Integer(1))), constant(circle3(), Integer(-1)));
  auto k = interval();
  auto d = dual(constant(k, Integer(1)));
  EXPECT_EQ(d, values(k, {{Simplex{"a", "b"}, -1}}));
  EXPECT_EQ(dual(d), constant(k, Integer(1)));
}

TEST(Dual, ClosedManifoldSign) {
  EXPECT_EQ(dual(constant(tetra_boundary(), Integer(1))), constant(tetra_boundary(), Integer(1)));
  EXPECT_EQ(dual(constant(polygon(7, "p"), Integer(1))), constant(polygon(7, "p"), Integer(-1)));
  // Interior of a disk: D(1) = (-1)^2; boundary: 0.
  auto d = disk();
  auto dx = dual(indicator(Subcomplex::whole(d.x)));
  EXPECT_EQ(dx.at(Simplex{"c"}), 1);
  EXPECT_EQ(dx.at(Simplex{"c", "r1"}), 1);
  EXPECT_EQ(dx.at(Simplex{"r1"}), 0);
  EXPECT_EQ(dx.at(Simplex{"r1", "r2"}), 0);
}

TEST(Dual, MatchesStarSumOracleAndIsAnInvolution) {
  testing::Gen gen(2024);
  for (int t = 0; t < 200; ++t) {
    auto k = gen.complex(8, 3);
    auto phi = gen.function(k);
    auto d = dual(phi);
    EXPECT_EQ(oracle::values_of(d), oracle::dual(k.simplices(), oracle::values_of(phi)));
    EXPECT_EQ(dual(d), phi);
  }
}

TEST(ShriekRestrict, Examples) {
  testing::Gen gen(3);
  auto k = gen.complex();
  auto phi = gen.function(k);
  EXPECT_EQ(shriek_restrict(Subcomplex::whole(k), phi).values(), phi.values());

  auto d = disk();
  auto r = shriek_restrict(d.diameter, indicator(Subcomplex::whole(d.x)));
  for (const auto& s : {Simplex{"c"}, Simplex{"c", "r0"}, Simplex{"c", "r3"}}) EXPECT_EQ(r.at(s), -1) << s.to_string();

  auto center = Subcomplex::closure(d.x, {Simplex{"c"}});
  EXPECT_EQ(shriek_restrict(center, indicator(center)), constant(center.complex(), Integer(1)));
  auto on_diameter = shriek_restrict(d.diameter, indicator(center));
  EXPECT_EQ(on_diameter.at(Simplex{"c"}), 1);
  EXPECT_EQ(on_diameter.support().size(), 1u);
}

TEST(ShriekRestrict, MatchesOracle) {
  testing::Gen gen(77);
  for (int t = 0; t < 100; ++t) {
    auto k = gen.complex();
    auto m = gen.subcomplex(k);
    auto phi = gen.function(k);
    EXPECT_EQ(oracle::values_of(shriek_restrict(m, phi)),
              oracle::shriek(k.simplices(), m.complex().simplices(), oracle::values_of(phi)));
  }
}

TEST(OpenExtend, Examples) {
  auto k = interval();
  auto u = complement_open(k, {Simplex{"a"}, Simplex{"b"}});
  EXPECT_TRUE(open_extend(u, ConstructibleFunction(k)).is_zero());
  EXPECT_EQ(open_extend(u, indicator(u)), values(k, {{Simplex{"a", "b"}, 1}}));
  EXPECT_EQ(euler_integral(open_extend(u, Integer(3) * indicator(u))), -3);
  EXPECT_THROW(open_extend(u, constant(k, Integer(1))), InvalidInput);
}

TEST(OpenPushforward, Examples) {
  auto k = interval();
  auto u = complement_open(k, {Simplex{"a"}, Simplex{"b"}});
  EXPECT_EQ(open_pushforward(u, indicator(u)), constant(k, Integer(1)));
  testing::Gen gen(4);
  auto whole = complement_open(Subcomplex::closure(k, {}));
  auto psi = gen.function(k);
  EXPECT_EQ(open_pushforward(whole, psi), psi);
  EXPECT_TRUE(open_pushforward(u, ConstructibleFunction(k)).is_zero());
}

TEST(OpenPushforward, AgreesOnTheOpenSet) {
  testing::Gen gen(8);
  for (int t = 0; t < 50; ++t) {
    auto k = gen.complex();
    auto u = complement_open(gen.subcomplex(k));
    auto psi = open_restrict(u, gen.function(k));
    EXPECT_EQ(open_restrict(u, open_pushforward(u, psi)), psi);
  }
}

TEST(TriangleDecompose, Examples) {
  auto k = interval();
  auto ends = Subcomplex::closure(k, {Simplex{"a"}, Simplex{"b"}});
  auto [shriek, boundary] = triangle_decompose(ends, constant(k, Integer(1)));
  EXPECT_TRUE(shriek.is_zero());
  EXPECT_EQ(boundary, constant(ends.complex(), Integer(1)));

  testing::Gen gen(5);
  auto x = gen.complex();
  auto phi = gen.function(x);
  auto whole = triangle_decompose(Subcomplex::whole(x), phi);
  EXPECT_EQ(whole.shriek.values(), phi.values());
  EXPECT_TRUE(whole.boundary.is_zero());
  auto zero = triangle_decompose(gen.subcomplex(x), ConstructibleFunction(x));
  EXPECT_TRUE(zero.shriek.is_zero());
  EXPECT_TRUE(zero.boundary.is_zero());
}

TEST(TriangleDecompose, SumIsRestriction) {
  testing::Gen gen(6);
  for (int t = 0; t < 100; ++t) {
    auto x = gen.complex();
    auto m = gen.subcomplex(x);
    auto phi = gen.function(x);
    auto terms = triangle_decompose(m, phi);
    EXPECT_EQ(terms.shriek + terms.boundary, restrict_to(m, phi));
  }
}

TEST(Linearity, AllOperations) {
  testing::Gen gen(7);
  for (int t = 0; t < 50; ++t) {
    auto x = gen.complex();
    auto m = gen.subcomplex(x);
    auto u = complement_open(m);
    auto f = gen.map_from(x, "w");
    auto phi = gen.function(x), psi = gen.function(x);
    const Integer a = gen.uniform(-4, 4), b = gen.uniform(-4, 4);
    auto mix = a * phi + b * psi;
    EXPECT_EQ(dual(mix), a * dual(phi) + b * dual(psi));
    EXPECT_EQ(shriek_restrict(m, mix), a * shriek_restrict(m, phi) + b * shriek_restrict(m, psi));
    EXPECT_EQ(open_pushforward(u, open_restrict(u, mix)),
              a * open_pushforward(u, open_restrict(u, phi)) + b * open_pushforward(u, open_restrict(u, psi)));
    EXPECT_EQ(pushforward(f, mix), a * pushforward(f, phi) + b * pushforward(f, psi));
    EXPECT_EQ(euler_integral(mix), a * euler_integral(phi) + b * euler_integral(psi));
    auto g1 = gen.function(f.target()), g2 = gen.function(f.target());
    EXPECT_EQ(pullback(f, a * g1 + b * g2), a * pullback(f, g1) + b * pullback(f, g2));
  }
}

TEST(Functoriality, PushforwardAndPullback) {
  testing::Gen gen(8);
  for (int t = 0; t < 100; ++t) {
    auto x = gen.complex();
    auto f = gen.map_from(x, "y");
    auto g = gen.map_from(f.target(), "z");
    auto gf = compose(g, f);
    auto phi = gen.function(x);
    EXPECT_EQ(pushforward(gf, phi), pushforward(g, pushforward(f, phi)));
    EXPECT_EQ(oracle::values_of(pushforward(f, phi)), oracle::pushforward(f, oracle::values_of(phi)));
    auto chi = gen.function(g.target());
    EXPECT_EQ(pullback(gf, chi), pullback(f, pullback(g, chi)));
  }
}

TEST(Functoriality, PushToPointIsEulerIntegral) {
  testing::Gen gen(9);
  for (int t = 0; t < 50; ++t) {
    auto x = gen.complex();
    auto phi = gen.function(x);
    EXPECT_EQ(pushforward(SimplicialMap::to_point(x), phi).at(Simplex{"pt"}), euler_integral(phi));
  }
}

TEST(BaseChange, ShriekCommutesWithClosedExtension) {
  testing::Gen gen(10);
  for (int t = 0; t < 100; ++t) {
    auto x = gen.complex();
    auto y = gen.subcomplex(x, 0.5);
    auto m = gen.subcomplex(x, 0.4);
    auto my = intersect(y, m);
    auto psi = gen.function(y.complex());
    auto lhs = shriek_restrict(m, extend_by_zero(y, psi));
    auto my_in_y = Subcomplex::where(y.complex(), [&](std::size_t i) { return my.contains_index(y.to_parent(i)); });
    auto my_in_m = Subcomplex::where(m.complex(), [&](std::size_t i) { return my.contains_index(m.to_parent(i)); });
    EXPECT_EQ(lhs, extend_by_zero(my_in_m, shriek_restrict(my_in_y, psi)));
  }
}

TEST(Mod2, ReductionCommutesWithPushforwardAndIntegral) {
  testing::Gen gen(12);
  for (int t = 0; t < 50; ++t) {
    auto x = gen.complex();
    auto f = gen.map_from(x, "y");
    auto phi = gen.function(x);
    EXPECT_EQ(mod2_reduce(pushforward(f, phi)), pushforward(f, mod2_reduce(phi)));
    EXPECT_EQ(reduce_mod2(euler_integral(phi)), euler_integral(mod2_reduce(phi)));
    EXPECT_EQ(mod2_reduce(dual(phi)), dual(mod2_reduce(phi)));
  }
}

TEST(OrbitPushforward, AntipodalHexagon) {
  auto tau = antipodal(6, "h");
  auto q = orbit_quotient(tau);
  EXPECT_EQ(q.quotient.f_vector(), (std::vector<std::size_t>{3, 3}));
  auto one = constant(tau.complex(), Integer(1));
  EXPECT_EQ(orbit_pushforward(tau, one), constant(q.quotient, Integer(2)));
  EXPECT_EQ(euler_integral(one), 0);
}

TEST(OrbitPushforward, SwappedPoints) {
  auto k = build_complex({{"p"}, {"q"}});
  Involution tau(k, {{"p", "q"}, {"q", "p"}});
  auto pushed = orbit_pushforward(tau, constant(k, Integer(1)));
  EXPECT_EQ(pushed.ambient().size(), 1u);
  EXPECT_EQ(pushed[0], 2);
  EXPECT_EQ(euler_integral(pushed), 2);
  EXPECT_EQ(reduce_mod2(euler_integral(pushed)), Mod2(false));
  auto lopsided = values(k, {{Simplex{"p"}, 1}});
  EXPECT_FALSE(is_invariant(tau, lopsided));
  EXPECT_EQ(orbit_pushforward(tau, lopsided)[0], 1);
}

TEST(OrbitPushforward, RejectsBadInvolutions) {
  EXPECT_THROW(orbit_quotient(antipodal(4, "s")), InvalidInput);  // quotient would be a double edge
  auto k = build_complex({{"p", "q"}});
  EXPECT_THROW(Involution(k, {{"p", "q"}, {"q", "p"}}), InvalidInput);
  auto two = build_complex({{"p", "q"}, {"q", "r"}});
  Involution flip(two, {{"p", "r"}, {"r", "p"}});
  EXPECT_FALSE(flip.strongly_free());
  EXPECT_THROW(orbit_quotient(flip), InvalidInput);
}

TEST(OrbitPushforward, ParityLemmaOnRandomCovers) {
  testing::Gen gen(13);
  for (int t = 0; t < 100; ++t) {
    auto cover = gen.double_cover();
    ASSERT_TRUE(cover.deck.strongly_free());
    auto alpha = gen.invariant_function(cover.deck);
    const auto chi = euler_integral(alpha);
    EXPECT_FALSE(odd(chi)) << chi;
    auto q = orbit_quotient(cover.deck);
    EXPECT_EQ(q.quotient.size() * 2, cover.total.size());
    auto pushed = orbit_pushforward(cover.deck, alpha);
    EXPECT_EQ(euler_integral(pushed), chi);
    EXPECT_TRUE(pushforward(q.projection, mod2_reduce(alpha)).is_zero());
  }
}

}  // namespace
}  // namespace cfcalc
