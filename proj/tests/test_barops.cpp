#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cyclin/models.hpp>

using namespace cyclin;

TEST_CASE("coderivation of the identity is the identity at every arity") {
  auto A = wedge_algebra<GaussQ>(2, 5);
  auto f = MapSeq<GaussQ>::identity(A.module, 5);
  for (int n = 1; n <= 3; ++n) {
    auto c = coderivation_component(f, n, n);
    for (const auto& [in, row] : c.tab) {
      CHECK(row.size() == 1);
      CHECK(row.begin()->first == in);
      CHECK(row.begin()->second == GaussQ(1));
    }
    CHECK(c.tab.size() == static_cast<std::size_t>(std::pow(A.module->dim(), n)));
  }
}

TEST_CASE("coderivation component with only f2 at arity 3 has two placements") {
  BaseRing base;
  ModulePtr mod = make_module(base, {{"x", 1, 0, 0}, {"y", 2, 0, 0}});
  MapSeq<GaussQ> f(mod, mod, 0, 4);
  f[2].add_entry({0, 0}, {1}, GaussQ(1));  // f2(x,x) = y
  auto c = coderivation_component(f, 3, 2);
  // expansion by hand: placements id (x) f2 and f2 (x) id; |f| = 0 so both
  // Koszul signs are +1
  auto& row = c.tab.at(Tuple{0, 0, 0});
  CHECK(row.at(Tuple{0, 1}) == GaussQ(1));
  CHECK(row.at(Tuple{1, 0}) == GaussQ(1));
  MapSeq<GaussQ> z(mod, mod, 0, 4);
  CHECK(coderivation_component(z, 3, 2).is_zero());
}

TEST_CASE("Koszul sign shows up for odd-degree placements") {
  BaseRing base;
  // x has shifted degree 1; f1 has odd degree, so id (x) f1 picks up a sign
  ModulePtr mod = make_module(base, {{"x", 2, 0, 0}, {"y", 3, 0, 0}});
  MapSeq<GaussQ> f(mod, mod, 1, 4);
  f[1].add_entry({0}, {1}, GaussQ(1));
  auto c = coderivation_component(f, 2, 2);
  auto& row = c.tab.at(Tuple{0, 0});
  CHECK(row.at(Tuple{0, 1}) == GaussQ(-1));
  CHECK(row.at(Tuple{1, 0}) == GaussQ(1));
}

TEST_CASE("cohomomorphism components") {
  auto A = wedge_algebra<GaussQ>(2, 5);
  auto f = MapSeq<GaussQ>::identity(A.module, 5);
  auto c22 = cohom_component(f, 2, 2);
  CHECK(c22.tab.size() == static_cast<std::size_t>(A.module->dim() * A.module->dim()));
  CHECK(cohom_component(f, 2, 1).is_zero());

  std::mt19937 rng(3);
  auto g = random_pre_iso<GaussQ>(A.module, 5, rng, 0.4, 2);
  auto c32 = cohom_component(g, 3, 2);
  MultiMap<GaussQ> expect(std::vector<ModulePtr>(3, A.module), {A.module, A.module}, 0);
  for (const auto& [in1, row1] : g[1].tab)
    for (const auto& [out1, c1] : row1)
      for (const auto& [in2, row2] : g[2].tab)
        for (const auto& [out2, c2] : row2) {
          Tuple in = in1;
          in.insert(in.end(), in2.begin(), in2.end());
          expect.add_entry(in, {out1[0], out2[0]}, c1 * c2);
          Tuple inb = in2;
          inb.insert(inb.end(), in1.begin(), in1.end());
          expect.add_entry(inb, {out2[0], out1[0]}, c1 * c2);
        }
  CHECK(max_row_norm(c32 - expect) == 0.0);
}

TEST_CASE("cohom_component requires f0 = 0") {
  auto A = wedge_algebra<GaussQ>(2, 4);
  MapSeq<GaussQ> f(A.module, A.module, 0, 4);
  f[0].add_entry({}, {0}, GaussQ(1));
  CHECK_THROWS_AS(cohom_component(f, 2, 1), std::invalid_argument);
}

TEST_CASE("diamond: identity laws and strict composition") {
  auto A = wedge_algebra<GaussQ>(2, 6);
  std::mt19937 rng(11);
  auto f = random_pre_iso<GaussQ>(A.module, 6, rng, 0.4, 4);
  auto idm = MapSeq<GaussQ>::identity(A.module, 6);
  auto lf = compose_diamond(idm, f);
  auto rf = compose_diamond(f, idm);
  for (int n = 1; n <= 6; ++n) {
    CHECK(max_row_norm(lf[n] - f[n]) == 0.0);
    CHECK(max_row_norm(rf[n] - f[n]) == 0.0);
  }
  MapSeq<GaussQ> s1 = MapSeq<GaussQ>::identity(A.module, 6);
  s1[1] = GaussQ(2) * s1[1];
  MapSeq<GaussQ> s2 = MapSeq<GaussQ>::identity(A.module, 6);
  s2[1] = GaussQ(3) * s2[1];
  auto s = compose_diamond(s1, s2);
  CHECK(s.strict());
  CHECK(max_row_norm(s[1] - GaussQ(6) * MultiMap<GaussQ>::identity(A.module)) == 0.0);
}

TEST_CASE("diamond is associative (exact, random data)") {
  auto A = wedge_algebra<GaussQ>(2, 5);
  std::mt19937 rng(5);
  auto f = random_pre_iso<GaussQ>(A.module, 5, rng, 0.35, 3);
  auto g = random_pre_iso<GaussQ>(A.module, 5, rng, 0.35, 3);
  auto h = random_pre_iso<GaussQ>(A.module, 5, rng, 0.35, 3);
  auto l = compose_diamond(compose_diamond(h, g), f);
  auto r = compose_diamond(h, compose_diamond(g, f));
  for (int n = 1; n <= 5; ++n) CHECK(max_row_norm(l[n] - r[n]) == 0.0);
}

TEST_CASE("diamond is associative (float, residual < 1e-12)") {
  auto A = wedge_algebra<CD>(2, 5);
  std::mt19937 rng(17);
  auto f = random_pre_iso<CD>(A.module, 5, rng, 0.5, 3);
  auto g = random_pre_iso<CD>(A.module, 5, rng, 0.5, 3);
  auto h = random_pre_iso<CD>(A.module, 5, rng, 0.5, 3);
  auto l = compose_diamond(compose_diamond(h, g), f);
  auto r = compose_diamond(h, compose_diamond(g, f));
  for (int n = 1; n <= 5; ++n) CHECK(max_row_norm(l[n] - r[n]) < 1e-12);
}

TEST_CASE("truncation consistency: low arities do not depend on the cutoff") {
  auto A = wedge_algebra<GaussQ>(2, 8);
  std::mt19937 rng(23);
  auto f8 = random_pre_iso<GaussQ>(A.module, 8, rng, 0.3, 5);
  auto g8 = random_pre_iso<GaussQ>(A.module, 8, rng, 0.3, 5);
  auto full = compose_diamond(g8, f8);
  MapSeq<GaussQ> f5(A.module, A.module, 0, 5), g5(A.module, A.module, 0, 5);
  for (int n = 0; n <= 5; ++n) {
    f5[n] = f8[n];
    g5[n] = g8[n];
  }
  auto cut = compose_diamond(g5, f5);
  for (int n = 1; n <= 5; ++n) CHECK(max_row_norm(full[n] - cut[n]) == 0.0);
}

TEST_CASE("functoriality of the cofree lift: (g<>f)^ = ^g o ^f") {
  auto A = wedge_algebra<GaussQ>(2, 4);
  std::mt19937 rng(29);
  auto f = random_pre_iso<GaussQ>(A.module, 4, rng, 0.4, 3);
  auto g = random_pre_iso<GaussQ>(A.module, 4, rng, 0.4, 3);
  auto gf = compose_diamond(g, f);
  auto lhs = cohom_component(gf, 3, 2);
  MultiMap<GaussQ> rhs(std::vector<ModulePtr>(3, A.module), {A.module, A.module}, 0);
  for (int m = 2; m <= 3; ++m) {
    auto fm = cohom_component(f, 3, m);
    auto gk = cohom_component(g, m, 2);
    for (const auto& [in, row] : fm.tab)
      for (const auto& [mid, c] : row) {
        auto it = gk.tab.find(mid);
        if (it == gk.tab.end()) continue;
        for (const auto& [out, c2] : it->second) rhs.add_entry(in, out, c * c2);
      }
  }
  CHECK(max_row_norm(lhs - rhs) == 0.0);
}

TEST_CASE("hochschild lift: placements agree with the coderivation pattern") {
  auto A = wedge_algebra<GaussQ>(2, 4);
  auto mu_lift = coderivation_component(A.mu, 3, 2);
  auto h10 = hochschild_lift_component(A.mu, 1, 0, 3);
  CHECK(!h10.is_zero());
  for (const auto& [in, row] : h10.tab)
    for (const auto& [out, c] : row) {
      auto it = mu_lift.tab.find(in);
      REQUIRE(it != mu_lift.tab.end());
      CHECK(it->second.at(out) == c);
    }
}

TEST_CASE("hochschild lift: arity-0 constant insertion") {
  auto A = wedge_algebra<GaussQ>(2, 4);
  MapSeq<GaussQ> xi(A.module, A.module, -1, 4);
  xi[0].add_entry({}, {A.module->index_of("e1")}, GaussQ(2));
  auto l = hochschild_lift_component(xi, 1, 1, 2);
  // entries (b, b') -> (b, e1, b') with sign from moving xi_0 (degree -1)
  // past the first input
  auto& row = l.tab.at(Tuple{A.module->index_of("e12"), A.module->index_of("e2")});
  Tuple out{A.module->index_of("e12"), A.module->index_of("e1"), A.module->index_of("e2")};
  // |e12|_1 = 1, so the sign is (-1)^{(-1)*1} = -1
  CHECK(row.at(out) == GaussQ(-2));
  MapSeq<GaussQ> z(A.module, A.module, -1, 4);
  CHECK(hochschild_lift_component(z, 1, 1, 2).is_zero());
}
