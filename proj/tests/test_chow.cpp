#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "ulrich/catalog.hpp"

using namespace ulrich;
using testutil::rand_divisor;
using testutil::rand_int;

namespace {

ChowElement rand_chow(const ScrollSpec& X) {
  ChowElement e = ChowElement::zero(X.surface.rank());
  e.d0 = Rat(rand_int(-3, 3));
  e.d1_xi = Rat(rand_int(-3, 3), rand_int(1, 3));
  for (auto& x : e.d1_div) x = Rat(rand_int(-3, 3), rand_int(1, 2));
  for (auto& x : e.d2_xi_div) x = Rat(rand_int(-3, 3));
  e.d2_f = Rat(rand_int(-3, 3));
  e.d3 = Rat(rand_int(-3, 3));
  return e;
}

}  // namespace

TEST_CASE("catalog scroll degrees") {
  const std::vector<std::pair<std::string, Int>> expected = {
      {"segre", 3},     {"bordiga", 6},   {"p2-d10", 10},    {"p2-c2-6", 10}, {"palatini", 7},
      {"quadric", 9},   {"f1-c2-10", 11}, {"f1-c2-11", 10},  {"k3-general", 9}, {"k3-nl", 9}};
  REQUIRE(catalog().size() == expected.size());
  for (const auto& [name, deg] : expected) {
    const auto* e = find_catalog_entry(name);
    REQUIRE(e != nullptr);
    CAPTURE(name);
    CHECK(scroll_degree(e->scroll) == deg);
    CHECK(self_intersection(e->scroll.surface, e->scroll.bundle.c1) - e->scroll.bundle.c2 == deg);
  }
}

TEST_CASE("products in the Chow ring reduce correctly") {
  // xi^3 through the ring equals c1^2 - c2 on every scroll
  for (const auto& entry : catalog()) {
    const auto xi_e = chow_xi(entry.scroll);
    const auto cube = product(entry.scroll, xi_e, product(entry.scroll, xi_e, xi_e));
    CAPTURE(entry.scroll.name);
    CHECK(cube.d3 == Rat(scroll_degree(entry.scroll)));
  }

  const auto* pal = find_catalog_entry("palatini");
  REQUIRE(pal);
  const auto& X = pal->scroll;
  const auto xi = chow_xi(X);
  const auto xi3 = product(X, xi, product(X, xi, xi));
  CHECK(xi3.d3 == Rat(7));  // deg of the Palatini scroll

  CHECK(product(X, xi, chow_fiber(X)).d3 == Rat(1));  // xi.f = [pt]
  CHECK(product(X, chow_fiber(X), chow_fiber(X)) == ChowElement::zero(X.surface.rank()));

  const auto* k3 = find_catalog_entry("k3-nl");
  REQUIRE(k3);
  const auto& K = k3->scroll;
  const auto lhs = product(
      K, chow_line_bundle(K, 2, DivisorClass{1, -1}),
      product(K, chow_pullback(K, DivisorClass{0, 1}), chow_pullback(K, DivisorClass{1, 0})));
  CHECK(lhs.d3 == Rat(32));
}

TEST_CASE("the Chow product is commutative and associative") {
  for (const char* name : {"quadric", "palatini", "k3-nl"}) {
    const auto& X = find_catalog_entry(name)->scroll;
    for (int i = 0; i < 150; ++i) {
      const auto a = rand_chow(X), b = rand_chow(X), c = rand_chow(X);
      CHECK(product(X, a, b) == product(X, b, a));
      CHECK(product(X, product(X, a, b), c) == product(X, a, product(X, b, c)));
    }
  }
}

TEST_CASE("pushforward chi: the worked values") {
  const auto& Q = find_catalog_entry("quadric")->scroll;
  CHECK(chi_pushforward(Q, -1, DivisorClass{4, -7}) == 0);
  CHECK(chi_pushforward(Q, 0, DivisorClass{3, -3}) == -8);
  const auto& K = find_catalog_entry("k3-nl")->scroll;
  CHECK(chi_pushforward(K, 2, DivisorClass{1, -2}) == -24);
  for (const auto& entry : catalog())
    CHECK(chi_pushforward(entry.scroll, -1, rand_divisor(entry.scroll.surface, 5)) == 0);
}

TEST_CASE("HRR on the structure sheaf gives chi(O_S)") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.scroll.name);
    const auto z = DivisorClass::zero(entry.scroll.surface.rank());
    CHECK(chi_hrr_line(entry.scroll, 0, z) == entry.scroll.surface.chi_structure);
  }
}

TEST_CASE("HRR equals the pushforward chi on 1000 random line bundles per scroll") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.scroll.name);
    const auto& X = entry.scroll;
    for (int i = 0; i < 1000; ++i) {
      const Int a = rand_int(-6, 6);
      const auto D = rand_divisor(X.surface, 6);
      CAPTURE(a, D.c);
      REQUIRE(chi_hrr_line(X, a, D) == chi_pushforward(X, a, D));
    }
  }
}

TEST_CASE("endomorphism chi via HRR graded pieces") {
  const auto& Q = find_catalog_entry("quadric")->scroll;
  const Int chiQ = 2 * chi_hrr_line(Q, 0, DivisorClass{0, 0}) +
                   chi_hrr_line(Q, 0, DivisorClass{-3, 3}) +
                   chi_hrr_line(Q, 0, DivisorClass{3, -3});
  CHECK(chiQ == -14);
  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const Int chiK = 2 * chi_hrr_line(K, 0, DivisorClass{0, 0}) +
                   chi_hrr_line(K, 2, DivisorClass{1, -2}) +
                   chi_hrr_line(K, -2, DivisorClass{-1, 2});
  CHECK(chiK == -14);
}

TEST_CASE("pullback-twist Chern classes") {
  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const auto [c1, c2] = pullback_twist_chern(K, BundleData{2, DivisorClass{1, 0}, 11});
  CHECK(c1 == chow_line_bundle(K, 2, DivisorClass{1, 0}));
  const auto xi = chow_xi(K);
  const ChowElement want = product(K, xi, xi) +
                           product(K, xi, chow_pullback(K, DivisorClass{1, 0})) +
                           Rat(11) * chow_fiber(K);
  CHECK(c2 == want);
  CHECK(pair_with_ample(K, c2) == 28);

  const auto& F = find_catalog_entry("f1-c2-10")->scroll;
  const auto [fc1, fc2] = pullback_twist_chern(F, BundleData{2, DivisorClass{1, 2}, 6});
  const auto fxi = chow_xi(F);
  CHECK(fc2 == product(F, fxi, fxi) + product(F, fxi, chow_pullback(F, DivisorClass{1, 2})) +
                   Rat(6) * chow_fiber(F));
  CHECK_THROWS_AS(pullback_twist_chern(K, BundleData{3, DivisorClass{1, 0}, 1}),
                  std::invalid_argument);
}

TEST_CASE("extension Chern classes") {
  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const auto A1 = chow_line_bundle(K, 2, DivisorClass{1, -1});
  const auto A2 = chow_line_bundle(K, 0, DivisorClass{0, 1});
  const auto [c1, c2] = extension_chern(K, A1, A2);
  CHECK(c1 == chow_line_bundle(K, 2, DivisorClass{1, 0}));
  CHECK(pair_with_ample(K, c2) == 32);
  // symmetric in the arguments
  const auto [d1, d2] = extension_chern(K, A2, A1);
  CHECK(c1 == d1);
  CHECK(c2 == d2);

  const auto& P = find_catalog_entry("palatini")->scroll;
  const auto L1 = chow_line_bundle(P, 2, DivisorClass{-1, 1, 0, 0, 0, 0, 0});
  const auto L1p = chow_line_bundle(P, 0, DivisorClass{4, -2, -1, -1, -1, -1, -1});
  const auto [pc1, pc2] = extension_chern(P, L1, L1p);
  CHECK(pc1 == chow_line_bundle(P, 2, DivisorClass{3, -1, -1, -1, -1, -1, -1}));

  CHECK_THROWS_AS(extension_chern(K, A1, ChowElement::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(extension_chern(K, A1, chow_fiber(K)), std::invalid_argument);
}

TEST_CASE("hyperplane sections are blow-ups satisfying adjunction") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.scroll.name);
    const auto hb = hyperplane_blowup(entry.scroll);
    CHECK(hb.adjunction_ok);
    CHECK(self_intersection(hb.surface, hb.hyperplane) == scroll_degree(entry.scroll));
    CHECK(hb.surface.rank() ==
          entry.scroll.surface.rank() + static_cast<std::size_t>(entry.scroll.bundle.c2));
  }
  const auto segre = find_catalog_entry("segre");
  CHECK(self_intersection(hyperplane_blowup(segre->scroll).surface,
                          hyperplane_blowup(segre->scroll).hyperplane) == 3);
}

TEST_CASE("scroll validation catches inconsistent presentations") {
  ScrollSpec bad = find_catalog_entry("quadric")->scroll;
  bad.bundle.c2 = 8;  // presentation still encodes c2 = 9
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("rank-2 HRR reproduces the Ulrich chi numerics of every construction") {
  for (const auto& entry : catalog()) {
    const auto& X = entry.scroll;
    BundleData F;
    if (X.surface.kind == SurfaceKind::BlownPlane) {
      DivisorClass L = DivisorClass::zero(7);
      L.c[0] = 1;
      F = BundleData{2, 2 * L - X.surface.ample_ref, 1};
    } else {
      F = twist(X.surface, special_ulrich_numerics(X.surface, X.bundle.c1), -X.bundle.c1);
    }
    const auto prov = X.surface.kind == SurfaceKind::BlownPlane ? PullbackProvenance::Explicit
                                                                : PullbackProvenance::SpecialUlrichTwist;
    const auto G = construct_pullback_ulrich(X, F, prov);
    CAPTURE(X.name);
    CHECK(chi_hrr_rank2(X, G.c1, G.c2) == 2 * scroll_degree(X));
    for (Int j = 1; j <= 3; ++j) {
      const ChowElement L = Rat(-j) * chow_xi(X);
      const auto [tc1, tc2] = rank2_chern_twist(X, G.c1, G.c2, L);
      CHECK(chi_hrr_rank2(X, tc1, tc2) == 0);
    }
  }
}
