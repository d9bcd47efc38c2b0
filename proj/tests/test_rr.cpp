#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/oracle.hpp"

using namespace ulrich;
using testutil::rand_divisor;
using testutil::rand_int;

TEST_CASE("chi_line matches the closed forms per family") {
  const auto p2 = make_projective_plane();
  CHECK(chi_line(p2, DivisorClass{-1}) == 0);
  for (Int b = -6; b <= 6; ++b)
    CHECK(chi_line(p2, DivisorClass{b}) == (b + 1) * (b + 2) / 2);

  const auto q = make_quadric();
  CHECK(chi_line(q, DivisorClass{-1, 2}) == 0);
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b) CHECK(chi_line(q, DivisorClass{a, b}) == (a + 1) * (b + 1));

  const auto f1 = make_hirzebruch1();
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b) {
      const Int chi = chi_line(f1, DivisorClass{a, b});
      CHECK(2 * chi == -(a + 1) * (a - 2 * b - 2));
      CHECK((chi == 0) == ((a + 1) * (a - 2 * b - 2) == 0));
    }
}

TEST_CASE("chi_bundle reproduces the worked bundle values") {
  const auto k3 = make_k3_rank2(14, 16, 14);
  BundleData e_hc{2, DivisorClass{3, -2}, -1};  // E(H-C)
  CHECK(chi_bundle(k3, e_hc) == 0);
  BundleData s2e_tw{3, DivisorClass{6, -6}, -42};  // S^2 E (H-2C)
  CHECK(chi_bundle(k3, s2e_tw) == -24);
}

TEST_CASE("chi_bundle degenerates to chi_line in rank 1") {
  for (const auto& S : {make_projective_plane(), make_quadric(), make_hirzebruch1(),
                        make_blown_plane(6), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 100; ++i) {
      const auto D = rand_divisor(S, 8);
      CHECK(chi_bundle(S, BundleData{1, D, 0}) == chi_line(S, D));
    }
  }
}

TEST_CASE("twist arithmetic") {
  const auto k3 = make_k3_rank2(14, 16, 14);
  const BundleData E{2, DivisorClass{1, 0}, 5};
  const auto tw = twist(k3, E, DivisorClass{1, -1});
  CHECK(tw.c1 == DivisorClass{3, -2});
  CHECK(tw.c2 == -1);
  CHECK_THROWS_AS(twist(k3, BundleData{3, DivisorClass{1, 0}, 1}, DivisorClass{0, 0}),
                  std::invalid_argument);

  for (const auto& S : {make_quadric(), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 200; ++i) {
      BundleData B{2, rand_divisor(S, 6), rand_int(-10, 10)};
      const auto D1 = rand_divisor(S, 6), D2 = rand_divisor(S, 6);
      // identity and composition
      const auto tid = twist(S, B, DivisorClass::zero(S.rank()));
      CHECK(tid.c1 == B.c1);
      CHECK(tid.c2 == B.c2);
      const auto lhs = twist(S, twist(S, B, D1), D2);
      const auto rhs = twist(S, B, D1 + D2);
      CHECK(lhs.c1 == rhs.c1);
      CHECK(lhs.c2 == rhs.c2);
      // chi of a twist expands to the closed form
      const Int closed =
          2 * S.chi_structure +
          exact_half(intersect(S, B.c1 + 2 * D1, B.c1 + 2 * D1 - S.canonical), "test") - B.c2 -
          intersect(S, B.c1, D1) - self_intersection(S, D1);
      CHECK(chi_bundle(S, twist(S, B, D1)) == closed);
    }
  }
}

TEST_CASE("symmetric powers via the splitting principle") {
  const auto k3 = make_k3_rank2(14, 16, 14);
  const BundleData E{2, DivisorClass{1, 0}, 5};
  const auto s2 = sym_power(k3, E, 2);
  CHECK(s2.rank == 3);
  CHECK(s2.c1 == DivisorClass{3, 0});
  CHECK(s2.c2 == 48);  // 2 c1^2 + 4 c2 = 2*14 + 4*5

  const auto s1 = sym_power(k3, E, 1);
  CHECK(s1.c1 == E.c1);
  CHECK(s1.c2 == E.c2);

  // j = 2 closed form on random bundles over every surface
  for (const auto& S : {make_projective_plane(), make_quadric(), make_hirzebruch1(),
                        make_blown_plane(6), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 100; ++i) {
      BundleData B{2, rand_divisor(S, 6), rand_int(-10, 10)};
      const auto s = sym_power(S, B, 2);
      CHECK(s.c2 == 2 * self_intersection(S, B.c1) + 4 * B.c2);
    }
  }

  // higher powers against the oracle's symbolic expansion
  for (Int j = 0; j <= 8; ++j) {
    const auto [A, B] = oracle::sym_expand(j);
    const auto s = sym_power(k3, E, j);
    CHECK(s.c2 == A * self_intersection(k3, E.c1) + B * E.c2);
  }
  CHECK_THROWS_AS(sym_power(k3, E, -1), std::invalid_argument);
}

TEST_CASE("Chern classes from presentations via the Whitney formula") {
  const auto p2 = make_projective_plane();
  const auto dE = chern_from_resolution(
      p2, {std::vector<DivisorClass>(5, DivisorClass{-1}), std::vector<DivisorClass>(7, DivisorClass{0})});
  CHECK(dE.c1 == DivisorClass{5});
  CHECK(dE.c2 == 15);
  const auto dB = chern_from_resolution(
      p2, {std::vector<DivisorClass>(4, DivisorClass{-1}), std::vector<DivisorClass>(6, DivisorClass{0})});
  CHECK(dB.c1 == DivisorClass{4});
  CHECK(dB.c2 == 10);

  const auto q = make_quadric();
  const auto dQ = chern_from_resolution(
      q, {{DivisorClass{0, -3}}, {DivisorClass{1, -1}, DivisorClass{1, 0}, DivisorClass{1, 1}}});
  CHECK(dQ.c1 == DivisorClass{3, 3});
  CHECK(dQ.c2 == 9);

  // Whitney: c(sources) * c(result) = c(targets) in the truncated ring
  for (int i = 0; i < 200; ++i) {
    ResolutionPresentation pres;
    const int ns = static_cast<int>(rand_int(0, 2));
    for (int s = 0; s < ns; ++s) pres.sources.push_back(rand_divisor(q, 3));
    for (int t = 0; t < ns + 2; ++t) pres.targets.push_back(rand_divisor(q, 3));
    const auto E = chern_from_resolution(q, pres);
    // rebuild both sides in degree <= 2
    DivisorClass s1 = DivisorClass::zero(2), t1 = DivisorClass::zero(2);
    Int s2 = 0, t2 = 0;
    for (std::size_t a = 0; a < pres.sources.size(); ++a) {
      for (std::size_t b = a + 1; b < pres.sources.size(); ++b)
        s2 += intersect(q, pres.sources[a], pres.sources[b]);
      s1 += pres.sources[a];
    }
    for (std::size_t a = 0; a < pres.targets.size(); ++a) {
      for (std::size_t b = a + 1; b < pres.targets.size(); ++b)
        t2 += intersect(q, pres.targets[a], pres.targets[b]);
      t1 += pres.targets[a];
    }
    CHECK(s1 + E.c1 == t1);
    CHECK(s2 + E.c2 + intersect(q, s1, E.c1) == t2);
  }
}

TEST_CASE("special Ulrich numerics") {
  const auto f1 = make_hirzebruch1();
  const auto sp = special_ulrich_numerics(f1, DivisorClass{3, 5});
  CHECK(sp.c1 == DivisorClass{7, 12});
  CHECK(sp.c2 == 35);
  const auto tw = twist(f1, sp, DivisorClass{-3, -5});
  CHECK(tw.c1 == DivisorClass{1, 2});
  CHECK(tw.c2 == 6);

  const auto k3 = make_k3_rank1(14);
  const auto spk = special_ulrich_numerics(k3, DivisorClass{1});
  CHECK(spk.c1 == DivisorClass{3});
  CHECK(spk.c2 == 39);
  CHECK(twist(k3, spk, DivisorClass{-1}).c2 == 11);
}

TEST_CASE("Riemann-Roch symmetry chi(D) = chi(K - D)") {
  for (const auto& S : {make_projective_plane(), make_quadric(), make_hirzebruch1(),
                        make_blown_plane(6), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 300; ++i) {
      const auto D = rand_divisor(S, 10);
      CHECK(chi_line(S, D) == chi_line(S, S.canonical - D));
    }
  }
}
