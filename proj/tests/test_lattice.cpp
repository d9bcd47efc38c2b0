#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_util.hpp"
#include "ulrich/quadratic_form.hpp"

using namespace ulrich;
using testutil::rand_divisor;

TEST_CASE("surface builders satisfy the structural invariants") {
  struct Row {
    SurfaceModel S;
    Int chi, euler;
  };
  const Row rows[] = {{make_projective_plane(), 1, 3}, {make_quadric(), 1, 4},
                      {make_hirzebruch1(), 1, 4},      {make_blown_plane(6), 1, 9},
                      {make_k3_rank1(14), 2, 24},      {make_k3_rank2(14, 16, 14), 2, 24}};
  for (const auto& r : rows) {
    CAPTURE(kind_name(r.S.kind));
    CHECK(r.S.chi_structure == r.chi);
    CHECK(r.S.euler_number == r.euler);
    const auto sig = lattice_signature(r.S);
    CHECK(sig.positive == 1);
    CHECK(sig.zero == 0);
    CHECK(sig.negative == static_cast<int>(r.S.rank()) - 1);
    // canonical and ample_ref live in the lattice
    CHECK(r.S.canonical.rank() == r.S.rank());
    CHECK(r.S.ample_ref.rank() == r.S.rank());
  }
  CHECK(make_k3_rank2(14, 16, 14).canonical.is_zero());
  CHECK(make_hirzebruch1().canonical == DivisorClass{-2, -3});
  CHECK(make_hirzebruch1().gram == std::vector<std::vector<Int>>{{-1, 1}, {1, 0}});
}

TEST_CASE("malformed gram matrices are rejected") {
  CHECK_THROWS_AS(make_k3_rank2(14, 16, 15), std::invalid_argument);  // odd diagonal
  CHECK_THROWS_AS(make_k3_rank1(-2), std::invalid_argument);
  CHECK_THROWS_AS(make_blown_plane(0), std::invalid_argument);
  CHECK_THROWS_AS(make_blown_plane(7), std::invalid_argument);
  SurfaceModel bad = make_quadric();
  bad.gram = {{0, 1}, {2, 0}};  // asymmetric
  CHECK_THROWS_AS(ulrich::detail::check_gram(bad), std::invalid_argument);
  bad.gram = {{2, 0}, {0, 2}};  // positive definite, wrong signature
  CHECK_THROWS_AS(ulrich::detail::check_gram(bad), std::invalid_argument);
}

TEST_CASE("the cubic surface carries exactly 27 lines with the right numerics") {
  const auto S = make_blown_plane(6);
  REQUIRE(S.minus_one_curves.size() == 27);
  const DivisorClass H = S.ample_ref;
  std::set<std::vector<Int>> distinct;
  for (const auto& L : S.minus_one_curves) {
    CHECK(self_intersection(S, L) == -1);
    CHECK(intersect(S, L, S.canonical) == -1);
    CHECK(intersect(S, L, H) == 1);
    distinct.insert(L.c);
  }
  CHECK(distinct.size() == 27);
  // 6 exceptional, 15 through two points, 6 conics through five
  CHECK(make_blown_plane(5).minus_one_curves.size() == 5 + 10 + 1);
}

TEST_CASE("intersection numbers match the worked examples") {
  const auto q = make_quadric();
  CHECK(intersect(q, DivisorClass{1, 0}, DivisorClass{1, 1}) == 1);
  const auto k3 = make_k3_rank2(14, 16, 14);
  CHECK(self_intersection(k3, DivisorClass{1, -1}) == -4);
  const auto c = make_blown_plane(6);
  const DivisorClass D{1, -2, 0, 0, 0, 0, -1};  // e0 - 2e1 - e6
  CHECK(self_intersection(c, D) == -4);
  CHECK(intersect(c, D, c.canonical) == 0);
}

TEST_CASE("intersect is a symmetric bilinear form") {
  for (const auto& S : {make_projective_plane(), make_quadric(), make_hirzebruch1(),
                        make_blown_plane(6), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = rand_divisor(S, 9), b = rand_divisor(S, 9), c = rand_divisor(S, 9);
      const Int s = testutil::rand_int(-4, 4);
      CHECK(intersect(S, a, b) == intersect(S, b, a));
      CHECK(intersect(S, a + s * b, c) == intersect(S, a, c) + s * intersect(S, b, c));
    }
  }
}

TEST_CASE("the rank-2 K3 form is even") {
  const auto S = make_k3_rank2(14, 16, 14);
  for (int i = 0; i < 500; ++i) {
    const auto D = rand_divisor(S, 20);
    CHECK(self_intersection(S, D) % 2 == 0);
  }
}

TEST_CASE("represents decides the worked targets") {
  const auto S = make_k3_rank2(14, 16, 14);

  const auto r2 = represents(S, -2);
  REQUIRE(r2.kind == RepresentResult::Kind::ProvedImpossible);
  CHECK(r2.modulus == 3);  // 15 b^2 - 7 = 2 mod 3, never a square
  CHECK(r2.sieve_a == 15);
  CHECK(r2.sieve_b == -7);

  const auto r0 = represents(S, 0);
  REQUIRE(r0.kind == RepresentResult::Kind::ProvedImpossible);
  CHECK(r0.detail.find("240") != std::string::npos);

  const auto r6 = represents(S, 6);
  REQUIRE(r6.kind == RepresentResult::Kind::Witness);
  CHECK(r6.witness == DivisorClass{2, -1});
  CHECK(self_intersection(S, r6.witness) == 6);

  // the only positive even value below 14 represented by the form is 6
  std::vector<Int> hits;
  for (Int t = 2; t < 14; t += 2)
    if (represents(S, t).kind == RepresentResult::Kind::Witness) hits.push_back(t);
  CHECK(hits == std::vector<Int>{6});
}

TEST_CASE("witnesses returned by represents always have the right square") {
  const auto S = make_k3_rank2(14, 16, 14);
  for (Int t = -30; t <= 120; ++t) {
    const auto r = represents(S, t);
    if (r.kind == RepresentResult::Kind::Witness)
      CHECK(self_intersection(S, r.witness) == t);
  }
}

TEST_CASE("H and C are indecomposable, via the (6,6,1) Hodge elimination") {
  const auto S = make_k3_rank2(14, 16, 14);
  for (const auto& D : {DivisorClass{1, 0}, DivisorClass{0, 1}}) {
    const auto rep = indecomposability_check(S, D);
    CHECK(rep.indecomposable);
    Int hodge = 0;
    for (const auto& t : rep.trace)
      if (t.fate == TripleRecord::Fate::HodgeIndex) {
        ++hodge;
        CHECK(t.n_sq == 6);
        CHECK(t.m_sq == 6);
        CHECK(t.nm == 1);
        CHECK(t.note.find("35") != std::string::npos);
      }
    CHECK(hodge == 1);  // the only triple surviving representability
  }
}

TEST_CASE("indecomposability_check rejects nonpositive squares") {
  const auto S = make_k3_rank2(14, 16, 14);
  CHECK_THROWS_AS(indecomposability_check(S, DivisorClass{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(indecomposability_check(S, DivisorClass{1, -1}), std::invalid_argument);
}

TEST_CASE("a decomposable class is actually decomposed") {
  // On the hyperbolic-plane-like lattice [[2,1],[1,2]]... use a K3-legal even
  // lattice that does represent small squares: [[2,0],[0,-2]] has signature
  // (1,1) and q(a,b) = 2a^2 - 2b^2; D = (2,0) decomposes as (1,1) + (1,-1)
  // with squares 0 -- not K3-legal. Instead check the realized branch on
  // [[4,2],[2,-2]]: q(1,0) = 4, q(0,1) = -2.
  SurfaceModel S = make_k3_rank2(14, 16, 14);
  S.gram = {{4, 2}, {2, -2}};
  ulrich::detail::check_gram(S);
  // D = (2,0): D^2 = 16; candidate decomposition N = (1,0), M = (1,0):
  // triple (4,4,4) with det 0, realized exactly.
  const auto rep = indecomposability_check(S, DivisorClass{2, 0});
  CHECK_FALSE(rep.indecomposable);
  CHECK(rep.summand_n + rep.summand_m == DivisorClass{2, 0});
}

TEST_CASE("serialization of the surface record carries the documented fields") {
  // the JSON schema itself is exercised in test_report; here just the labels
  const auto S = make_blown_plane(6);
  CHECK(S.basis_labels ==
        std::vector<std::string>{"e0", "e1", "e2", "e3", "e4", "e5", "e6"});
  CHECK(divisor_to_string(S, S.ample_ref) == "3e0 - e1 - e2 - e3 - e4 - e5 - e6");
  CHECK(divisor_to_string(make_k3_rank2(14, 16, 14), DivisorClass{1, -1}) == "H - C");
}
