// Acceptance suite: every criterion below is checked in exact integer
// arithmetic (tolerance zero) and reported as a single PASS/FAIL line.
// Exit code 0 iff all criteria pass.

#include <iostream>
#include <random>
#include <sstream>

#include "ulrich/oracle.hpp"
#include "ulrich/report.hpp"

using namespace ulrich;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}
  ~Criterion() {
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_;
    if (!ok_ && !detail_.str().empty()) std::cout << "  [" << detail_.str() << "]";
    std::cout << std::endl;
    if (!ok_) ++failures;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (!detail_.str().empty()) detail_ << "; ";
      detail_ << what;
    }
  }
  template <typename T, typename U>
  void equal(const T& expected, const U& actual, const std::string& what) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    if (e.str() != a.str())
      require(false, what + ": expected " + e.str() + ", got " + a.str());
  }

 private:
  int number_;
  std::string title_;
  std::ostringstream detail_;
  bool ok_ = true;
};

std::vector<UlrichLineCandidate> classify_all(const ScrollSpec& X) {
  auto res = enumerate_candidates(X);
  std::vector<UlrichLineCandidate> out;
  for (auto& c : res.candidates) out.push_back(verify_candidate(X, c));
  return out;
}

std::mt19937_64 rng(427201);  // acceptance runs are fixed-seed
Int rand_int(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }
DivisorClass rand_divisor(const SurfaceModel& S, Int box) {
  DivisorClass D = DivisorClass::zero(S.rank());
  for (auto& c : D.c) c = rand_int(-box, box);
  return D;
}

void criterion_1_degrees() {
  Criterion c(1, "scroll degrees 3, 6, 10, 10, 7, 9, 11, 10, 9, 9 across the catalog");
  const std::vector<std::pair<std::string, Int>> expected = {
      {"segre", 3},     {"bordiga", 6},   {"p2-d10", 10},   {"p2-c2-6", 10},   {"palatini", 7},
      {"quadric", 9},   {"f1-c2-10", 11}, {"f1-c2-11", 10}, {"k3-general", 9}, {"k3-nl", 9}};
  c.equal(expected.size(), catalog().size(), "catalog size");
  for (const auto& [name, deg] : expected) {
    const auto* e = find_catalog_entry(name);
    c.require(e != nullptr, "missing entry " + name);
    if (e) c.equal(deg, scroll_degree(e->scroll), name);
  }
}

void criterion_2_p2_cases() {
  Criterion c(2, "P2 scrolls: exactly two line bundles in each of the four classified cases");
  const std::vector<std::tuple<std::string, Int, Int, Int>> cases = {
      {"p2-d10", 5, 15, -1}, {"bordiga", 4, 10, -1}, {"p2-c2-6", 4, 6, -2}, {"segre", 2, 1, -2}};
  for (const auto& [name, e, c2, b] : cases) {
    const auto& X = find_catalog_entry(name)->scroll;
    const auto cands = classify_all(X);
    Int accepted = 0;
    bool has_l1 = false, has_l2 = false;
    for (const auto& cand : cands) {
      if (cand.status != CandidateStatus::Verified &&
          cand.status != CandidateStatus::NeedsExternalFact)
        continue;
      ++accepted;
      if (cand.a == 2 && cand.D == DivisorClass{b}) has_l1 = true;
      if (cand.a == 0 && cand.D == DivisorClass{e - 3 - b}) has_l2 = true;
    }
    c.equal(2, accepted, name + " accepted count");
    c.require(has_l1, name + ": 2xi + pi*O(" + std::to_string(b) + ") missing");
    c.require(has_l2,
              name + ": companion pi*O(" + std::to_string(e - 3 - b) + ") missing");
  }
  // every other (e, c2) combination in the classified degree range 3..12
  // yields nothing accepted
  for (Int e = 1; e <= 6; ++e)
    for (Int c2 = 0; c2 <= 20; ++c2) {
      if (e * e - c2 < 3 || e * e - c2 > 12) continue;
      if (std::find(known_p2_scrolls().begin(), known_p2_scrolls().end(),
                    std::make_pair(e, c2)) != known_p2_scrolls().end())
        continue;
      ScrollSpec X;
      X.name = "grid";
      X.surface = make_projective_plane();
      X.bundle = {2, DivisorClass{e}, c2};
      Int accepted = 0;
      for (const auto& cand : classify_all(X))
        if (cand.status == CandidateStatus::Verified ||
            cand.status == CandidateStatus::NeedsExternalFact)
          ++accepted;
      if (accepted != 0)
        c.require(false, "(" + std::to_string(e) + "," + std::to_string(c2) +
                             ") unexpectedly accepts candidates");
    }
}

void criterion_3_quadric_f1() {
  Criterion c(3, "quadric: the two 1-xi classes verified; rejections carry the stated witnesses");
  {
    const auto cands = classify_all(find_catalog_entry("quadric")->scroll);
    std::set<std::vector<Int>> verified;
    Int verified_total = 0;
    for (const auto& cand : cands)
      if (cand.status == CandidateStatus::Verified) {
        ++verified_total;
        if (cand.a == 1) verified.insert(cand.D.c);
      }
    c.equal(2, verified_total, "verified count");
    c.require(verified == std::set<std::vector<Int>>{{-1, 2}, {2, -1}},
              "verified 1-xi set mismatch");
    bool rejected_ok = false;
    for (const auto& cand : cands)
      if (cand.a == 2 && cand.D == DivisorClass{-1, -1} &&
          cand.status == CandidateStatus::Rejected && cand.witness &&
          cand.witness->group == "h0(E(-l1 - l2))" && cand.witness->dimension == 1)
        rejected_ok = true;
    c.require(rejected_ok, "quadric 2-xi rejection witness mismatch");
  }
  for (const char* name : {"f1-c2-10", "f1-c2-11"}) {
    const auto cands = classify_all(find_catalog_entry(name)->scroll);
    bool any_accepted = false, w1 = false, w2 = false;
    for (const auto& cand : cands) {
      if (cand.status == CandidateStatus::Verified ||
          cand.status == CandidateStatus::NeedsExternalFact)
        any_accepted = true;
      if (cand.witness && cand.witness->group == "h0(2C0)" && cand.witness->dimension == 1)
        w1 = true;
      if (cand.witness && cand.witness->group == "h2(-4C0 - 3f)" &&
          cand.witness->dimension == 1)
        w2 = true;
    }
    c.require(!any_accepted, std::string(name) + ": accepted list not empty");
    c.require(w1, std::string(name) + ": witness h0(2C0) = 1 missing");
    c.require(w2, std::string(name) + ": witness h2(-4C0 - 3f) = 1 missing");
  }
}

void criterion_4_palatini() {
  Criterion c(4, "Palatini: six classes up to permutation, matching the canonical list");
  const auto res = enumerate_candidates(find_catalog_entry("palatini")->scroll);
  c.equal(6, res.candidates.size(), "class count");
  const std::vector<std::pair<Int, std::vector<Int>>> expected = {
      {2, {-1, 1, 0, 0, 0, 0, 0}},     {2, {-2, 1, 1, 1, 1, 0, 0}},
      {2, {-3, 2, 1, 1, 1, 1, 1}},     {0, {4, -2, -1, -1, -1, -1, -1}},
      {0, {5, -2, -2, -2, -2, -1, -1}}, {0, {6, -3, -2, -2, -2, -2, -2}}};
  for (const auto& [a, D] : expected) {
    bool found = false;
    for (const auto& cand : res.candidates)
      if (cand.a == a && cand.D.c == D) found = true;
    std::ostringstream what;
    what << "missing class a=" << a;
    c.require(found, what.str());
  }
  bool obstruction = false;
  for (const auto& o : res.obstructions)
    if (o.find("2*(D.H) = 3") != std::string::npos) obstruction = true;
  c.require(obstruction, "type-1 obstruction 2*(D.H) = 3 not reported");
}

void criterion_5_ext_chi() {
  Criterion c(5, "Ext and chi numbers: 8, 1, (-14, 15), -14, bound 24, S^2 E data");
  const auto& Q = find_catalog_entry("quadric")->scroll;
  const auto e8 = ext1_dimension(Q, {1, DivisorClass{2, -1}}, {1, DivisorClass{-1, 2}});
  c.require(e8.exact, "quadric ext1 not exact");
  c.equal(8, e8.value, "quadric ext1");
  const auto qe = chi_endomorphisms(Q, {1, DivisorClass{-1, 2}}, {1, DivisorClass{2, -1}});
  c.equal(-14, qe.chi, "quadric chi(End)");
  c.equal(15, qe.modular_dim, "quadric modular dimension");

  const auto& P = find_catalog_entry("palatini")->scroll;
  const auto e1 = ext1_dimension(P, {0, DivisorClass{6, -3, -2, -2, -2, -2, -2}},
                                 {0, DivisorClass{5, -1, -2, -2, -2, -2, -1}});
  c.require(e1.exact, "palatini ext1 not exact");
  c.equal(1, e1.value, "palatini ext1");

  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const auto ke = chi_endomorphisms(K, {2, DivisorClass{1, -1}}, {0, DivisorClass{0, 1}});
  c.equal(-14, ke.chi, "k3 chi(End)");
  const auto eb = ext1_dimension(K, {2, DivisorClass{1, -1}}, {0, DivisorClass{0, 1}});
  c.require(!eb.exact, "k3 ext1 should be a chi bound");
  c.equal(24, eb.value, "k3 ext1 lower bound");

  const auto s2e = sym_power(K.surface, K.bundle, 2);
  c.equal(48, s2e.c2, "c2(S^2 E)");
  const auto tw = twist_rank(K.surface, s2e, DivisorClass{1, -2});
  c.equal(std::string("6H - 6C"), divisor_to_string(K.surface, tw.c1), "c1(S^2 E (H-2C))");
  c.equal(-42, tw.c2, "c2(S^2 E (H-2C))");
}

void criterion_6_discriminators() {
  Criterion c(6, "stability discriminators: 28 vs 32 on the K3, c1 mismatch on Palatini, vacuous on F1");
  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const auto FK = twist(K.surface, special_ulrich_numerics(K.surface, K.bundle.c1), -K.bundle.c1);
  const auto GK = construct_pullback_ulrich(K, FK, PullbackProvenance::SpecialUlrichTwist);
  c.equal(28, pair_with_ample(K, GK.c2), "deg(c2(G) . pi*H)");
  const auto [ec1, ec2] = extension_chern(K, chow_line_bundle(K, 2, DivisorClass{1, -1}),
                                          chow_line_bundle(K, 0, DivisorClass{0, 1}));
  c.equal(32, pair_with_ample(K, ec2), "extension pairing");
  c.require(!stability_discriminator(K, GK, classify_all(K)).possible_extension,
            "K3 discriminator");

  const auto& P = find_catalog_entry("palatini")->scroll;
  DivisorClass L = DivisorClass::zero(7);
  L.c[0] = 1;
  BundleData FP{2, 2 * L - P.surface.ample_ref,
                self_intersection(P.surface, P.surface.ample_ref) -
                    intersect(P.surface, P.surface.ample_ref, L) + self_intersection(P.surface, L)};
  const auto GP = construct_pullback_ulrich(P, FP, PullbackProvenance::Explicit);
  DivisorClass want = -L;
  for (std::size_t i = 1; i < 7; ++i) want.c[i] = 1;
  c.require(GP.c1 == chow_line_bundle(P, 2, want), "c1(G) on the Palatini scroll");
  const auto vp = stability_discriminator(P, GP, classify_all(P));
  c.require(!vp.possible_extension, "Palatini discriminator");
  c.require(vp.reason == "no candidate pair realizes c1(G)", "Palatini mismatch reason");

  for (const char* name : {"f1-c2-10", "f1-c2-11"}) {
    const auto& F = find_catalog_entry(name)->scroll;
    const auto FF = twist(F.surface, special_ulrich_numerics(F.surface, F.bundle.c1), -F.bundle.c1);
    const auto GF = construct_pullback_ulrich(F, FF, PullbackProvenance::SpecialUlrichTwist);
    const auto vf = stability_discriminator(F, GF, classify_all(F));
    c.require(!vf.possible_extension && vf.reason.find("no Ulrich line bundles") == 0,
              std::string(name) + " discriminator not vacuous");
  }
}

void criterion_7_constructions() {
  Criterion c(7, "construction numerics: (7C0+12f, 35) -> (C0+2f, 6); K3 c2 = 11; P2 integrality");
  const auto& F = find_catalog_entry("f1-c2-10")->scroll;
  const auto sp = special_ulrich_numerics(F.surface, F.bundle.c1);
  c.equal(std::string("7C0 + 12f"), divisor_to_string(F.surface, sp.c1), "c1 special");
  c.equal(35, sp.c2, "c2 special");
  const auto tw = twist(F.surface, sp, -F.bundle.c1);
  c.equal(std::string("C0 + 2f"), divisor_to_string(F.surface, tw.c1), "c1 twisted");
  c.equal(6, tw.c2, "c2 twisted");

  const auto& K = find_catalog_entry("k3-nl")->scroll;
  c.equal(11, twist(K.surface, special_ulrich_numerics(K.surface, K.bundle.c1), -K.bundle.c1).c2,
          "K3 twisted c2");

  const auto p2 = make_projective_plane();
  for (Int e = 1; e <= 100; ++e) {
    if ((e * e - 3 * e + 4) % 2 != 0) {
      c.require(false, "P2 c2 formula non-integral at e = " + std::to_string(e));
      break;
    }
    const auto tF = twist(p2, special_ulrich_numerics(p2, DivisorClass{e}), DivisorClass{-e});
    if (tF.c2 != (e * e - 3 * e + 4) / 2) {
      c.equal((e * e - 3 * e + 4) / 2, tF.c2, "P2 c2 at e = " + std::to_string(e));
      break;
    }
  }
}

void criterion_8_k3_lattice() {
  Criterion c(8, "K3 lattice facts: -2 and 0 impossible, first even value 6, H and C indecomposable");
  const auto S = make_k3_rank2(14, 16, 14);
  c.require(represents(S, -2).kind == RepresentResult::Kind::ProvedImpossible,
            "represents(-2)");
  c.require(represents(S, 0).kind == RepresentResult::Kind::ProvedImpossible, "represents(0)");
  std::vector<Int> evens;
  for (Int t = 2; t < 14; t += 2)
    if (represents(S, t).kind == RepresentResult::Kind::Witness) evens.push_back(t);
  c.require(evens == std::vector<Int>{6}, "smallest represented even value");
  c.require(indecomposability_check(S, DivisorClass{1, 0}).indecomposable, "H indecomposable");
  c.require(indecomposability_check(S, DivisorClass{0, 1}).indecomposable, "C indecomposable");

  const auto& K = find_catalog_entry("k3-nl")->scroll;
  const auto res = enumerate_candidates(K);
  bool obstruction = false;
  for (const auto& o : res.obstructions)
    if (o.find("14a + 16b = 7") != std::string::npos) obstruction = true;
  c.require(obstruction, "type-1 obstruction 14a + 16b = 7");
  Int type2 = 0;
  bool is_hc = false;
  for (const auto& cand : res.candidates)
    if (cand.a == 2) {
      ++type2;
      is_hc = cand.D == DivisorClass{1, -1};
    }
  c.require(type2 == 1 && is_hc, "unique 2-xi solution D = H - C");

  const auto& G = find_catalog_entry("k3-general")->scroll;
  const auto gres = enumerate_candidates(G);
  c.require(gres.candidates.empty(), "rank-1 lattice yields no candidates");
  bool rank1_obstruction = false;
  for (const auto& o : gres.obstructions)
    if (o.find("14*m^2 = -4") != std::string::npos) rank1_obstruction = true;
  c.require(rank1_obstruction, "rank-1 obstruction 14 m^2 = -4");
}

void criterion_9_property_suites() {
  Criterion c(9, "property suites: HRR = pushforward, Serre duality, oracle parity, adjunction");
  // HRR vs pushforward, >= 1000 random (a, D) per scroll, exact equality
  for (const auto& entry : catalog()) {
    const auto& X = entry.scroll;
    for (int i = 0; i < 1000; ++i) {
      const Int a = rand_int(-6, 6);
      const auto D = rand_divisor(X.surface, 6);
      if (chi_hrr_line(X, a, D) != chi_pushforward(X, a, D)) {
        c.require(false, "HRR/pushforward mismatch on " + X.name);
        break;
      }
    }
  }
  // Serre duality and chi consistency, >= 1000 random divisors per surface
  for (const auto& S : {make_projective_plane(), make_quadric(), make_hirzebruch1(),
                        make_blown_plane(6), make_k3_rank1(14), make_k3_rank2(14, 16, 14)}) {
    for (int i = 0; i < 1000; ++i) {
      const auto D = rand_divisor(S, 10);
      const auto v = line_cohomology(S, D);
      const auto w = line_cohomology(S, S.canonical - D);
      if (!(v.h0 == w.h2 && v.h1 == w.h1 && v.h2 == w.h0 && v.chi() == chi_line(S, D))) {
        c.require(false, std::string("Serre/chi failure on ") + kind_name(S.kind));
        break;
      }
    }
  }
  // oracle parity at box 20 on every entry
  for (const auto& entry : catalog()) {
    const auto main = enumerate_candidates(entry.scroll, 20);
    const auto check = oracle_cross_check(entry.scroll, main, 20);
    c.require(check.ran && check.agrees, "oracle parity on " + entry.scroll.name);
    // necessary Ulrich chi conditions for every accepted candidate
    for (auto cand : main.candidates) {
      const auto v = verify_candidate(entry.scroll, cand);
      if (v.status == CandidateStatus::Verified || v.status == CandidateStatus::NeedsExternalFact)
        c.require(ulrich_necessary_chi(entry.scroll, v.line()),
                  "Ulrich chi vanishing on " + entry.scroll.name);
    }
    // adjunction identity on the hyperplane blow-up
    const auto hb = hyperplane_blowup(entry.scroll);
    c.require(hb.adjunction_ok, "adjunction on " + entry.scroll.name);
    c.require(self_intersection(hb.surface, hb.hyperplane) == scroll_degree(entry.scroll),
              "hyperplane square on " + entry.scroll.name);
  }
}

}  // namespace

int main() {
  criterion_1_degrees();
  criterion_2_p2_cases();
  criterion_3_quadric_f1();
  criterion_4_palatini();
  criterion_5_ext_chi();
  criterion_6_discriminators();
  criterion_7_constructions();
  criterion_8_k3_lattice();
  criterion_9_property_suites();
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
