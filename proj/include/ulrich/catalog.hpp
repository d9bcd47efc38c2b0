#pragma once

#include "ulrich/engine.hpp"

namespace ulrich {

// A cataloged scroll together with the classical numbers the regression suite
// checks (degree; the classified line bundles; Ext and chi values; Chern data
// of the rank-2 constructions). Each expectation carries a source note.
struct CatalogEntry {
  ScrollSpec scroll;
  Int expected_degree = 0;
  // classified candidates (a, D, expected status) in canonical order
  struct ExpectedCandidate {
    Int a;
    DivisorClass D;
    CandidateStatus status;
    Int orbit_size = 1;
  };
  std::vector<ExpectedCandidate> expected_candidates;
  std::vector<ResolutionPresentation> alt_presentations;  // e.g. the second quadric one
  std::string degree_source;
};

namespace detail {

inline KnownFact fact(std::string id, std::string statement, std::string source) {
  KnownFact f;
  f.id = std::move(id);
  f.statement = std::move(statement);
  f.source = std::move(source);
  return f;
}

}  // namespace detail

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  const auto p2 = make_projective_plane();
  const auto q2 = make_quadric();
  const auto f1 = make_hirzebruch1();
  const auto cubic = make_blown_plane(6);
  const auto k3r1 = make_k3_rank1(14);
  const auto k3r2 = make_k3_rank2(14, 16, 14);

  // --- segre: P(O(1)^2) over P2, the Segre threefold P1 x P2 in P5 ---------
  {
    CatalogEntry e;
    e.scroll.name = "segre";
    e.scroll.surface = p2;
    e.scroll.bundle = {2, DivisorClass{2}, 1};
    e.scroll.presentation =
        ResolutionPresentation{{}, std::vector<DivisorClass>(2, DivisorClass{1})};
    e.expected_degree = 3;
    e.degree_source = "classical degree of the Segre threefold";
    e.expected_candidates = {{2, DivisorClass{-2}, CandidateStatus::Verified},
                             {0, DivisorClass{1}, CandidateStatus::Verified}};
    cat.push_back(std::move(e));
  }

  // --- bordiga: degree-6 determinantal scroll over P2 ----------------------
  {
    CatalogEntry e;
    e.scroll.name = "bordiga";
    e.scroll.surface = p2;
    e.scroll.bundle = {2, DivisorClass{4}, 10};
    e.scroll.presentation = ResolutionPresentation{std::vector<DivisorClass>(4, DivisorClass{-1}),
                                                   std::vector<DivisorClass>(6, DivisorClass{0})};
    e.expected_degree = 6;
    e.degree_source = "classical degree of the Bordiga scroll";
    e.expected_candidates = {{2, DivisorClass{-1}, CandidateStatus::Verified},
                             {0, DivisorClass{2}, CandidateStatus::Verified}};
    cat.push_back(std::move(e));
  }

  // --- p2-d10: degree-10 determinantal scroll over P2 ----------------------
  {
    CatalogEntry e;
    e.scroll.name = "p2-d10";
    e.scroll.surface = p2;
    e.scroll.bundle = {2, DivisorClass{5}, 15};
    e.scroll.presentation = ResolutionPresentation{std::vector<DivisorClass>(5, DivisorClass{-1}),
                                                   std::vector<DivisorClass>(7, DivisorClass{0})};
    e.expected_degree = 10;
    e.degree_source = "degree e^2 - c2 of the determinantal scroll";
    e.expected_candidates = {{2, DivisorClass{-1}, CandidateStatus::Verified},
                             {0, DivisorClass{3}, CandidateStatus::Verified}};
    cat.push_back(std::move(e));
  }

  // --- p2-c2-6: the (4,6) scroll over P2; E is stable, no presentation -----
  {
    CatalogEntry e;
    e.scroll.name = "p2-c2-6";
    e.scroll.surface = p2;
    e.scroll.bundle = {2, DivisorClass{4}, 6};
    auto f = detail::fact("p2-c2-6-stability",
                          "the (4,6) bundle on P2 is stable, so H^0(E(-2)) = 0, and "
                          "H^2(E(-2)) = 0 with chi(E(-2)) = 0 settles all degrees",
                          "stability: Ionescu's classification of small-invariant threefolds; "
                          "section bound: Okonek-Schneider-Spindler, Lemma 1.2.5");
    f.certifies_bundle_vanishing = {DivisorClass{-2}};
    e.scroll.known_facts.push_back(std::move(f));
    e.expected_degree = 10;
    e.degree_source = "degree e^2 - c2";
    e.expected_candidates = {{2, DivisorClass{-2}, CandidateStatus::NeedsExternalFact},
                             {0, DivisorClass{3}, CandidateStatus::NeedsExternalFact}};
    cat.push_back(std::move(e));
  }

  // --- palatini: P(E) for the rank-2 Ulrich bundle on the cubic surface ----
  {
    CatalogEntry e;
    e.scroll.name = "palatini";
    e.scroll.surface = cubic;
    e.scroll.bundle = {2, 2 * cubic.ample_ref, 5};
    auto f = detail::fact(
        "palatini-type2-vanishings",
        "H^i(E(D)) = 0 for the three classified 2xi classes on the Palatini scroll, via the "
        "ideal-sheaf sequence of a section of E(D) on the cubic",
        "case analysis on the cubic surface; E is the Ulrich bundle with c1 = 2H, c2 = 5");
    f.match_up_to_permutation = true;
    f.certifies_bundle_vanishing = {DivisorClass{-1, 1, 0, 0, 0, 0, 0},
                                    DivisorClass{-2, 1, 1, 1, 1, 0, 0},
                                    DivisorClass{-3, 2, 1, 1, 1, 1, 1}};
    e.scroll.known_facts.push_back(std::move(f));
    e.scroll.known_facts.push_back(detail::fact(
        "cubic-ulrich-line-bundles",
        "the cubic surface (S, O_S(1)) carries Ulrich line bundles, e.g. the class e0",
        "Ulrich line bundles on del Pezzo surfaces (classical)"));
    e.scroll.known_facts.push_back(detail::fact(
        "cubic-rank2-pullback-input",
        "there is a rank-2 bundle F on the cubic with c1 = 2L - H, c2 = H^2 - H.L + L^2 and "
        "H^i(F) = H^i(F(-2H)) = 0, from a rank-2 Ulrich bundle for the double polarization",
        "Beauville's construction of rank-2 Ulrich bundles for O(2) from line-bundle Ulrich "
        "data; T_P2 is the unique rank-2 Ulrich bundle on (P2, O(2))"));
    e.expected_degree = 7;
    e.degree_source = "classical degree of the Palatini scroll";
    // canonical report order: a descending, then D lexicographic
    e.expected_candidates = {
        {2, DivisorClass{-3, 2, 1, 1, 1, 1, 1}, CandidateStatus::NeedsExternalFact, 6},
        {2, DivisorClass{-2, 1, 1, 1, 1, 0, 0}, CandidateStatus::NeedsExternalFact, 15},
        {2, DivisorClass{-1, 1, 0, 0, 0, 0, 0}, CandidateStatus::NeedsExternalFact, 6},
        {0, DivisorClass{4, -2, -1, -1, -1, -1, -1}, CandidateStatus::NeedsExternalFact, 6},
        {0, DivisorClass{5, -2, -2, -2, -2, -1, -1}, CandidateStatus::NeedsExternalFact, 15},
        {0, DivisorClass{6, -3, -2, -2, -2, -2, -2}, CandidateStatus::NeedsExternalFact, 6}};
    cat.push_back(std::move(e));
  }

  // --- quadric: P(E) over Q^2 = P1 x P1 with c1(E) = (3,3), c2 = 9 ---------
  {
    CatalogEntry e;
    e.scroll.name = "quadric";
    e.scroll.surface = q2;
    e.scroll.bundle = {2, DivisorClass{3, 3}, 9};
    e.scroll.presentation = ResolutionPresentation{
        {DivisorClass{0, -3}},
        {DivisorClass{1, -1}, DivisorClass{1, 0}, DivisorClass{1, 1}}};
    e.alt_presentations.push_back(ResolutionPresentation{
        {DivisorClass{-3, 0}},
        {DivisorClass{-1, 1}, DivisorClass{0, 1}, DivisorClass{1, 1}}});
    e.scroll.known_facts.push_back(detail::fact(
        "modular-family",
        "a bounded family of simple bundles with fixed rank and Chern classes and "
        "H^2(F (x) F^dual) = 0 has a smooth modular family",
        "standard deformation theory of simple sheaves"));
    e.expected_degree = 9;
    e.degree_source = "c1^2 - c2 = 18 - 9";
    e.expected_candidates = {{2, DivisorClass{-1, -1}, CandidateStatus::Rejected},
                             {1, DivisorClass{-1, 2}, CandidateStatus::Verified},
                             {1, DivisorClass{2, -1}, CandidateStatus::Verified},
                             {0, DivisorClass{2, 2}, CandidateStatus::Rejected}};
    cat.push_back(std::move(e));
  }

  // --- the two F1 scrolls: c1(E) = 3C0 + 5f, c2 = 10 and 11 ----------------
  for (Int c2 : {Int(10), Int(11)}) {
    CatalogEntry e;
    e.scroll.name = "f1-c2-" + std::to_string(c2);
    e.scroll.surface = f1;
    e.scroll.bundle = {2, DivisorClass{3, 5}, c2};
    e.scroll.known_facts.push_back(detail::fact(
        "f1-special-ulrich",
        "F1 carries a rank-2 Ulrich bundle with respect to c1(E) = 3C0 + 5f, and it is special",
        "Ulrich bundles on geometrically ruled surfaces (classical)"));
    e.expected_degree = 21 - c2;
    e.degree_source = "c1^2 - c2 = 21 - c2";
    e.expected_candidates = {{1, DivisorClass{-1, 2}, CandidateStatus::Rejected},
                             {1, DivisorClass{2, 0}, CandidateStatus::Rejected}};
    cat.push_back(std::move(e));
  }

  // --- k3-general: rank-1 Picard lattice Z[H], H^2 = 14 --------------------
  {
    CatalogEntry e;
    e.scroll.name = "k3-general";
    e.scroll.surface = k3r1;
    e.scroll.bundle = {2, DivisorClass{1}, 5};
    e.scroll.known_facts.push_back(detail::fact(
        "k3-special-ulrich",
        "a K3 surface with Picard number 1 carries special rank-2 Ulrich bundles",
        "existence of special Ulrich bundles on K3 surfaces (classical)"));
    e.expected_degree = 9;
    e.degree_source = "c1^2 - c2 = 14 - 5";
    e.expected_candidates = {};
    cat.push_back(std::move(e));
  }

  // --- k3-nl: rank-2 lattice with H^2 = C^2 = 14, H.C = 16 ------------------
  {
    CatalogEntry e;
    e.scroll.name = "k3-nl";
    e.scroll.surface = k3r2;
    e.scroll.bundle = {2, DivisorClass{1, 0}, 5};
    auto f = detail::fact(
        "lm-stability",
        "the rank-2 bundle E of the scroll (a Lazarsfeld-Mukai bundle) is slope-stable for both "
        "polarizations; stability plus chi(E(H-C)) = 0 and c2(E(H-C)) = -1 force "
        "H^i(E(H-C)) = 0",
        "stability of Lazarsfeld-Mukai bundles via Brill-Noether theory of curves on K3 "
        "surfaces (Lazarsfeld; Mukai)");
    f.certifies_bundle_vanishing = {DivisorClass{1, -1}};
    e.scroll.known_facts.push_back(std::move(f));
    e.scroll.known_facts.push_back(detail::fact(
        "k3-nl-special-ulrich",
        "the K3 surface with this Picard lattice carries special rank-2 Ulrich bundles",
        "existence of special Ulrich bundles on K3 surfaces (classical)"));
    e.expected_degree = 9;
    e.degree_source = "c1^2 - c2 = 14 - 5";
    e.expected_candidates = {{2, DivisorClass{1, -1}, CandidateStatus::NeedsExternalFact},
                             {0, DivisorClass{0, 1}, CandidateStatus::NeedsExternalFact}};
    cat.push_back(std::move(e));
  }

  for (auto& e : cat) e.scroll.validate();
  return cat;
}

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.scroll.name == name) return &e;
  return nullptr;
}

}  // namespace ulrich
