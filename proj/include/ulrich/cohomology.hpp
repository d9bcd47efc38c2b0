#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "ulrich/quadratic_form.hpp"
#include "ulrich/riemann_roch.hpp"

namespace ulrich {

// Exact cohomology dimensions, or per-degree intervals [h_i, h_i_max] when a
// long exact sequence leaves connecting ranks undetermined (exact = false).
struct CohomologyVector {
  Int h0 = 0, h1 = 0, h2 = 0;
  bool exact = true;
  Int h0_max = 0, h1_max = 0, h2_max = 0;

  static CohomologyVector of(Int a, Int b, Int c) { return {a, b, c, true, a, b, c}; }
  Int chi() const { return h0 - h1 + h2; }
  bool all_zero() const { return exact && h0 == 0 && h1 == 0 && h2 == 0; }
};

enum class ReductionOrder { FirstNegative, LastNegative, MostNegative };

namespace detail {

inline Int p2_h0(Int b) { return b >= 0 ? (b + 1) * (b + 2) / 2 : 0; }
inline Int p1_h0(Int n) { return n >= 0 ? n + 1 : 0; }

// h^0 on the del Pezzo by peeling off fixed (-1)-curves: while some line L has
// D.L < 0 it lies in the base locus and h^0(D) = h^0(D - L). Each step lowers
// D.H by exactly 1 (lines have degree 1), so the loop terminates at a nef
// class, where h^0 = chi(D), or at negative degree, where h^0 = 0. Nef classes
// on the del Pezzo have D - K ample, hence h^1 = h^2 = 0 and h^0 = chi.
inline Int del_pezzo_h0(const SurfaceModel& S, DivisorClass D, ReductionOrder order) {
  for (;;) {
    if (D.is_zero()) return 1;
    if (intersect(S, D, S.ample_ref) < 0) return 0;
    const DivisorClass* worst = nullptr;
    Int worst_val = 0;
    for (const auto& L : S.minus_one_curves) {
      const Int v = intersect(S, D, L);
      if (v >= 0) continue;
      switch (order) {
        case ReductionOrder::FirstNegative:
          if (!worst) {
            worst = &L;
            worst_val = v;
          }
          break;
        case ReductionOrder::LastNegative:
          worst = &L;
          worst_val = v;
          break;
        case ReductionOrder::MostNegative:
          if (!worst || v < worst_val) {
            worst = &L;
            worst_val = v;
          }
          break;
      }
    }
    if (!worst) {
      const Int chi = chi_line(S, D);
      if (chi < 0) throw std::logic_error("del_pezzo_h0: nef class with negative chi");
      return chi;
    }
    D -= *worst;
  }
}

// The K3 chamber rule is only valid when the lattice represents neither -2 nor
// 0 (then every nonzero effective class is ample). Checked once per Gram
// matrix and memoized.
inline void assert_k3_chamber_facts(const SurfaceModel& S) {
  if (S.rank() == 1) {
    const Int c = S.gram[0][0];
    if (c <= 0) throw std::logic_error("K3 rank-1 lattice with nonpositive H^2");
    return;  // c m^2 is never -2 (negative) nor 0 (m != 0)
  }
  static std::map<std::tuple<Int, Int, Int>, bool> cache;
  static std::mutex mtx;
  const auto key = std::make_tuple(S.gram[0][0], S.gram[0][1], S.gram[1][1]);
  const char* msg = "K3 lattice represents -2 or 0; the exact chamber rule does not apply";
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (!it->second) throw std::invalid_argument(msg);
      return;
    }
  }
  const bool ok = represents(S, -2).kind == RepresentResult::Kind::ProvedImpossible &&
                  represents(S, 0).kind == RepresentResult::Kind::ProvedImpossible;
  {
    std::lock_guard<std::mutex> lock(mtx);
    cache[key] = ok;
  }
  if (!ok) throw std::invalid_argument(msg);
}

inline Int k3_h0(const SurfaceModel& S, const DivisorClass& D) {
  if (D.is_zero()) return 1;
  const Int d2 = self_intersection(S, D);
  if (d2 >= 2 && intersect(S, D, S.ample_ref) > 0) return chi_line(S, D);
  return 0;
}

}  // namespace detail

// Exact h^0, h^1, h^2 of O_S(D) on the five base-surface families.
inline CohomologyVector line_cohomology(const SurfaceModel& S, const DivisorClass& D,
                                        ReductionOrder order = ReductionOrder::FirstNegative) {
  if (D.rank() != S.rank()) throw std::invalid_argument("line_cohomology: rank mismatch");
  Int h0 = 0, h2 = 0;
  switch (S.kind) {
    case SurfaceKind::ProjectivePlane: {
      h0 = detail::p2_h0(D.c[0]);
      h2 = detail::p2_h0(-3 - D.c[0]);
      break;
    }
    case SurfaceKind::Quadric: {
      h0 = detail::p1_h0(D.c[0]) * detail::p1_h0(D.c[1]);
      h2 = detail::p1_h0(-2 - D.c[0]) * detail::p1_h0(-2 - D.c[1]);
      break;
    }
    case SurfaceKind::Hirzebruch1: {
      // pi_* O(alpha C0 + beta f) = (+)_{k=0..alpha} O_P1(beta - k)
      const auto h0_f1 = [](Int alpha, Int beta) {
        if (alpha < 0) return Int(0);
        Int acc = 0;
        for (Int k = 0; k <= alpha; ++k) acc += std::max<Int>(0, beta - k + 1);
        return acc;
      };
      h0 = h0_f1(D.c[0], D.c[1]);
      const DivisorClass KD = S.canonical - D;
      h2 = h0_f1(KD.c[0], KD.c[1]);
      break;
    }
    case SurfaceKind::BlownPlane: {
      if (S.minus_one_curves.empty())
        throw std::invalid_argument("line_cohomology: blown plane without line list");
      h0 = detail::del_pezzo_h0(S, D, order);
      h2 = detail::del_pezzo_h0(S, S.canonical - D, order);
      break;
    }
    case SurfaceKind::K3Lattice: {
      detail::assert_k3_chamber_facts(S);
      h0 = detail::k3_h0(S, D);
      h2 = detail::k3_h0(S, -D);  // Serre duality, K = 0
      break;
    }
    case SurfaceKind::Blowup:
      throw std::invalid_argument("line_cohomology: unsupported lattice kind (blow-up)");
  }
  const Int h1 = h0 + h2 - chi_line(S, D);
  if (h1 < 0) throw std::logic_error("line_cohomology: negative h^1, lattice data corrupt");
  return CohomologyVector::of(h0, h1, h2);
}

// Cohomology of a twisted rank-2 presentation via the six-term long exact
// sequence of 0 -> A(D) -> B(D) -> E(D) -> 0. Writing r_i for the rank of
// H^i(A) -> H^i(B), r_0 = h^0(A) by left exactness, and
//   h^i(E) = (h^i(B) - r_i) + (h^{i+1}(A) - r_{i+1}).
// The result is exact whenever r_1 and r_2 are forced (min(h^i(A), h^i(B)) = 0
// for i = 1, 2); otherwise the tightest per-degree intervals are returned,
// always consistent with chi(E(D)) = chi(B(D)) - chi(A(D)).
inline CohomologyVector bundle_cohomology_from_resolution(const SurfaceModel& S,
                                                          const ResolutionPresentation& pres,
                                                          const DivisorClass& D) {
  pres.check_rank2();
  Int A[3] = {0, 0, 0}, B[3] = {0, 0, 0};
  for (const auto& a : pres.sources) {
    const auto cv = line_cohomology(S, a + D);
    A[0] += cv.h0;
    A[1] += cv.h1;
    A[2] += cv.h2;
  }
  for (const auto& b : pres.targets) {
    const auto cv = line_cohomology(S, b + D);
    B[0] += cv.h0;
    B[1] += cv.h1;
    B[2] += cv.h2;
  }
  if (A[0] > B[0])
    throw std::logic_error("bundle_cohomology_from_resolution: H^0(A) cannot inject into H^0(B)");
  const Int r0 = A[0];
  const Int r1_max = std::min(A[1], B[1]);
  const Int r2_max = std::min(A[2], B[2]);

  CohomologyVector out;
  out.h0 = B[0] - r0 + A[1] - r1_max;
  out.h0_max = B[0] - r0 + A[1];
  out.h1 = B[1] - r1_max + A[2] - r2_max;
  out.h1_max = B[1] + A[2];
  out.h2 = B[2] - r2_max;
  out.h2_max = B[2];
  out.exact = (r1_max == 0 && r2_max == 0);
  if (out.exact && (out.h0 != out.h0_max || out.h1 != out.h1_max || out.h2 != out.h2_max))
    throw std::logic_error("bundle_cohomology_from_resolution: inconsistent forced ranks");
  return out;
}

}  // namespace ulrich
