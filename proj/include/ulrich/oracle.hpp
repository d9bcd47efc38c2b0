#pragma once

#include <array>
#include <map>

#include "ulrich/engine.hpp"

// Independent brute-force validators. Nothing here may share formula code with
// the main modules: chi values come from per-family closed-form polynomials,
// Kunneth tables are convolved literally, and symmetric-power coefficients are
// expanded with formal symbols. Agreement with the main path is asserted by
// the test suite; a discrepancy is a release blocker.
namespace ulrich::oracle {

// --- independent chi formulas, one per base family ------------------------

inline Int chi_line_p2(Int b) { return (b + 1) * (b + 2) / 2; }
inline Int chi_line_quadric(Int a, Int b) { return (a + 1) * (b + 1); }
inline Int chi_line_f1(Int a, Int b) { return -((a + 1) * (a - 2 * b - 2)) / 2; }
inline Int chi_line_cubic(const std::vector<Int>& v) {
  Int s1 = 0, s2 = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    s1 += v[i];
    s2 += v[i] * v[i];
  }
  const Int a = v[0];
  return 1 + (a * a - s2 + 3 * a + s1) / 2;
}
inline Int chi_line_k3(const std::vector<std::vector<Int>>& gram, const std::vector<Int>& v) {
  Int q = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) q += v[i] * gram[i][j] * v[j];
  return 2 + q / 2;
}

// chi(E(D)) in the closed forms the case analyses factor through.
inline Int chi_twist_p2(Int e, Int c2, Int b) {
  return (2 * b * b + e * e + 2 * b * e + 6 * b + 3 * e - 2 * c2 + 4) / 2;
}
inline Int chi_twist_quadric33(Int c2, Int a, Int b) {
  // c1(E) = (3,3): chi(E(a,b)) = 2ab + 5a + 5b + 17 - c2  (= 2ab+5a+5b+8 at c2 = 9)
  return 2 * a * b + 5 * a + 5 * b + 17 - c2;
}
inline Int chi_twist_f1_35(Int c2, Int a, Int b) {
  // c1(E) = 3C0 + 5f: chi(E(aC0 + bf)) = 19 + 3a + 5b + 2ab - a^2 - c2
  return 19 + 3 * a + 5 * b + 2 * a * b - a * a - c2;
}
inline Int chi_twist_cubic_2h(Int c2, const std::vector<Int>& v) {
  // c1(E) = 2H on the cubic: chi(E(D)) = (11 - c2) + 3 D.H + D^2
  Int s1 = 0, s2 = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    s1 += v[i];
    s2 += v[i] * v[i];
  }
  const Int a = v[0];
  const Int dh = 3 * a + s1;
  const Int d2 = a * a - s2;
  return (11 - c2) + 3 * dh + d2;
}
inline Int chi_twist_k3(const std::vector<std::vector<Int>>& gram, const DivisorClass& c1, Int c2,
                        const std::vector<Int>& v) {
  // chi(E(D)) = 4 + c1^2/2 + c1.D + D^2 - c2 on a K3
  Int c1sq = 0, c1d = 0, d2 = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      c1sq += c1.c[i] * gram[i][j] * c1.c[j];
      c1d += c1.c[i] * gram[i][j] * v[j];
      d2 += v[i] * gram[i][j] * v[j];
    }
  return 4 + c1sq / 2 + c1d + d2 - c2;
}

// --- brute-force candidate search -----------------------------------------

struct BruteSolution {
  Int a;
  DivisorClass D;
};

namespace detail {

inline void brute_rank1(const ScrollSpec& X, Int box, std::vector<BruteSolution>& out) {
  if (X.surface.kind == SurfaceKind::ProjectivePlane) {
    const Int e = X.bundle.c1.c[0], c2 = X.bundle.c2;
    for (Int b = -box; b <= box; ++b) {
      if (chi_line_p2(b) == 0 && chi_line_p2(b - e) == 0) out.push_back({1, DivisorClass{b}});
      if (chi_line_p2(b) == 0 && chi_twist_p2(e, c2, b) == 0) out.push_back({2, DivisorClass{b}});
    }
    return;
  }
  if (X.surface.kind == SurfaceKind::K3Lattice && X.surface.rank() == 1) {
    for (Int m = -box; m <= box; ++m) {
      const std::vector<Int> v{m};
      const bool l0 = chi_line_k3(X.surface.gram, v) == 0;
      std::vector<Int> vc{m - X.bundle.c1.c[0]};
      if (l0 && chi_line_k3(X.surface.gram, vc) == 0) out.push_back({1, DivisorClass{m}});
      if (l0 && chi_twist_k3(X.surface.gram, X.bundle.c1, X.bundle.c2, v) == 0)
        out.push_back({2, DivisorClass{m}});
    }
    return;
  }
  throw std::invalid_argument("oracle: unsupported rank-1 base");
}

inline void brute_rank2(const ScrollSpec& X, Int box, std::vector<BruteSolution>& out) {
  const auto& S = X.surface;
  for (Int a = -box; a <= box; ++a)
    for (Int b = -box; b <= box; ++b) {
      const std::vector<Int> v{a, b};
      Int l, l_shift, t;
      if (S.kind == SurfaceKind::Quadric) {
        if (X.bundle.c1 != DivisorClass{3, 3})
          throw std::invalid_argument("oracle quadric formulas assume c1(E) = (3,3)");
        l = chi_line_quadric(a, b);
        l_shift = chi_line_quadric(a - 3, b - 3);
        t = chi_twist_quadric33(X.bundle.c2, a, b);
      } else if (S.kind == SurfaceKind::Hirzebruch1) {
        if (X.bundle.c1 != DivisorClass{3, 5})
          throw std::invalid_argument("oracle F1 formulas assume c1(E) = 3C0 + 5f");
        l = chi_line_f1(a, b);
        l_shift = chi_line_f1(a - 3, b - 5);
        t = chi_twist_f1_35(X.bundle.c2, a, b);
      } else if (S.kind == SurfaceKind::K3Lattice) {
        l = chi_line_k3(S.gram, v);
        const std::vector<Int> vs{a - X.bundle.c1.c[0], b - X.bundle.c1.c[1]};
        l_shift = chi_line_k3(S.gram, vs);
        t = chi_twist_k3(S.gram, X.bundle.c1, X.bundle.c2, v);
      } else {
        throw std::invalid_argument("oracle: unsupported rank-2 base");
      }
      if (l == 0 && l_shift == 0) out.push_back({1, DivisorClass{a, b}});
      if (l == 0 && t == 0) out.push_back({2, DivisorClass{a, b}});
    }
}

// Exhaustive enumeration of exceptional tuples in [-box, box]^k with the given
// sum and sum of squares. Pruning (square budget, Cauchy-Schwarz on the
// remaining sum) discards only provably infeasible branches.
inline void cubic_tuples(Int k, Int box, Int s1, Int s2, std::vector<Int>& acc,
                         std::vector<std::vector<Int>>& out) {
  if (k == 0) {
    if (s1 == 0 && s2 == 0) out.push_back(acc);
    return;
  }
  if (s2 < 0 || s1 * s1 > k * s2) return;
  Int m = isqrt(s2);
  if (m > box) m = box;
  for (Int v = -m; v <= m; ++v) {
    acc.push_back(v);
    cubic_tuples(k - 1, box, s1 - v, s2 - v * v, acc, out);
    acc.pop_back();
  }
}

// Exhaustive search over the cubic. For each e0-coefficient the two equations
// are affine in (sum a_i, sum a_i^2); all exceptional tuples meeting the
// targets inside the box are enumerated with Cauchy-Schwarz pruning, which
// discards only infeasible branches.
inline void brute_cubic(const ScrollSpec& X, Int box, std::vector<BruteSolution>& out) {
  if (X.bundle.c1 != 2 * X.surface.ample_ref)
    throw std::invalid_argument("oracle cubic formulas assume c1(E) = 2H");
  const Int c2 = X.bundle.c2;
  const Int k = static_cast<Int>(X.surface.rank()) - 1;

  struct Target {
    bool feasible;
    Int s1, s2;
  };
  // Solve {2*chi_line = 0, 2*other = 0} for (s1, s2) at fixed a, from the
  // explicit polynomials (doubling keeps everything integral).
  const auto solve = [&](Int a, bool type2) -> Target {
    // 2*chi_line_cubic: a^2 - s2 + 3a + s1 + 2 = 0        -> s2 - s1 = a^2 + 3a + 2
    const Int A1 = a * a + 3 * a + 2;
    Int A2;
    if (type2) {
      // chi_twist_cubic_2h = (11-c2) + 9a + 3 s1 + a^2 - s2 -> s2 - 3 s1 = a^2 + 9a + 11 - c2
      A2 = a * a + 9 * a + 11 - c2;
      // s2 - s1 = A1, s2 - 3 s1 = A2  =>  s1 = (A1 - A2)/2
      if ((A1 - A2) % 2 != 0) return {false, 0, 0};
      const Int s1 = (A1 - A2) / 2;
      return {true, s1, A1 + s1};
    }
    // type 1: chi((D - 2H)) = 0 with D - 2H = (a-6)e0 + sum (a_i + 2) e_i:
    // substituting shifts s1 -> s1 + 2k, s2 -> s2 + 4 s1 + 4k into the line chi.
    // 2*chi: (a-6)^2 + 3(a-6) + 2 - (s2 + 4 s1 + 4k) + (s1 + 2k) = 0
    A2 = (a - 6) * (a - 6) + 3 * (a - 6) + 2 - 2 * k;
    // s2 + 3 s1 = A2 and s2 - s1 = A1  =>  s1 = (A2 - A1)/4
    if ((A2 - A1) % 4 != 0) return {false, 0, 0};
    const Int s1 = (A2 - A1) / 4;
    return {true, s1, A1 + s1};
  };

  std::vector<Int> acc;
  for (Int a = -box; a <= box; ++a)
    for (bool type2 : {false, true}) {
      const auto t = solve(a, type2);
      if (!t.feasible || t.s2 < 0 || t.s1 * t.s1 > k * t.s2) continue;
      std::vector<std::vector<Int>> tuples;
      acc.clear();
      cubic_tuples(k, box, t.s1, t.s2, acc, tuples);
      for (const auto& tu : tuples) {
        DivisorClass D = DivisorClass::zero(X.surface.rank());
        D.c[0] = a;
        for (Int i = 0; i < k; ++i) D.c[1 + i] = tu[i];
        // final literal re-check through the closed forms
        std::vector<Int> v(D.c.begin(), D.c.end());
        if (type2) {
          if (chi_line_cubic(v) == 0 && chi_twist_cubic_2h(c2, v) == 0) out.push_back({2, D});
        } else {
          std::vector<Int> vs = v;
          vs[0] -= 6;
          for (std::size_t i = 1; i < vs.size(); ++i) vs[i] += 2;
          if (chi_line_cubic(v) == 0 && chi_line_cubic(vs) == 0) out.push_back({1, D});
        }
      }
    }
}

}  // namespace detail

// All solutions of the two chi systems with coefficients in [-box, box].
inline std::vector<BruteSolution> brute_line_candidates(const ScrollSpec& X, Int box = 20) {
  if (box < 1) throw std::invalid_argument("brute_line_candidates: box must be >= 1");
  std::vector<BruteSolution> out;
  switch (X.surface.kind) {
    case SurfaceKind::ProjectivePlane:
      detail::brute_rank1(X, box, out);
      break;
    case SurfaceKind::Quadric:
    case SurfaceKind::Hirzebruch1:
      detail::brute_rank2(X, box, out);
      break;
    case SurfaceKind::K3Lattice:
      if (X.surface.rank() == 1)
        detail::brute_rank1(X, box, out);
      else
        detail::brute_rank2(X, box, out);
      break;
    case SurfaceKind::BlownPlane:
      detail::brute_cubic(X, box, out);
      break;
    default:
      throw std::invalid_argument("brute_line_candidates: unsupported base");
  }
  return out;
}

// --- independent Kunneth cohomology on the quadric -------------------------

// h^i(O(a,b)) on P1 x P1 assembled literally from the factor tables.
inline CohomologyVector kunneth_direct(Int a, Int b) {
  const auto table = [](Int n) {
    return std::array<Int, 2>{n >= 0 ? n + 1 : 0, n <= -2 ? -n - 1 : 0};
  };
  const auto ta = table(a), tb = table(b);
  Int h[3] = {0, 0, 0};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) h[p + q] += ta[p] * tb[q];
  return CohomologyVector::of(h[0], h[1], h[2]);
}

// --- symbolic expansion of c2(S^j) ------------------------------------------

// c2(S^j E) = A e1^2 + B e2 for a rank-2 E, by expanding the double sum over
// Chern-root pairs with formal symbols and reducing x^2+y^2 = e1^2 - 2 e2,
// xy = e2. Returns (A, B). The expansion is a literal monomial convolution,
// not the main path's coefficient bookkeeping.
inline std::pair<Int, Int> sym_expand(Int j) {
  if (j < 0 || j > 8) throw std::invalid_argument("sym_expand: supported range is 0..8");
  using Monomial = std::pair<int, int>;           // (x-degree, y-degree)
  std::map<Monomial, Int> total;                  // the expanded double sum
  const auto root = [&](Int i) {                  // i-th Chern root of S^j: (j-i)x + iy
    std::map<Monomial, Int> lin;
    lin[{1, 0}] = j - i;
    lin[{0, 1}] = i;
    return lin;
  };
  for (Int i = 0; i <= j; ++i)
    for (Int k = i + 1; k <= j; ++k)
      for (const auto& [m1, a] : root(i))
        for (const auto& [m2, b] : root(k))
          total[{m1.first + m2.first, m1.second + m2.second}] += a * b;
  const Int xx = total[{2, 0}], xy = total[{1, 1}], yy = total[{0, 2}];
  if (xx != yy) throw std::logic_error("sym_expand: expansion is not symmetric");
  // A (x^2 + y^2) + B xy = A (e1^2 - 2 e2) + B e2
  return {xx, xy - 2 * xx};
}

// --- exhaustive extension matching ------------------------------------------

struct PairMatch {
  LineBundleOnX first, second;
};

// Try every ordered pair of candidate line bundles against the invariants
// (c1, deg(c2 . pi*ample)) of a rank-2 datum; the main discriminator must
// reach the same verdict.
inline std::vector<PairMatch> exhaustive_pair_match(const ScrollSpec& X, const ChowElement& g_c1,
                                                    Int g_pairing,
                                                    const std::vector<LineBundleOnX>& candidates) {
  std::vector<PairMatch> out;
  for (const auto& L1 : candidates)
    for (const auto& L2 : candidates) {
      const auto e1 = chow_line_bundle(X, L1.a, L1.D);
      const auto e2 = chow_line_bundle(X, L2.a, L2.D);
      const ChowElement c1 = e1 + e2;
      const ChowElement c2 = product(X, e1, e2);
      if (!(c1 == g_c1) || pair_with_ample(X, c2) != g_pairing) continue;
      // the invariants are symmetric, so record each unordered pair once
      bool mirrored = false;
      for (const auto& m : out)
        if (m.first == L2 && m.second == L1) mirrored = true;
      if (!mirrored) out.push_back({L1, L2});
    }
  return out;
}

}  // namespace ulrich::oracle
