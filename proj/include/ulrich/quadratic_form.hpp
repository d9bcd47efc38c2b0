#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ulrich/surface.hpp"

namespace ulrich {

// Outcome of deciding whether the rank-2 intersection form represents a target
// integer. ProvedImpossible carries an unconditional certificate (a modulus, or
// a discriminant obstruction for target 0); Witness carries a lattice vector;
// UnknownUpTo is the honest fallback when the bounded search is inconclusive.
struct RepresentResult {
  enum class Kind { ProvedImpossible, Witness, UnknownUpTo } kind;
  // ProvedImpossible: the reduced discriminant polynomial sa*b^2 + sb and the
  // modulus at which it avoids all squares (modulus 0 means the target-0 test).
  Int modulus = 0;
  Int sieve_a = 0, sieve_b = 0;
  std::string detail;
  // Witness:
  DivisorClass witness;
  // UnknownUpTo:
  Int bound = 0;
};

struct RepresentOptions {
  Int sieve_modulus_cap = 360;
  Int search_bound = 50;
};

namespace detail {

// q(a,b) = p a^2 + 2q ab + r b^2 read off the Gram matrix.
struct BinaryForm {
  Int p, q, r;
  Int eval(Int a, Int b) const { return p * a * a + 2 * q * a * b + r * b * b; }
};

inline BinaryForm binary_form(const SurfaceModel& S) {
  if (S.rank() != 2) throw std::invalid_argument("binary form requires a rank-2 lattice");
  return BinaryForm{S.gram[0][0], S.gram[0][1], S.gram[1][1]};
}

inline std::vector<bool> squares_mod(Int m) {
  std::vector<bool> sq(m, false);
  for (Int x = 0; x < m; ++x) sq[(x * x) % m] = true;
  return sq;
}

inline Int mod_nonneg(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

// Divide the largest perfect-square factor out of gcd(|sa|, |sb|) so the
// sieve polynomial matches the hand reduction (240b^2+56t -> 15b^2+7t/2).
inline void reduce_by_square_content(Int& sa, Int& sb) {
  Int g = std::gcd(sa < 0 ? -sa : sa, sb < 0 ? -sb : sb);
  for (Int d = isqrt(g); d >= 2; --d) {
    if (g % (d * d) == 0) {
      sa /= d * d;
      sb /= d * d;
      return;
    }
  }
}

}  // namespace detail

// Decide representability of `target` by the rank-2 intersection form.
//
// Solving q(a,b) = target for a at fixed b needs the discriminant
// 4[(q^2-pr) b^2 + p*target] to be a perfect square. Target 0 is settled by a
// single squarefree test; otherwise a modular sieve over moduli up to the cap
// tries to prove the reduced discriminant polynomial avoids squares, and a
// bounded box search looks for an explicit witness.
inline RepresentResult represents(const SurfaceModel& S, Int target,
                                  const RepresentOptions& opt = {}) {
  const auto f = detail::binary_form(S);
  RepresentResult res;

  if (target == 0) {
    // Nontrivial zero needs b != 0 and (q^2-pr) b^2 a square (for p != 0), or
    // a degenerate form. The certificate is the non-square discriminant.
    const Int disc4 = 4 * (f.q * f.q - f.p * f.r);
    if (f.p != 0 && !is_perfect_square(disc4)) {
      res.kind = RepresentResult::Kind::ProvedImpossible;
      res.modulus = 0;
      std::ostringstream os;
      os << disc4 << "*b^2 must be a perfect square, and " << disc4 << " is not";
      res.detail = os.str();
      return res;
    }
    // Fall through to the search (isotropic forms do represent 0 nontrivially).
  }

  if (f.p != 0 && target != 0) {
    Int sa = f.q * f.q - f.p * f.r;  // coefficient of b^2 in disc/4
    Int sb = f.p * target;
    detail::reduce_by_square_content(sa, sb);
    for (Int m = 2; m <= opt.sieve_modulus_cap; ++m) {
      const auto sq = detail::squares_mod(m);
      bool all_nonsquare = true;
      for (Int b = 0; b < m && all_nonsquare; ++b)
        if (sq[detail::mod_nonneg(sa * b * b + sb, m)]) all_nonsquare = false;
      if (all_nonsquare) {
        res.kind = RepresentResult::Kind::ProvedImpossible;
        res.modulus = m;
        res.sieve_a = sa;
        res.sieve_b = sb;
        std::ostringstream os;
        os << sa << "*b^2 + (" << sb << ") avoids all squares mod " << m;
        res.detail = os.str();
        return res;
      }
    }
  }

  // Bounded witness search; canonical pick = smallest sup-norm ring, then the
  // lexicographically largest pair in it.
  std::optional<std::pair<Int, Int>> best;
  for (Int a = -opt.search_bound; a <= opt.search_bound; ++a)
    for (Int b = -opt.search_bound; b <= opt.search_bound; ++b) {
      if (a == 0 && b == 0) continue;
      if (f.eval(a, b) != target) continue;
      const Int norm = std::max(a < 0 ? -a : a, b < 0 ? -b : b);
      if (!best) {
        best = {a, b};
        continue;
      }
      const Int bn = std::max(best->first < 0 ? -best->first : best->first,
                              best->second < 0 ? -best->second : best->second);
      if (norm < bn || (norm == bn && std::pair{a, b} > *best)) best = {a, b};
    }
  if (best) {
    res.kind = RepresentResult::Kind::Witness;
    res.witness = DivisorClass{best->first, best->second};
    return res;
  }

  res.kind = RepresentResult::Kind::UnknownUpTo;
  res.bound = opt.search_bound;
  return res;
}

// One eliminated (or surviving) triple (N^2, M^2, N.M) in the indecomposability
// analysis of D = N + M into effective classes.
struct TripleRecord {
  Int n_sq, m_sq, nm;
  enum class Fate {
    NotRepresentedN,   // N^2 not represented by the form
    NotRepresentedM,   // M^2 not represented
    HodgeIndex,        // det [[N^2,NM],[NM,M^2]] > 0, impossible in signature (1,1)
    NoLatticePoint,    // line-conic intersection has no integral point
    Realized,          // concrete decomposition found
    Unresolved,        // representability unknown and no lattice point sought
  } fate;
  std::string note;
};

struct IndecomposabilityReport {
  bool indecomposable = false;
  std::vector<TripleRecord> trace;
  DivisorClass summand_n, summand_m;  // filled when a decomposition was realized
};

namespace detail {

// All integral points with v.D = pairing and q(v) = square, via the line-conic
// intersection: parametrize the line over Z and extract integer roots.
inline std::vector<DivisorClass> lattice_points_on_line_conic(const SurfaceModel& S,
                                                              const DivisorClass& D, Int pairing,
                                                              Int square) {
  // v.D = g1 x + g2 y with (g1, g2) = gram * D.
  const Int g1 = S.gram[0][0] * D.c[0] + S.gram[0][1] * D.c[1];
  const Int g2 = S.gram[1][0] * D.c[0] + S.gram[1][1] * D.c[1];
  if (g1 == 0 && g2 == 0) throw std::logic_error("degenerate pairing vector");
  const Int g = std::gcd(g1 < 0 ? -g1 : g1, g2 < 0 ? -g2 : g2);
  std::vector<DivisorClass> out;
  if (pairing % g != 0) return out;
  // Particular solution of (g1/g) x + (g2/g) y = pairing/g by extended gcd.
  Int a = g1 / g, b = g2 / g, t = pairing / g;
  Int x0 = 0, y0 = 0;
  {
    // extended Euclid on (a, b)
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, tt = 1;
    while (r != 0) {
      Int qq = old_r / r;
      Int tmp = old_r - qq * r;
      old_r = r;
      r = tmp;
      tmp = old_s - qq * s;
      old_s = s;
      s = tmp;
      tmp = old_t - qq * tt;
      old_t = tt;
      tt = tmp;
    }
    // old_r = +-1 here since gcd(a,b) = 1
    x0 = old_s * t * old_r;
    y0 = old_t * t * old_r;
  }
  const Int dx = b, dy = -a;  // direction of the line
  // q(x0 + s*dx, y0 + s*dy) = square: quadratic in s.
  const auto f = binary_form(S);
  const Int A = f.eval(dx, dy);
  const Int B = 2 * (f.p * x0 * dx + f.q * (x0 * dy + y0 * dx) + f.r * y0 * dy);
  const Int C = f.eval(x0, y0) - square;
  if (A == 0 && B == 0 && C == 0)
    throw std::logic_error("line lies on the conic; lattice is degenerate");
  for (Int s : integer_roots(A, B, C)) out.push_back(DivisorClass{x0 + s * dx, y0 + s * dy});
  return out;
}

}  // namespace detail

// Decide whether D (with D^2 > 0) decomposes as a sum of two effective classes
// on a rank-2 K3-type lattice. Every such decomposition D = N + M gives a
// triple of positive integers (N^2, M^2, N.M) with N^2 + M^2 + 2 N.M = D^2,
// both squares represented by the form and Gram determinant <= 0 (Hodge index
// in signature (1,1)). Triples surviving those filters are checked for actual
// lattice points exactly.
inline IndecomposabilityReport indecomposability_check(const SurfaceModel& S,
                                                       const DivisorClass& D,
                                                       const RepresentOptions& opt = {}) {
  if (S.rank() != 2) throw std::invalid_argument("indecomposability_check: rank-2 lattice required");
  const Int d2 = self_intersection(S, D);
  if (d2 <= 0) throw std::invalid_argument("indecomposability_check: D^2 must be positive");

  IndecomposabilityReport rep;
  for (Int nm = 1; 2 * nm + 2 <= d2; ++nm) {
    for (Int n = 1; n + 1 + 2 * nm <= d2; ++n) {
      const Int m = d2 - n - 2 * nm;
      if (m < n) break;  // triples are unordered in (n, m)
      TripleRecord rec{n, m, nm, TripleRecord::Fate::Unresolved, {}};
      const auto rn = represents(S, n, opt);
      if (rn.kind == RepresentResult::Kind::ProvedImpossible) {
        rec.fate = TripleRecord::Fate::NotRepresentedN;
        rec.note = rn.detail;
        rep.trace.push_back(rec);
        continue;
      }
      const auto rm = represents(S, m, opt);
      if (rm.kind == RepresentResult::Kind::ProvedImpossible) {
        rec.fate = TripleRecord::Fate::NotRepresentedM;
        rec.note = rm.detail;
        rep.trace.push_back(rec);
        continue;
      }
      const Int det = n * m - nm * nm;
      if (det > 0) {
        rec.fate = TripleRecord::Fate::HodgeIndex;
        rec.note = "det [[" + std::to_string(n) + "," + std::to_string(nm) + "],[" +
                   std::to_string(nm) + "," + std::to_string(m) + "]] = " + std::to_string(det) +
                   " > 0";
        rep.trace.push_back(rec);
        continue;
      }
      // Survivor: N is pinned by N.D = N^2 + N.M, an exact line-conic problem.
      bool realized = false;
      for (const auto& N : detail::lattice_points_on_line_conic(S, D, n + nm, n)) {
        const DivisorClass M = D - N;
        if (self_intersection(S, M) != m) continue;
        if (intersect(S, N, M) != nm) continue;
        if (intersect(S, N, S.ample_ref) <= 0 || intersect(S, M, S.ample_ref) <= 0) continue;
        rec.fate = TripleRecord::Fate::Realized;
        rep.trace.push_back(rec);
        rep.summand_n = N;
        rep.summand_m = M;
        rep.indecomposable = false;
        realized = true;
        break;
      }
      if (realized) return rep;
      rec.fate = TripleRecord::Fate::NoLatticePoint;
      rec.note = "no integral point with N.D = " + std::to_string(n + nm) +
                 " and N^2 = " + std::to_string(n);
      rep.trace.push_back(rec);
    }
  }
  rep.indecomposable = true;
  return rep;
}

}  // namespace ulrich
