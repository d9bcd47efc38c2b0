#pragma once

#include "ulrich/presentation.hpp"
#include "ulrich/surface.hpp"

namespace ulrich {

// Rank plus Chern data (c1, c2) of a bundle on a surface; c2 in multiples of
// the point class.
struct BundleData {
  Int rank = 1;
  DivisorClass c1;
  Int c2 = 0;

  void validate() const {
    if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
    if (rank == 1 && c2 != 0) throw std::invalid_argument("a line bundle has c2 = 0");
  }
};

// chi(O_S(D)) = chi(O_S) + D.(D - K)/2.
inline Int chi_line(const SurfaceModel& S, const DivisorClass& D) {
  const Int pairing = intersect(S, D, D - S.canonical);
  return S.chi_structure + exact_half(pairing, "chi_line");
}

// Surface Riemann-Roch: chi(B) = r chi(O_S) + c1.(c1 - K)/2 - c2.
inline Int chi_bundle(const SurfaceModel& S, const BundleData& B) {
  const Int pairing = intersect(S, B.c1, B.c1 - S.canonical);
  return B.rank * S.chi_structure + exact_half(pairing, "chi_bundle") - B.c2;
}

// Twist of a rank-2 bundle by a line bundle: c1 + 2D, c2 + c1.D + D^2.
inline BundleData twist(const SurfaceModel& S, const BundleData& B, const DivisorClass& D) {
  if (B.rank != 2) throw std::invalid_argument("twist: rank-2 bundle required");
  BundleData out;
  out.rank = 2;
  out.c1 = B.c1 + 2 * D;
  out.c2 = B.c2 + intersect(S, B.c1, D) + self_intersection(S, D);
  return out;
}

// Twist for arbitrary rank (used by the pushforward chi formulas):
// c1 + r D, c2 + (r-1) c1.D + C(r,2) D^2.
inline BundleData twist_rank(const SurfaceModel& S, const BundleData& B, const DivisorClass& D) {
  BundleData out;
  out.rank = B.rank;
  out.c1 = B.c1 + B.rank * D;
  out.c2 = B.c2 + (B.rank - 1) * intersect(S, B.c1, D) +
           (B.rank * (B.rank - 1) / 2) * self_intersection(S, D);
  return out;
}

inline BundleData dual_rank2(const BundleData& B) {
  if (B.rank != 2) throw std::invalid_argument("dual_rank2: rank-2 bundle required");
  BundleData out;
  out.rank = 2;
  out.c1 = -B.c1;
  out.c2 = B.c2;
  return out;
}

// j-th symmetric power of a rank-2 bundle by the splitting principle. With
// Chern roots x, y of B, S^j B has roots (j-i)x + iy; c1 = j(j+1)/2 c1(B) and
// c2 is the sum over root pairs, reduced via x^2+y^2 = c1^2 - 2c2, xy = c2.
inline BundleData sym_power(const SurfaceModel& S, const BundleData& B, Int j) {
  if (B.rank != 2) throw std::invalid_argument("sym_power: rank-2 bundle required");
  if (j < 0) throw std::invalid_argument("sym_power: negative power");
  Int coeff_xx = 0, coeff_xy = 0, coeff_yy = 0;
  for (Int i = 0; i <= j; ++i)
    for (Int k = i + 1; k <= j; ++k) {
      coeff_xx += (j - i) * (j - k);
      coeff_xy += (j - i) * k + i * (j - k);
      coeff_yy += i * k;
    }
  if (coeff_xx != coeff_yy) throw std::logic_error("sym_power: asymmetric root expansion");
  BundleData out;
  out.rank = j + 1;
  out.c1 = (j * (j + 1) / 2) * B.c1;
  out.c2 = coeff_xx * self_intersection(S, B.c1) + (coeff_xy - 2 * coeff_xx) * B.c2;
  return out;
}

namespace detail {

// Total Chern class truncated in degree <= 2: 1 + d1 + d2 [pt].
struct TruncChern {
  DivisorClass d1;
  Int d2 = 0;
};

inline TruncChern trunc_mul(const SurfaceModel& S, const TruncChern& a, const TruncChern& b) {
  TruncChern out;
  out.d1 = a.d1 + b.d1;
  out.d2 = a.d2 + b.d2 + intersect(S, a.d1, b.d1);
  return out;
}

inline TruncChern trunc_inverse(const SurfaceModel& S, const TruncChern& a) {
  TruncChern out;
  out.d1 = -a.d1;
  out.d2 = self_intersection(S, a.d1) - a.d2;
  return out;
}

}  // namespace detail

// Chern classes of the rank-2 bundle presented by 0 -> (+)O(A_i) -> (+)O(B_j)
// -> E -> 0, via the Whitney formula c(E) = prod c(B_j) / prod c(A_i)
// truncated in degree 2.
inline BundleData chern_from_resolution(const SurfaceModel& S,
                                        const ResolutionPresentation& pres) {
  pres.check_rank2();
  detail::TruncChern num{DivisorClass::zero(S.rank()), 0};
  for (const auto& B : pres.targets) num = detail::trunc_mul(S, num, {B, 0});
  detail::TruncChern den{DivisorClass::zero(S.rank()), 0};
  for (const auto& A : pres.sources) den = detail::trunc_mul(S, den, {A, 0});
  const auto total = detail::trunc_mul(S, num, detail::trunc_inverse(S, den));
  BundleData out;
  out.rank = 2;
  out.c1 = total.d1;
  out.c2 = total.d2;
  return out;
}

// Chern data of a special rank-2 Ulrich bundle on (S, H_pol):
// c1 = 3H + K_S, c2 = (5H^2 + 3H.K)/2 + 2 chi(O_S).
inline BundleData special_ulrich_numerics(const SurfaceModel& S, const DivisorClass& H_pol) {
  BundleData out;
  out.rank = 2;
  out.c1 = 3 * H_pol + S.canonical;
  const Int pairing = 5 * self_intersection(S, H_pol) + 3 * intersect(S, H_pol, S.canonical);
  out.c2 = exact_half(pairing, "special_ulrich_numerics (inconsistent polarization)") +
           2 * S.chi_structure;
  return out;
}

}  // namespace ulrich
