#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ulrich/divisor.hpp"

namespace ulrich {

enum class SurfaceKind {
  ProjectivePlane,
  Quadric,       // P1 x P1
  Hirzebruch1,   // F1, basis (C0, f)
  BlownPlane,    // P2 blown up at k points, basis (e0, e1..ek); k = 6 is the cubic surface
  K3Lattice,     // rank 1 or 2 K3 Picard lattice
  Blowup,        // auxiliary: blow-up of another base at points (hyperplane sections of scrolls)
};

inline const char* kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::ProjectivePlane: return "projective_plane";
    case SurfaceKind::Quadric: return "quadric";
    case SurfaceKind::Hirzebruch1: return "hirzebruch1";
    case SurfaceKind::BlownPlane: return "blown_plane";
    case SurfaceKind::K3Lattice: return "k3";
    case SurfaceKind::Blowup: return "blowup";
  }
  return "?";
}

// A polarized surface reduced to its Picard lattice: intersection form,
// canonical class and the structural constants entering Riemann-Roch.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::ProjectivePlane;
  int blown_points = 0;  // k for BlownPlane / Blowup
  std::vector<std::string> basis_labels;
  std::vector<std::vector<Int>> gram;
  DivisorClass canonical;
  Int chi_structure = 1;  // chi(O_S)
  Int euler_number = 0;   // topological Euler number e(S)
  DivisorClass ample_ref;
  std::vector<DivisorClass> minus_one_curves;  // the 27 lines when kind = BlownPlane(6)

  std::size_t rank() const { return basis_labels.size(); }
};

inline Int intersect(const SurfaceModel& S, const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != S.rank() || b.rank() != S.rank())
    throw std::invalid_argument("intersect: divisor rank does not match lattice rank");
  Int acc = 0;
  for (std::size_t i = 0; i < S.rank(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < S.rank(); ++j) acc += a.c[i] * S.gram[i][j] * b.c[j];
  }
  return acc;
}

inline Int self_intersection(const SurfaceModel& S, const DivisorClass& d) {
  return intersect(S, d, d);
}

// Signature of the intersection form as (positive, negative, zero) inertia,
// by exact congruence diagonalization over the rationals. When a diagonal
// pivot is missing the standard b_i <- b_i + b_j trick restores one, which
// makes this agree with the leading-principal-minor sign pattern whenever
// the minors are nonzero.
struct Signature {
  int positive = 0, negative = 0, zero = 0;
};

inline Signature lattice_signature(const SurfaceModel& S) {
  const std::size_t n = S.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(S.gram[i][j]);

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && m[k][j] == 0) ++j;
      if (j == n) {
        ++sig.zero;
        continue;
      }
      for (std::size_t t = k; t < n; ++t) m[k][t] += m[j][t];
      for (std::size_t t = k; t < n; ++t) m[t][k] += m[t][j];
    }
    const Rat pivot = m[k][k];
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat factor = m[i][k] / pivot;
      if (factor == 0) continue;
      for (std::size_t t = k; t < n; ++t) m[i][t] -= factor * m[k][t];
      for (std::size_t t = k; t < n; ++t) m[t][i] = m[i][t];
    }
  }
  return sig;
}

namespace detail {

inline void check_gram(const SurfaceModel& S) {
  const std::size_t n = S.rank();
  if (S.gram.size() != n) throw std::invalid_argument("gram size does not match basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (S.gram[i].size() != n) throw std::invalid_argument("gram is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (S.gram[i][j] != S.gram[j][i]) throw std::invalid_argument("gram is not symmetric");
  }
  const Signature sig = lattice_signature(S);
  if (sig.positive != 1 || sig.zero != 0 || sig.negative != static_cast<int>(n) - 1)
    throw std::invalid_argument("gram does not have signature (1, rank-1)");
}

}  // namespace detail

inline SurfaceModel make_projective_plane() {
  SurfaceModel S;
  S.kind = SurfaceKind::ProjectivePlane;
  S.basis_labels = {"h"};
  S.gram = {{1}};
  S.canonical = DivisorClass{-3};
  S.chi_structure = 1;
  S.euler_number = 3;
  S.ample_ref = DivisorClass{1};
  detail::check_gram(S);
  return S;
}

inline SurfaceModel make_quadric() {
  SurfaceModel S;
  S.kind = SurfaceKind::Quadric;
  S.basis_labels = {"l1", "l2"};
  S.gram = {{0, 1}, {1, 0}};
  S.canonical = DivisorClass{-2, -2};
  S.chi_structure = 1;
  S.euler_number = 4;
  S.ample_ref = DivisorClass{1, 1};
  detail::check_gram(S);
  return S;
}

inline SurfaceModel make_hirzebruch1() {
  SurfaceModel S;
  S.kind = SurfaceKind::Hirzebruch1;
  S.basis_labels = {"C0", "f"};
  S.gram = {{-1, 1}, {1, 0}};
  S.canonical = DivisorClass{-2, -3};
  S.chi_structure = 1;
  S.euler_number = 4;
  S.ample_ref = DivisorClass{1, 2};
  detail::check_gram(S);
  return S;
}

// P2 blown up at k general points, k <= 6 (k = 6 is the cubic surface in P3).
// For k = 5, 6 the (-1)-classes e_i, e0-e_i-e_j and 2e0-(five e_i) are listed;
// at k = 6 these are the 27 lines.
inline SurfaceModel make_blown_plane(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("make_blown_plane: supported range is 1..6");
  SurfaceModel S;
  S.kind = SurfaceKind::BlownPlane;
  S.blown_points = k;
  S.basis_labels = {"e0"};
  for (int i = 1; i <= k; ++i) S.basis_labels.push_back("e" + std::to_string(i));
  const std::size_t n = S.rank();
  S.gram.assign(n, std::vector<Int>(n, 0));
  S.gram[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) S.gram[i][i] = -1;
  S.canonical = DivisorClass::zero(n);
  S.canonical.c[0] = -3;
  for (std::size_t i = 1; i < n; ++i) S.canonical.c[i] = 1;
  S.chi_structure = 1;
  S.euler_number = 3 + k;
  S.ample_ref = -S.canonical;  // 3e0 - sum e_i, the anticanonical polarization

  for (int i = 1; i <= k; ++i) {
    DivisorClass L = DivisorClass::zero(n);
    L.c[i] = 1;
    S.minus_one_curves.push_back(L);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      DivisorClass L = DivisorClass::zero(n);
      L.c[0] = 1;
      L.c[i] = -1;
      L.c[j] = -1;
      S.minus_one_curves.push_back(L);
    }
  if (k >= 5) {
    // 2e0 minus five distinct e_i: one class at k = 5, six at k = 6.
    for (int skip = (k == 5 ? 0 : 1); skip <= (k == 5 ? 0 : k); ++skip) {
      DivisorClass L = DivisorClass::zero(n);
      L.c[0] = 2;
      for (int i = 1; i <= k; ++i)
        if (i != skip) L.c[i] = -1;
      S.minus_one_curves.push_back(L);
    }
  }
  detail::check_gram(S);
  return S;
}

// Rank-1 K3 lattice Z[H] with H^2 = h_sq.
inline SurfaceModel make_k3_rank1(Int h_sq) {
  if (h_sq <= 0 || h_sq % 2 != 0)
    throw std::invalid_argument("make_k3_rank1: H^2 must be a positive even integer");
  SurfaceModel S;
  S.kind = SurfaceKind::K3Lattice;
  S.basis_labels = {"H"};
  S.gram = {{h_sq}};
  S.canonical = DivisorClass{0};
  S.chi_structure = 2;
  S.euler_number = 24;
  S.ample_ref = DivisorClass{1};
  detail::check_gram(S);
  return S;
}

// Rank-2 K3 lattice Z[H] + Z[C] with the given even Gram entries.
inline SurfaceModel make_k3_rank2(Int h_sq, Int hc, Int c_sq) {
  if (h_sq % 2 != 0 || c_sq % 2 != 0)
    throw std::invalid_argument("make_k3_rank2: a K3 Picard lattice is even");
  SurfaceModel S;
  S.kind = SurfaceKind::K3Lattice;
  S.basis_labels = {"H", "C"};
  S.gram = {{h_sq, hc}, {hc, c_sq}};
  S.canonical = DivisorClass{0, 0};
  S.chi_structure = 2;
  S.euler_number = 24;
  S.ample_ref = DivisorClass{1, 0};
  detail::check_gram(S);
  return S;
}

// Render a divisor in the surface's basis labels, e.g. "H - 2C", "-4C0 - 3f", "0".
inline std::string divisor_to_string(const SurfaceModel& S, const DivisorClass& D) {
  if (D.rank() != S.rank()) throw std::invalid_argument("divisor_to_string: rank mismatch");
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < D.rank(); ++i) {
    const Int v = D.c[i];
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    const Int a = v < 0 ? -v : v;
    if (a != 1) out << a;
    out << S.basis_labels[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace ulrich
