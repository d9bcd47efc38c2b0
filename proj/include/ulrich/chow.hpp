#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ulrich/cohomology.hpp"
#include "ulrich/riemann_roch.hpp"

namespace ulrich {

// A result imported from the literature rather than computed here. Facts are
// immutable catalog entries; when one underwrites a cohomology vanishing the
// engine reports it instead of overclaiming a computation.
struct KnownFact {
  std::string id;
  std::string statement;
  std::string source;
  // Twists D for which this fact certifies H^i(E(D)) = 0 for all i.
  std::vector<DivisorClass> certifies_bundle_vanishing;
  bool match_up_to_permutation = false;  // compare exceptional parts as multisets
};

// The threefold X = P(E) -> S for a rank-2 bundle E on the base surface.
struct ScrollSpec {
  std::string name;
  SurfaceModel surface;
  BundleData bundle;
  std::optional<ResolutionPresentation> presentation;
  std::vector<KnownFact> known_facts;

  void validate() const {
    if (bundle.rank != 2) throw std::invalid_argument("scroll bundle must have rank 2");
    bundle.validate();
    if (bundle.c1.rank() != surface.rank())
      throw std::invalid_argument("scroll bundle c1 does not live in the base lattice");
    if (presentation) {
      const auto derived = chern_from_resolution(surface, *presentation);
      if (derived.c1 != bundle.c1 || derived.c2 != bundle.c2)
        throw std::invalid_argument("presentation does not reproduce the scroll bundle");
    }
  }
};

// deg X = xi^3 = c1(E)^2 - c2(E).
inline Int scroll_degree(const ScrollSpec& X) {
  return self_intersection(X.surface, X.bundle.c1) - X.bundle.c2;
}

// Graded element of CH(X) for X = P(E), in the normalization [pt] = xi.f.
// Stored fully reduced under
//   xi^2 = xi.pi*c1(E) - c2(E) f,   pi*D.pi*D' = (D.D') f,
//   xi.pi*D.pi*D' = (D.D') [pt],    pi*D.f = 0,   xi.f = [pt],   f.f = 0.
struct ChowElement {
  Rat d0;
  Rat d1_xi;
  std::vector<Rat> d1_div;     // pi* part in degree 1
  std::vector<Rat> d2_xi_div;  // xi.pi* part in degree 2
  Rat d2_f;                    // fiber-class part in degree 2
  Rat d3;                      // point-class part

  static ChowElement zero(std::size_t rank) {
    ChowElement e;
    e.d0 = e.d1_xi = e.d2_f = e.d3 = Rat(0);
    e.d1_div.assign(rank, Rat(0));
    e.d2_xi_div.assign(rank, Rat(0));
    return e;
  }

  bool is_pure_degree1() const {
    if (d0 != 0 || d2_f != 0 || d3 != 0) return false;
    for (const auto& x : d2_xi_div)
      if (x != 0) return false;
    return true;
  }
  bool degree1_is_zero() const {
    if (d1_xi != 0) return false;
    for (const auto& x : d1_div)
      if (x != 0) return false;
    return true;
  }

  ChowElement& operator+=(const ChowElement& o) {
    if (d1_div.size() != o.d1_div.size()) throw std::invalid_argument("chow rank mismatch");
    d0 += o.d0;
    d1_xi += o.d1_xi;
    for (std::size_t i = 0; i < d1_div.size(); ++i) d1_div[i] += o.d1_div[i];
    for (std::size_t i = 0; i < d2_xi_div.size(); ++i) d2_xi_div[i] += o.d2_xi_div[i];
    d2_f += o.d2_f;
    d3 += o.d3;
    return *this;
  }
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) {
    return a += (Rat(-1) * b);
  }
  friend ChowElement operator*(const Rat& s, ChowElement a) {
    a.d0 *= s;
    a.d1_xi *= s;
    for (auto& x : a.d1_div) x *= s;
    for (auto& x : a.d2_xi_div) x *= s;
    a.d2_f *= s;
    a.d3 *= s;
    return a;
  }
  friend bool operator==(const ChowElement& a, const ChowElement& b) {
    return a.d0 == b.d0 && a.d1_xi == b.d1_xi && a.d1_div == b.d1_div &&
           a.d2_xi_div == b.d2_xi_div && a.d2_f == b.d2_f && a.d3 == b.d3;
  }
  friend bool operator!=(const ChowElement& a, const ChowElement& b) { return !(a == b); }
};

inline ChowElement chow_scalar(const ScrollSpec& X, const Rat& v) {
  auto e = ChowElement::zero(X.surface.rank());
  e.d0 = v;
  return e;
}
inline ChowElement chow_xi(const ScrollSpec& X) {
  auto e = ChowElement::zero(X.surface.rank());
  e.d1_xi = Rat(1);
  return e;
}
inline ChowElement chow_pullback(const ScrollSpec& X, const DivisorClass& D) {
  if (D.rank() != X.surface.rank()) throw std::invalid_argument("pullback rank mismatch");
  auto e = ChowElement::zero(X.surface.rank());
  for (std::size_t i = 0; i < D.rank(); ++i) e.d1_div[i] = Rat(D.c[i]);
  return e;
}
inline ChowElement chow_fiber(const ScrollSpec& X) {
  auto e = ChowElement::zero(X.surface.rank());
  e.d2_f = Rat(1);
  return e;
}
inline ChowElement chow_point(const ScrollSpec& X) {
  auto e = ChowElement::zero(X.surface.rank());
  e.d3 = Rat(1);
  return e;
}
// a xi + pi*D as a degree-1 element.
inline ChowElement chow_line_bundle(const ScrollSpec& X, Int a, const DivisorClass& D) {
  auto e = chow_pullback(X, D);
  e.d1_xi = Rat(a);
  return e;
}

namespace detail {

inline Rat pair_rat(const SurfaceModel& S, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat acc(0);
  for (std::size_t i = 0; i < S.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < S.rank(); ++j) acc += a[i] * Rat(S.gram[i][j]) * b[j];
  }
  return acc;
}

inline Rat pair_rat_int(const SurfaceModel& S, const std::vector<Rat>& a, const DivisorClass& b) {
  std::vector<Rat> br(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) br[i] = Rat(b.c[i]);
  return pair_rat(S, a, br);
}

}  // namespace detail

// Fully reduced graded product in CH(X); commutative and associative.
inline ChowElement product(const ScrollSpec& X, const ChowElement& x, const ChowElement& y) {
  const auto& S = X.surface;
  if (x.d1_div.size() != S.rank() || y.d1_div.size() != S.rank())
    throw std::invalid_argument("product: mismatched scroll contexts");
  ChowElement out = ChowElement::zero(S.rank());

  // scalar parts; d0*d0 would be double counted, so it is reset afterwards
  out += x.d0 * y;
  out += y.d0 * x;
  out.d0 = x.d0 * y.d0;

  // degree1 x degree1
  {
    const Rat a = x.d1_xi, b = y.d1_xi;
    // ab xi^2 = ab (xi.pi*c1 - c2 f)
    for (std::size_t i = 0; i < S.rank(); ++i)
      out.d2_xi_div[i] += a * b * Rat(X.bundle.c1.c[i]) + a * y.d1_div[i] + b * x.d1_div[i];
    out.d2_f += -(a * b) * Rat(X.bundle.c2) + detail::pair_rat(S, x.d1_div, y.d1_div);
  }
  // degree1 x degree2 and degree2 x degree1
  {
    const auto deg3 = [&](const ChowElement& u, const ChowElement& v) {
      // u degree-1 (a xi + pi*P), v degree-2 (xi.pi*R + c f)
      Rat acc(0);
      acc += u.d1_xi * detail::pair_rat_int(S, v.d2_xi_div, X.bundle.c1);  // a xi^2 pi*R
      acc += u.d1_xi * v.d2_f;                                             // a c xi.f
      acc += detail::pair_rat(S, u.d1_div, v.d2_xi_div);                   // pi*P xi pi*R
      return acc;
    };
    out.d3 += deg3(x, y) + deg3(y, x);
  }
  return out;
}

// chi(axi + pi*D) by pushing forward to the base:
//   a >= 0:  chi_S(S^a E (D));   a = -1:  0;
//   a <= -2: -chi_S(S^{-a-2} E^dual (D - c1(E)))  (Serre duality on X and S).
inline Int chi_pushforward(const ScrollSpec& X, Int a, const DivisorClass& D) {
  const auto& S = X.surface;
  if (a >= 0) {
    const auto sym = sym_power(S, X.bundle, a);
    return chi_bundle(S, twist_rank(S, sym, D));
  }
  if (a == -1) return 0;
  const auto sym = sym_power(S, dual_rank2(X.bundle), -a - 2);
  return -chi_bundle(S, twist_rank(S, sym, D - X.bundle.c1));
}

// Chern character input for Hirzebruch-Riemann-Roch on X.
struct ChernData {
  Rat rank;
  ChowElement c1, c2, c3;
};

namespace detail {

// c(T_X) = (1 + 2xi - pi*c1(E)) . pi*(1 - K_S + e(S)[pt]) via the relative
// Euler sequence; only the graded pieces are kept.
struct TangentChern {
  ChowElement c1, c2, c3;
};

inline TangentChern tangent_chern(const ScrollSpec& X) {
  const auto& S = X.surface;
  ChowElement t = chow_xi(X);
  t = Rat(2) * t;
  t += Rat(-1) * chow_pullback(X, X.bundle.c1);
  const ChowElement s1 = chow_pullback(X, -S.canonical);
  ChowElement s2 = chow_fiber(X);
  s2 = Rat(S.euler_number) * s2;

  TangentChern tc;
  tc.c1 = t + s1;
  tc.c2 = product(X, t, s1) + s2;
  tc.c3 = product(X, t, s2);
  return tc;
}

}  // namespace detail

// Todd class of X: 1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24.
inline ChowElement todd_class(const ScrollSpec& X) {
  const auto tc = detail::tangent_chern(X);
  ChowElement td = chow_scalar(X, Rat(1));
  td += Rat(1, 2) * tc.c1;
  td += Rat(1, 12) * (product(X, tc.c1, tc.c1) + tc.c2);
  td += Rat(1, 24) * product(X, tc.c1, tc.c2);
  return td;
}

// Threefold HRR: chi = deg_3(ch . td), asserted integral.
inline Int chi_hrr(const ScrollSpec& X, const ChernData& cd) {
  ChowElement ch = chow_scalar(X, cd.rank);
  ch += cd.c1;
  ch += Rat(1, 2) * (product(X, cd.c1, cd.c1) - Rat(2) * cd.c2);
  ch += Rat(1, 6) * (product(X, cd.c1, product(X, cd.c1, cd.c1)) -
                     Rat(3) * product(X, cd.c1, cd.c2) + Rat(3) * cd.c3);
  const ChowElement total = product(X, ch, todd_class(X));
  return rat_to_int(total.d3, "chi_hrr");
}

// HRR for the line bundle a xi + pi*D.
inline Int chi_hrr_line(const ScrollSpec& X, Int a, const DivisorClass& D) {
  ChernData cd;
  cd.rank = Rat(1);
  cd.c1 = chow_line_bundle(X, a, D);
  cd.c2 = ChowElement::zero(X.surface.rank());
  cd.c3 = ChowElement::zero(X.surface.rank());
  return chi_hrr(X, cd);
}

// Chern classes of G = pi*F (x) xi for F of rank 1 or 2 on the base:
//   r = 2: c1 = 2xi + pi*c1(F), c2 = xi^2 + xi.pi*c1(F) + c2(F) f  (reduced).
inline std::pair<ChowElement, ChowElement> pullback_twist_chern(const ScrollSpec& X,
                                                                const BundleData& F) {
  if (F.rank != 1 && F.rank != 2)
    throw std::invalid_argument("pullback_twist_chern: rank must be 1 or 2");
  if (F.rank == 1) {
    ChowElement c1 = chow_line_bundle(X, 1, F.c1);
    return {c1, ChowElement::zero(X.surface.rank())};
  }
  ChowElement c1 = chow_line_bundle(X, 2, F.c1);
  const ChowElement xi = chow_xi(X);
  ChowElement c2 = product(X, xi, xi);
  c2 += product(X, xi, chow_pullback(X, F.c1));
  c2 += Rat(F.c2) * chow_fiber(X);
  return {c1, c2};
}

// Chern classes of an extension of two line bundles: c1 = L1 + L2, c2 = L1.L2.
inline std::pair<ChowElement, ChowElement> extension_chern(const ScrollSpec& X,
                                                           const ChowElement& L1,
                                                           const ChowElement& L2) {
  if (!L1.is_pure_degree1() || !L2.is_pure_degree1() || L1.degree1_is_zero() ||
      L2.degree1_is_zero())
    throw std::invalid_argument("extension_chern: inputs must be nonzero degree-1 classes");
  return {L1 + L2, product(X, L1, L2)};
}

// Chern classes of F (x) L for a rank-2 F with the given classes and a line
// bundle class L: (c1 + 2L, c2 + c1.L + L^2).
inline std::pair<ChowElement, ChowElement> rank2_chern_twist(const ScrollSpec& X,
                                                             const ChowElement& c1,
                                                             const ChowElement& c2,
                                                             const ChowElement& L) {
  return {c1 + Rat(2) * L, c2 + product(X, c1, L) + product(X, L, L)};
}

// chi of a rank-2 sheaf on X given its Chern classes (c3 = 0 in rank <= 2).
inline Int chi_hrr_rank2(const ScrollSpec& X, const ChowElement& c1, const ChowElement& c2) {
  return chi_hrr(X, ChernData{Rat(2), c1, c2, ChowElement::zero(X.surface.rank())});
}

// Degree of a degree-2 class against the pulled-back surface polarization.
// This is the discriminator pairing: written "c2 . H" for scrolls, it only
// matches the classical numbers when H is read as pi*(ample_ref).
inline Int pair_with_ample(const ScrollSpec& X, const ChowElement& c2) {
  const ChowElement v = product(X, c2, chow_pullback(X, X.surface.ample_ref));
  return rat_to_int(v.d3, "pair_with_ample");
}

// The general hyperplane section of X is the base blown up at c2(E) points,
// polarized by H~ = pi'*c1(E) - sum E_i; adjunction gives
// K_~S + H~ = pi'*(K_S + c1(E)).
struct HyperplaneBlowup {
  SurfaceModel surface;       // the blown-up lattice
  DivisorClass hyperplane;    // H~
  bool adjunction_ok = false;
};

inline HyperplaneBlowup hyperplane_blowup(const ScrollSpec& X) {
  if (X.bundle.c2 < 0) throw std::invalid_argument("hyperplane_blowup: c2(E) must be >= 0");
  const auto& S = X.surface;
  const std::size_t n = S.rank();
  const std::size_t k = static_cast<std::size_t>(X.bundle.c2);
  HyperplaneBlowup out;
  SurfaceModel& T = out.surface;
  T.kind = SurfaceKind::Blowup;
  T.blown_points = static_cast<int>(k);
  T.basis_labels = S.basis_labels;
  for (std::size_t i = 1; i <= k; ++i) T.basis_labels.push_back("E" + std::to_string(i));
  T.gram.assign(n + k, std::vector<Int>(n + k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) T.gram[i][j] = S.gram[i][j];
  for (std::size_t i = n; i < n + k; ++i) T.gram[i][i] = -1;
  const auto lift = [&](const DivisorClass& D, Int exc) {
    DivisorClass L = DivisorClass::zero(n + k);
    for (std::size_t i = 0; i < n; ++i) L.c[i] = D.c[i];
    for (std::size_t i = n; i < n + k; ++i) L.c[i] = exc;
    return L;
  };
  T.canonical = lift(S.canonical, 1);
  T.chi_structure = S.chi_structure;
  T.euler_number = S.euler_number + static_cast<Int>(k);
  out.hyperplane = lift(X.bundle.c1, -1);
  T.ample_ref = out.hyperplane;
  out.adjunction_ok = (T.canonical + out.hyperplane) == lift(S.canonical + X.bundle.c1, 0);
  return out;
}

// Printer for reports: "2xi + pi*(H - C)" / "xi.pi*(H) + 11*f - 3*[pt]" style.
inline std::string chow_to_string(const ScrollSpec& X, const ChowElement& e) {
  const auto rat_str = [](const Rat& r) {
    std::ostringstream t;
    t << r.numerator();
    if (r.denominator() != 1) t << "/" << r.denominator();
    return t.str();
  };
  const auto div_str = [&](const std::vector<Rat>& v) {
    std::ostringstream t;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!first) t << (v[i] > 0 ? " + " : " - ");
      else if (v[i] < 0) t << "-";
      const Rat a = v[i] > 0 ? v[i] : -v[i];
      if (a != 1) t << rat_str(a) << "*";
      t << X.surface.basis_labels[i];
      first = false;
    }
    return t.str();
  };

  struct Term {
    bool negative;
    std::string text;
  };
  std::vector<Term> terms;
  const auto scalar_term = [&](const Rat& r, const std::string& sym) {
    if (r == 0) return;
    const Rat a = r > 0 ? r : -r;
    std::string text;
    if (sym.empty())
      text = rat_str(a);
    else
      text = (a == 1) ? sym : rat_str(a) + "*" + sym;
    terms.push_back({r < 0, std::move(text)});
  };
  scalar_term(e.d0, "");
  scalar_term(e.d1_xi, "xi");
  if (auto s = div_str(e.d1_div); !s.empty()) terms.push_back({false, "pi*(" + s + ")"});
  if (auto s = div_str(e.d2_xi_div); !s.empty()) terms.push_back({false, "xi.pi*(" + s + ")"});
  scalar_term(e.d2_f, "f");
  scalar_term(e.d3, "[pt]");

  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      os << (terms[i].negative ? "-" : "") << terms[i].text;
    else
      os << (terms[i].negative ? " - " : " + ") << terms[i].text;
  }
  return os.str();
}

}  // namespace ulrich
