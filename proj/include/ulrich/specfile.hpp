#pragma once

#include <cctype>

#include "ulrich/report.hpp"

namespace ulrich {

// Raised on malformed spec files or bundle expressions (CLI exit code 3).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed,
                                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ParseError("unknown key \"" + it.key() + "\" in " + where);
  }
}

inline DivisorClass divisor_from_spec(const Json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an integer array");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(where + " must contain integers");
    v.push_back(x.get<Int>());
  }
  if (v.size() != rank)
    throw ParseError(where + " has " + std::to_string(v.size()) + " entries, lattice rank is " +
                     std::to_string(rank));
  return DivisorClass(std::move(v));
}

}  // namespace detail

// Surface record: {"kind": ..., optional params}. Redundant fields, when
// present, are validated against the built surface so typos in lattice data
// fail loudly.
inline SurfaceModel surface_from_spec(const Json& j) {
  if (!j.is_object()) throw ParseError("surface must be an object");
  detail::reject_unknown_keys(
      j, {"kind", "points", "h_sq", "hc", "c_sq", "rank", "basis", "gram", "canonical", "chi",
          "euler", "ample_ref"},
      "surface");
  if (!j.contains("kind")) throw ParseError("surface.kind is required");
  const std::string kind = j.at("kind").get<std::string>();
  SurfaceModel S;
  if (kind == "projective_plane") {
    S = make_projective_plane();
  } else if (kind == "quadric") {
    S = make_quadric();
  } else if (kind == "hirzebruch1") {
    S = make_hirzebruch1();
  } else if (kind == "blown_plane") {
    if (!j.contains("points")) throw ParseError("surface.points is required for blown_plane");
    S = make_blown_plane(j.at("points").get<int>());
  } else if (kind == "k3") {
    const int rank = j.contains("rank") ? j.at("rank").get<int>() : (j.contains("hc") ? 2 : 1);
    if (rank == 1) {
      S = make_k3_rank1(j.contains("h_sq") ? j.at("h_sq").get<Int>() : 14);
    } else if (rank == 2) {
      if (!(j.contains("h_sq") && j.contains("hc") && j.contains("c_sq")))
        throw ParseError("rank-2 k3 surface requires h_sq, hc, c_sq");
      S = make_k3_rank2(j.at("h_sq").get<Int>(), j.at("hc").get<Int>(), j.at("c_sq").get<Int>());
    } else {
      throw ParseError("k3 rank must be 1 or 2");
    }
  } else {
    throw ParseError("unknown surface kind \"" + kind + "\"");
  }
  // strict validation of redundant fields
  if (j.contains("basis") && j.at("basis").get<std::vector<std::string>>() != S.basis_labels)
    throw ParseError("surface.basis does not match the built-in basis for " + kind);
  if (j.contains("gram") && j.at("gram").get<std::vector<std::vector<Int>>>() != S.gram)
    throw ParseError("surface.gram does not match the built-in intersection form for " + kind);
  if (j.contains("canonical") &&
      detail::divisor_from_spec(j.at("canonical"), S.rank(), "surface.canonical") != S.canonical)
    throw ParseError("surface.canonical does not match the built-in canonical class");
  if (j.contains("chi") && j.at("chi").get<Int>() != S.chi_structure)
    throw ParseError("surface.chi does not match chi(O_S) for " + kind);
  if (j.contains("euler") && j.at("euler").get<Int>() != S.euler_number)
    throw ParseError("surface.euler does not match e(S) for " + kind);
  if (j.contains("ample_ref") &&
      detail::divisor_from_spec(j.at("ample_ref"), S.rank(), "surface.ample_ref") != S.ample_ref)
    throw ParseError("surface.ample_ref does not match the built-in polarization");
  return S;
}

// Scroll spec file: {"name": ..., "surface": {...}, "bundle": {"c1": [...],
// "c2": n}, "presentation": {"sources": [[...]], "targets": [[...]]}?}.
inline ScrollSpec scroll_from_spec(const Json& j) {
  if (!j.is_object()) throw ParseError("spec file must contain a JSON object");
  detail::reject_unknown_keys(j, {"name", "surface", "bundle", "presentation"}, "spec file");
  if (!j.contains("surface") || !j.contains("bundle"))
    throw ParseError("spec file requires \"surface\" and \"bundle\"");
  ScrollSpec X;
  X.name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
  X.surface = surface_from_spec(j.at("surface"));
  const auto& b = j.at("bundle");
  detail::reject_unknown_keys(b, {"c1", "c2"}, "bundle");
  if (!b.contains("c1") || !b.contains("c2")) throw ParseError("bundle requires c1 and c2");
  X.bundle.rank = 2;
  X.bundle.c1 = detail::divisor_from_spec(b.at("c1"), X.surface.rank(), "bundle.c1");
  X.bundle.c2 = b.at("c2").get<Int>();
  if (j.contains("presentation")) {
    const auto& p = j.at("presentation");
    detail::reject_unknown_keys(p, {"sources", "targets"}, "presentation");
    if (!p.contains("sources") || !p.contains("targets"))
      throw ParseError("presentation requires sources and targets");
    ResolutionPresentation pres;
    for (const auto& s : p.at("sources"))
      pres.sources.push_back(detail::divisor_from_spec(s, X.surface.rank(), "presentation source"));
    for (const auto& t : p.at("targets"))
      pres.targets.push_back(detail::divisor_from_spec(t, X.surface.rank(), "presentation target"));
    X.presentation = std::move(pres);
  }
  try {
    X.validate();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("inconsistent spec file: ") + ex.what());
  }
  return X;
}

inline ScrollSpec scroll_from_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return scroll_from_spec(j);
}

// --- the "a xi + D" bundle-expression grammar --------------------------------
//
//   expr   := term (('+'|'-') term)*
//   term   := [integer] [' '] (label | "xi")
//
// The xi term must appear exactly once; labels are the surface's basis labels
// (h; l1, l2; C0, f; e0..e6; H, C). Examples: "2 xi + H - 2C", "-1 xi",
// "0 xi + 3l1 - 3l2".
inline LineBundleOnX parse_line_bundle(const SurfaceModel& S, const std::string& text) {
  LineBundleOnX out;
  out.D = DivisorClass::zero(S.rank());
  bool xi_seen = false;

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  Int sign = 1;
  bool first = true;
  skip_ws();
  if (i == text.size()) throw ParseError("empty bundle expression");
  while (i < text.size()) {
    if (!first) {
      if (text[i] == '+') {
        sign = 1;
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw ParseError("expected '+' or '-' at \"" + text.substr(i) + "\"");
      }
      skip_ws();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip_ws();
    }
    // optional integer coefficient
    Int coeff = 1;
    bool have_digits = false;
    Int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      have_digits = true;
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    if (have_digits) coeff = value;
    skip_ws();
    // optional '*' separator
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    // label
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
    const std::string label = text.substr(start, i - start);
    if (label.empty()) throw ParseError("expected a basis label or \"xi\" in bundle expression");
    if (label == "xi") {
      if (xi_seen) throw ParseError("the xi term may appear only once");
      xi_seen = true;
      out.a = sign * coeff;
    } else {
      const auto it = std::find(S.basis_labels.begin(), S.basis_labels.end(), label);
      if (it == S.basis_labels.end())
        throw ParseError("unknown basis label \"" + label + "\" (basis: " +
                         [&] {
                           std::string s;
                           for (const auto& l : S.basis_labels) s += (s.empty() ? "" : ", ") + l;
                           return s;
                         }() +
                         ")");
      out.D.c[static_cast<std::size_t>(it - S.basis_labels.begin())] += sign * coeff;
    }
    sign = 1;
    first = false;
    skip_ws();
  }
  if (!xi_seen) throw ParseError("bundle expression must contain a xi term, e.g. \"0 xi + H\"");
  return out;
}

}  // namespace ulrich
