#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ulrich/numeric.hpp"

namespace ulrich {

// Integer coefficient vector in a fixed lattice basis.
struct DivisorClass {
  std::vector<Int> c;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> coeffs) : c(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<Int> coeffs) : c(coeffs) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Int>(rank, 0)); }

  std::size_t rank() const { return c.size(); }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("divisor rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("divisor rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend DivisorClass operator*(Int s, DivisorClass a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c < b.c; }
};

}  // namespace ulrich
