#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

using Int = long long;

// Exact rational on Int, always normalized (positive denominator, reduced).
// Magnitudes here stay tiny (Todd denominators 12 and 24, intersection numbers
// in the thousands), so no overflow guards are needed.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor): scalars promote
  Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += Rat(-o.num_, o.den_); }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_, den_;
};

// Floor of sqrt(n) for n >= 0.
inline Int isqrt(Int n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  if (n == 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// Exact halving used wherever Riemann-Roch produces a /2; a failure here
// signals corrupted lattice data and is a hard error.
inline Int exact_half(Int n, const char* what) {
  if (n % 2 != 0) throw std::logic_error(std::string("non-integral value in ") + what);
  return n / 2;
}

inline Int rat_to_int(const Rat& r, const char* what) {
  if (r.denominator() != 1) throw std::logic_error(std::string("non-integral value in ") + what);
  return r.numerator();
}

// Integer roots of A*x^2 + B*x + C = 0 (A may be zero).
inline std::vector<Int> integer_roots(Int A, Int B, Int C) {
  std::vector<Int> roots;
  if (A == 0) {
    if (B == 0) {
      if (C == 0) throw std::invalid_argument("integer_roots: identically zero equation");
      return roots;
    }
    if (C % B == 0) roots.push_back(-C / B);
    return roots;
  }
  Int disc = B * B - 4 * A * C;
  if (disc < 0 || !is_perfect_square(disc)) return roots;
  Int s = isqrt(disc);
  for (Int sign : {+1, -1}) {
    Int num = -B + sign * s;
    if (num % (2 * A) == 0) {
      Int r = num / (2 * A);
      if (roots.empty() || roots.front() != r) roots.push_back(r);
    }
  }
  return roots;
}

}  // namespace ulrich
