#pragma once

#include "delzant/rational.hpp"

#include <stdexcept>
#include <utility>

namespace delzant {

struct LatticeVector {
  Int x{0};
  Int y{0};

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  LatticeVector operator-() const { return {-x, -y}; }
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticeVector operator*(const Int& k, const LatticeVector& v) {
    return {k * v.x, k * v.y};
  }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Int det(const LatticeVector& u, const LatticeVector& v) {
  return u.x * v.y - u.y * v.x;
}

/// Point of the moment plane, with exact rational coordinates.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Point operator+(const Point& p, const std::pair<Rational, LatticeVector>& step) {
  return {p.x + step.first * Rational(step.second.x), p.y + step.first * Rational(step.second.y)};
}

inline Rational dot(const Point& p, const LatticeVector& v) {
  return p.x * Rational(v.x) + p.y * Rational(v.y);
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.x + a.y * b.y;
}

/// Splits v as g * p with p primitive. The sign of the first nonzero
/// coordinate of v is preserved in p.
inline std::pair<LatticeVector, Int> primitive(const LatticeVector& v) {
  if (v.is_zero()) throw std::domain_error("zero vector has no primitive direction");
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(v.x),
                                     boost::multiprecision::abs(v.y));
  return {{v.x / g, v.y / g}, g};
}

inline bool is_primitive(const LatticeVector& v) {
  return !v.is_zero() && primitive(v).second == 1;
}

/// Rational length of the segment from a to b: the largest lambda > 0
/// such that (b - a) / lambda is a lattice vector.
inline Rational rational_length(const Point& a, const Point& b) {
  if (a == b) throw std::domain_error("segment endpoints coincide");
  Point d = b - a;
  Int L = boost::multiprecision::lcm(d.x.denominator(), d.y.denominator());
  LatticeVector w{d.x.numerator() * (L / d.x.denominator()),
                  d.y.numerator() * (L / d.y.denominator())};
  return Rational(primitive(w).second, L);
}

/// Primitive direction of the segment from a to b.
inline LatticeVector direction(const Point& a, const Point& b) {
  Point d = b - a;
  Int L = boost::multiprecision::lcm(d.x.denominator(), d.y.denominator());
  LatticeVector w{d.x.numerator() * (L / d.x.denominator()),
                  d.y.numerator() * (L / d.y.denominator())};
  return primitive(w).first;
}

/// x |-> Ax + b with A an integer matrix of determinant +-1.
struct UnimodularAffineMap {
  Int a{1}, b{0}, c{0}, d{1};  // matrix rows (a b; c d)
  Rational tx, ty;

  UnimodularAffineMap() = default;
  UnimodularAffineMap(Int a_, Int b_, Int c_, Int d_, Rational tx_ = 0, Rational ty_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
        tx(std::move(tx_)), ty(std::move(ty_)) {
    Int dt = det();
    if (dt != 1 && dt != -1) throw std::domain_error("matrix is not unimodular");
  }

  Int det() const { return a * d - b * c; }

  Point apply(const Point& p) const {
    return {Rational(a) * p.x + Rational(b) * p.y + tx,
            Rational(c) * p.x + Rational(d) * p.y + ty};
  }
  LatticeVector apply(const LatticeVector& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }

  UnimodularAffineMap compose(const UnimodularAffineMap& inner) const {
    UnimodularAffineMap m;
    m.a = a * inner.a + b * inner.c;
    m.b = a * inner.b + b * inner.d;
    m.c = c * inner.a + d * inner.c;
    m.d = c * inner.b + d * inner.d;
    Point t = apply({inner.tx, inner.ty});
    m.tx = t.x;
    m.ty = t.y;
    return m;
  }
};

}  // namespace delzant
