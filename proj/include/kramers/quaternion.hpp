#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <utility>

namespace kramers {

/// Real quaternion a + b*i + c*j + d*k stored as four doubles.
///
/// Multiplication is the Hamilton product (i*j = k, j*k = i, k*i = j,
/// i^2 = j^2 = k^2 = -1) and conj negates the three imaginary coefficients.
/// Every complex scalar embeds as a + b*i, and any quaternion splits uniquely
/// as alpha + beta*j with alpha, beta complex; that split is what the complex
/// 2Nx2N representation of quaternion matrices is built on.
struct Quaternion {
  double a{0.0};
  double b{0.0};
  double c{0.0};
  double d{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {}
  explicit constexpr Quaternion(double real) : a(real) {}
  explicit Quaternion(std::complex<double> alpha) : a(alpha.real()), b(alpha.imag()) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// q = alpha + beta * j.
  static Quaternion from_complex_pair(std::complex<double> alpha,
                                      std::complex<double> beta) {
    return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
  }

  /// alpha in q = alpha + beta * j.
  std::complex<double> alpha() const { return {a, b}; }
  /// beta in q = alpha + beta * j.
  std::complex<double> beta() const { return {c, d}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    a += r.a;
    b += r.b;
    c += r.c;
    d += r.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    a -= r.a;
    b -= r.b;
    c -= r.c;
    d -= r.d;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
    return p += q;
  }
  friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
    return p -= q;
  }
  friend constexpr Quaternion operator-(const Quaternion& q) {
    return {-q.a, -q.b, -q.c, -q.d};
  }
  friend constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

  /// Hamilton product, non-commutative.
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }

  friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
};

/// a - b*i - c*j - d*k; satisfies conj(p*q) = conj(q)*conj(p).
constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

constexpr double abs2(const Quaternion& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

inline double abs(const Quaternion& q) { return std::sqrt(abs2(q)); }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a << (q.b < 0 ? "" : "+") << q.b << "i"
            << (q.c < 0 ? "" : "+") << q.c << "j" << (q.d < 0 ? "" : "+") << q.d
            << "k)";
}

}  // namespace kramers
