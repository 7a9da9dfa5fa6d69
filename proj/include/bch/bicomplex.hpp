#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

#include <bch/rational.hpp>

namespace bch {

// Complex pair over an exact ring R, with i^2 = -1. Used as the coordinate
// type of the idempotent decomposition.
template <typename R>
struct Complex {
  R re{};
  R im{};

  Complex() = default;
  Complex(R real, R imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == R(0) && im == R(0); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex operator-() const { return {-re, -im}; }
  friend bool operator==(const Complex& a, const Complex& b) = default;
};

enum class Axis { I, J, K };

/**
 * Bicomplex number w + x*i + y*j + z*k over an exact commutative ring R.
 *
 * Basis products: i*i = j*j = -1, k*k = +1, ij = ji = k, ik = ki = -j,
 * jk = kj = -i. The algebra is commutative and has zero divisors, e.g.
 * (i+j)(i-j) = 0, and non-trivial idempotents, e.g. ((1+k)/2)^2 = (1+k)/2.
 *
 * Values are immutable; every operation is a pure function of its inputs.
 */
template <typename R>
class Bicomplex {
 public:
  Bicomplex() = default;
  Bicomplex(R w) : w_(std::move(w)) {}
  Bicomplex(R w, R x, R y, R z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  const R& w() const { return w_; }  // unit coefficient
  const R& x() const { return x_; }  // i coefficient
  const R& y() const { return y_; }  // j coefficient
  const R& z() const { return z_; }  // k coefficient

  bool is_zero() const {
    return w_ == R(0) && x_ == R(0) && y_ == R(0) && z_ == R(0);
  }

  friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }
  friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }
  Bicomplex operator-() const { return {-w_, -x_, -y_, -z_}; }

  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ + a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ - a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ + a.y_ * b.w_ - a.x_ * b.z_ - a.z_ * b.x_,
            a.w_ * b.z_ + a.z_ * b.w_ + a.x_ * b.y_ + a.y_ * b.x_};
  }

  // Scalar multiply by a ring element.
  friend Bicomplex operator*(const R& s, const Bicomplex& b) {
    return {s * b.w_, s * b.x_, s * b.y_, s * b.z_};
  }
  friend Bicomplex operator*(const Bicomplex& b, const R& s) { return s * b; }

  friend bool operator==(const Bicomplex& a, const Bicomplex& b) = default;

 private:
  R w_{};
  R x_{};
  R y_{};
  R z_{};
};

// Involution along one imaginary axis: axis i negates x and z, axis j
// negates y and z, axis k negates x and y. Each is a ring automorphism.
template <typename R>
Bicomplex<R> conjugate(const Bicomplex<R>& b, Axis axis) {
  switch (axis) {
    case Axis::I: return {b.w(), -b.x(), b.y(), -b.z()};
    case Axis::J: return {b.w(), b.x(), -b.y(), -b.z()};
    case Axis::K: return {b.w(), -b.x(), -b.y(), b.z()};
  }
  return b;  // unreachable
}

// N_axis(b) = b * conjugate(b, axis). These norms are isotropic (they vanish
// on some nonzero elements, e.g. N_i(1+k) = 0) and generally non-real:
//   N_i lands in span{1, j}, N_j in span{1, i}, N_k in span{1, k}.
template <typename R>
Bicomplex<R> norm(const Bicomplex<R>& b, Axis axis) {
  return b * conjugate(b, axis);
}

// Coordinates of b in the idempotent basis e = (1+k)/2, e' = (1-k)/2:
// writing b = z1 + z2*j with z1 = w + x*i and z2 = y + z*i, returns
// (c1, c2) = (z1 - z2*i, z1 + z2*i) so that b = c1*e + c2*e'.
// Multiplication factors componentwise through this basis.
template <typename R>
std::pair<Complex<R>, Complex<R>> idempotent_decompose(const Bicomplex<R>& b) {
  return {Complex<R>(b.w() + b.z(), b.x() - b.y()),
          Complex<R>(b.w() - b.z(), b.x() + b.y())};
}

// Inverse of idempotent_decompose; needs 2 invertible in R.
template <typename R>
Bicomplex<R> idempotent_recompose(const Complex<R>& c1, const Complex<R>& c2) {
  const R half = R(1) / R(2);
  return {(c1.re + c2.re) * half, (c1.im + c2.im) * half,
          (c2.im - c1.im) * half, (c1.re - c2.re) * half};
}

// True iff b != 0 and exactly one idempotent component vanishes; those are
// precisely the annihilators of nonzero elements when R is an integral
// domain.
template <typename R>
bool is_zero_divisor(const Bicomplex<R>& b) {
  if (b.is_zero()) return false;
  const auto [c1, c2] = idempotent_decompose(b);
  return c1.is_zero() != c2.is_zero();
}

// b^n by square-and-multiply; pow(b, 0) = 1.
template <typename R>
Bicomplex<R> pow(Bicomplex<R> base, unsigned long n) {
  Bicomplex<R> result(R(1));
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// Canonical textual form over rationals: "w + x*i + y*j + z*k", all four
// components always printed, display order 1, i, j, k.
inline std::string to_string(const Bicomplex<Rational>& b) {
  std::string out = b.w().to_string();
  const std::pair<const Rational*, const char*> rest[] = {
      {&b.x(), "i"}, {&b.y(), "j"}, {&b.z(), "k"}};
  for (const auto& [coeff, sym] : rest) {
    if (coeff->sign() < 0) {
      out += " - " + (-*coeff).to_string();
    } else {
      out += " + " + coeff->to_string();
    }
    out += "*";
    out += sym;
  }
  return out;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Bicomplex<R>& b) {
  return os << "(" << b.w() << ") + (" << b.x() << ")*i + (" << b.y()
            << ")*j + (" << b.z() << ")*k";
}

inline std::ostream& operator<<(std::ostream& os, const Bicomplex<Rational>& b) {
  return os << to_string(b);
}

}  // namespace bch
