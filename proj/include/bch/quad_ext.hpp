#pragma once

#include <ostream>
#include <string>
#include <utility>

#include <bch/bicomplex.hpp>
#include <bch/errors.hpp>
#include <bch/params.hpp>
#include <bch/rational.hpp>

namespace bch {

/**
 * Exact element u + v*sqrt(delta) of the quadratic extension with
 * discriminant delta. sqrt(delta) stays symbolic: delta may be negative or
 * zero, the arithmetic is formally identical. An element with v = 0 is
 * rational and compatible with any context; combining two elements with
 * nonzero v and different deltas throws ContextMismatch.
 */
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int n) : u_(n) {}
  QuadExt(Rational u) : u_(std::move(u)) {}
  QuadExt(Rational u, Rational v, Rational delta)
      : u_(std::move(u)), v_(std::move(v)), delta_(std::move(delta)) {}

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& delta() const { return delta_; }

  bool is_rational() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  QuadExt conjugate() const { return {u_, -v_, delta_}; }

  // u^2 - v^2*delta; multiplying by the conjugate gives this rational.
  Rational field_norm() const { return u_ * u_ - v_ * v_ * delta_; }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return {a.u_ + b.u_, a.v_ + b.v_, merged_delta(a, b)};
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    return {a.u_ - b.u_, a.v_ - b.v_, merged_delta(a, b)};
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    const Rational delta = merged_delta(a, b);
    return {a.u_ * b.u_ + a.v_ * b.v_ * delta, a.u_ * b.v_ + a.v_ * b.u_, delta};
  }
  QuadExt operator-() const { return {-u_, -v_, delta_}; }

  QuadExt inverse() const {
    const Rational n = field_norm();
    if (n.is_zero()) throw std::domain_error("QuadExt: element is not invertible");
    const Rational inv_n = n.reciprocal();
    return {u_ * inv_n, -v_ * inv_n, delta_};
  }

  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    return a * b.inverse();
  }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.u_ != b.u_ || a.v_ != b.v_) return false;
    return a.v_.is_zero() || a.delta_ == b.delta_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  std::string to_string() const {
    if (is_rational()) return u_.to_string();
    return u_.to_string() + " + " + v_.to_string() + "*sqrt(" + delta_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << x.to_string();
  }

 private:
  static Rational merged_delta(const QuadExt& a, const QuadExt& b) {
    if (!a.v_.is_zero() && !b.v_.is_zero() && a.delta_ != b.delta_)
      throw ContextMismatch("QuadExt: mixed discriminants " + a.delta_.to_string() +
                            " and " + b.delta_.to_string());
    return a.v_.is_zero() ? b.delta_ : a.delta_;
  }

  Rational u_{};
  Rational v_{};
  Rational delta_{};
};

inline QuadExt pow(const QuadExt& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  QuadExt result(1);
  QuadExt base = x;
  auto n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

inline std::string to_string(const QuadExt& x) { return x.to_string(); }

// Coefficients of the characteristic polynomial t^2 - pt - q.
struct QuadContext {
  Rational p;
  Rational q;

  explicit QuadContext(const HoradamParams& params) : p(params.p), q(params.q) {}
  QuadContext(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}

  Rational discriminant() const { return p * p + Rational(4) * q; }
};

namespace detail {
// (p/2 + sqrt(delta)/2, p/2 - sqrt(delta)/2) without the distinctness check;
// their sum p and product -q hold formally even when delta = 0.
inline std::pair<QuadExt, QuadExt> formal_roots(const QuadContext& ctx) {
  const Rational half(1, 2);
  const Rational delta = ctx.discriminant();
  return {QuadExt(ctx.p * half, half, delta), QuadExt(ctx.p * half, -half, delta)};
}
}  // namespace detail

// The two roots (alpha, beta) of t^2 - pt - q; requires distinct roots.
inline std::pair<QuadExt, QuadExt> roots(const QuadContext& ctx) {
  if (ctx.discriminant().is_zero())
    throw DegenerateDiscriminant("roots: p^2 + 4q = 0, repeated root " +
                                 (ctx.p * Rational(1, 2)).to_string());
  return detail::formal_roots(ctx);
}

// 1 + t*i + t^2*j + t^3*k with powers computed exactly in the extension.
inline Bicomplex<QuadExt> underline(const QuadExt& t) {
  const QuadExt t2 = t * t;
  return {QuadExt(1), t, t2, t2 * t};
}

namespace detail {
inline Rational require_rational(const QuadExt& x, const char* where) {
  if (!x.is_rational())
    throw std::logic_error(std::string(where) + ": sqrt part failed to cancel");
  return x.u();
}

inline Bicomplex<Rational> require_rational(const Bicomplex<QuadExt>& b, const char* where) {
  return {require_rational(b.w(), where), require_rational(b.x(), where),
          require_rational(b.y(), where), require_rational(b.z(), where)};
}
}  // namespace detail

// underline(alpha) * underline(beta). The sqrt parts cancel by the
// alpha <-> beta symmetry, so the product is a rational bicomplex; it is
// defined for every context, including delta = 0.
inline Bicomplex<Rational> alpha_beta_product(const QuadContext& ctx) {
  const auto [alpha, beta] = detail::formal_roots(ctx);
  const Bicomplex<QuadExt> product = underline(alpha) * underline(beta);
  return detail::require_rational(product, "alpha_beta_product");
}

// Binet form of the scalar term, (A*alpha^n - B*beta^n)/(alpha - beta) with
// A = b - a*beta, B = b - a*alpha. Exact; requires a nonzero discriminant.
inline Rational binet_scalar(long n, const HoradamParams& params) {
  const QuadContext ctx(params);
  if (n < 0 && params.q.is_zero())
    throw NegativeIndexUnsupported("binet_scalar: n < 0 needs q != 0");
  const auto [alpha, beta] = roots(ctx);
  const QuadExt big_a = QuadExt(params.b) - QuadExt(params.a) * beta;
  const QuadExt big_b = QuadExt(params.b) - QuadExt(params.a) * alpha;
  const QuadExt numerator = big_a * pow(alpha, n) - big_b * pow(beta, n);
  return detail::require_rational(numerator / (alpha - beta), "binet_scalar");
}

// Binet form of the bicomplex term,
//   (A * underline(alpha) * alpha^n - B * underline(beta) * beta^n) / (alpha - beta).
// The sqrt parts of all four components cancel exactly; the result equals the
// iterative term. Throws DegenerateDiscriminant when p^2 + 4q = 0.
inline Bicomplex<Rational> binet_bh(long n, const HoradamParams& params) {
  const QuadContext ctx(params);
  if (n < 0 && params.q.is_zero())
    throw NegativeIndexUnsupported("binet_bh: n < 0 needs q != 0");
  const auto [alpha, beta] = roots(ctx);
  const QuadExt big_a = QuadExt(params.b) - QuadExt(params.a) * beta;
  const QuadExt big_b = QuadExt(params.b) - QuadExt(params.a) * alpha;
  const QuadExt inv_root_diff = (alpha - beta).inverse();
  const Bicomplex<QuadExt> result =
      (underline(alpha) * (big_a * pow(alpha, n) * inv_root_diff)) -
      (underline(beta) * (big_b * pow(beta, n) * inv_root_diff));
  return detail::require_rational(result, "binet_bh");
}

}  // namespace bch
