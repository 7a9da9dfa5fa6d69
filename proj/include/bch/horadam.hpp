#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include <bch/bicomplex.hpp>
#include <bch/errors.hpp>
#include <bch/params.hpp>
#include <bch/quad_ext.hpp>
#include <bch/rational.hpp>

namespace bch {

namespace detail {
inline thread_local std::uint64_t matrix_mul_count = 0;
}

// 2x2 matrix products performed on this thread since the last reset; the
// MatrixPower strategy must stay within 2*ceil(log2 n) + 1 of them per term.
inline std::uint64_t matrix_mul_count() { return detail::matrix_mul_count; }
inline void reset_matrix_mul_count() { detail::matrix_mul_count = 0; }

/**
 * 2x2 companion matrix [[p, q], [1, 0]] of t^2 - pt - q and its powers.
 * M^n = [[U_{n+1}, q*U_n], [U_n, q*U_{n-1}]] where U is the (0, 1; p, q)
 * sequence, and det(M^n) = (-q)^n.
 */
struct CompanionMatrix {
  Rational m00, m01, m10, m11;

  static CompanionMatrix identity() { return {1, 0, 0, 1}; }
  static CompanionMatrix of(const HoradamParams& params) {
    return {params.p, params.q, 1, 0};
  }

  Rational determinant() const { return m00 * m11 - m01 * m10; }

  friend CompanionMatrix operator*(const CompanionMatrix& a, const CompanionMatrix& b) {
    ++detail::matrix_mul_count;
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }

  friend bool operator==(const CompanionMatrix&, const CompanionMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CompanionMatrix& m) {
    return os << "[[" << m.m00 << ", " << m.m01 << "], [" << m.m10 << ", "
              << m.m11 << "]]";
  }
};

// M^n by square-and-multiply.
inline CompanionMatrix matrix_power(const HoradamParams& params, unsigned long n) {
  CompanionMatrix result = CompanionMatrix::identity();
  CompanionMatrix base = CompanionMatrix::of(params);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// Power-series coefficients c_0..c_order of numerator/denominator by formal
// long division: c_n = (num_n - sum_{k>=1} den_k * c_{n-k}) / den_0.
// Coefficient type T needs +, -, and scalar multiplication by Rational.
template <typename T>
std::vector<T> expand_rational_series(const std::vector<T>& numerator,
                                      const std::vector<Rational>& denominator,
                                      std::size_t order) {
  const Rational inv_lead = denominator.at(0).reciprocal();
  std::vector<T> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    T acc = n < numerator.size() ? numerator[n] : T();
    for (std::size_t k = 1; k < denominator.size() && k <= n; ++k)
      acc = acc - denominator[k] * coeffs[n - k];
    coeffs.push_back(inv_lead * acc);
  }
  return coeffs;
}

namespace detail {

// w_n for n < 0 by the backward recurrence w_{t-1} = (w_{t+1} - p*w_t)/q.
inline Rational scalar_term_backward(long n, const HoradamParams& params) {
  if (params.q.is_zero())
    throw NegativeIndexUnsupported("scalar_term: n < 0 needs q != 0");
  const Rational inv_q = params.q.reciprocal();
  Rational lo = params.a;   // w_t
  Rational hi = params.b;   // w_{t+1}
  for (long t = 0; t > n; --t) {
    Rational prev = (hi - params.p * lo) * inv_q;
    hi = lo;
    lo = prev;
  }
  return lo;
}

inline Rational scalar_term_iterative(long n, const HoradamParams& params) {
  if (n == 0) return params.a;
  Rational prev = params.a;
  Rational cur = params.b;
  for (long t = 1; t < n; ++t) {
    Rational next = params.p * cur + params.q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Rational scalar_term_matrix(long n, const HoradamParams& params) {
  const CompanionMatrix m = matrix_power(params, static_cast<unsigned long>(n));
  return params.b * m.m10 + params.a * m.m11;  // b*U_n + a*q*U_{n-1}
}

inline std::vector<Rational> scalar_gf_numerator(const HoradamParams& params) {
  return {params.a, params.b - params.p * params.a};
}

inline std::vector<Rational> gf_denominator(const HoradamParams& params) {
  return {Rational(1), -params.p, -params.q};
}

}  // namespace detail

/**
 * w_n of the (a, b; p, q) recurrence, exactly, under the chosen strategy.
 * Negative n is served by the backward recurrence regardless of strategy and
 * requires q != 0 (NegativeIndexUnsupported otherwise). Binet throws
 * DegenerateDiscriminant when p^2 + 4q = 0.
 */
inline Rational scalar_term(long n, const HoradamParams& params,
                            EvalStrategy strategy = EvalStrategy::Iterative) {
  if (n < 0) return detail::scalar_term_backward(n, params);
  switch (strategy) {
    case EvalStrategy::Iterative:
      return detail::scalar_term_iterative(n, params);
    case EvalStrategy::MatrixPower:
      return detail::scalar_term_matrix(n, params);
    case EvalStrategy::Binet:
      return binet_scalar(n, params);
    case EvalStrategy::GeneratingFunction:
      return expand_rational_series(detail::scalar_gf_numerator(params),
                                    detail::gf_denominator(params),
                                    static_cast<std::size_t>(n))
          .back();
  }
  return detail::scalar_term_iterative(n, params);
}

// (BH_0, BH_1) from the closed formulas; equal to bh_term(0), bh_term(1).
inline std::pair<Bicomplex<Rational>, Bicomplex<Rational>> bh_initial(
    const HoradamParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& p = params.p;
  const Rational& q = params.q;
  const Rational w2 = p * b + q * a;
  const Rational w3 = p * p * b + p * q * a + q * b;
  const Rational w4 = p * p * p * b + p * p * q * a + Rational(2) * p * q * b + q * q * a;
  return {Bicomplex<Rational>(a, b, w2, w3), Bicomplex<Rational>(b, w2, w3, w4)};
}

// Numerator (c0, c1) of g(t) = (BH_0 + (BH_1 - p*BH_0) t) / (1 - pt - qt^2).
inline std::pair<Bicomplex<Rational>, Bicomplex<Rational>> gf_numerator(
    const HoradamParams& params) {
  const auto [bh0, bh1] = bh_initial(params);
  return {bh0, bh1 - params.p * bh0};
}

// First order+1 coefficients of the bicomplex generating function, computed
// by formal long division of the rational function (not by running the term
// recurrence); c_n equals bh_term(n).
inline std::vector<Bicomplex<Rational>> gf_expand(const HoradamParams& params,
                                                  std::size_t order) {
  const auto [n0, n1] = gf_numerator(params);
  return expand_rational_series<Bicomplex<Rational>>(
      {n0, n1}, detail::gf_denominator(params), order);
}

namespace detail {

inline Bicomplex<Rational> bh_from_window(Rational w0, Rational w1,
                                          const HoradamParams& params) {
  const Rational w2 = params.p * w1 + params.q * w0;
  const Rational w3 = params.p * w2 + params.q * w1;
  return {std::move(w0), std::move(w1), w2, w3};
}

}  // namespace detail

/**
 * BH_n = w_n + w_{n+1} i + w_{n+2} j + w_{n+3} k under the chosen strategy.
 * Satisfies BH_{n+2} = p*BH_{n+1} + q*BH_n. Errors as scalar_term.
 */
inline Bicomplex<Rational> bh_term(long n, const HoradamParams& params,
                                   EvalStrategy strategy = EvalStrategy::Iterative) {
  if (n < 0) {
    const Rational w0 = detail::scalar_term_backward(n, params);
    const Rational w1 =
        n + 1 < 0 ? detail::scalar_term_backward(n + 1, params)
                  : detail::scalar_term_iterative(n + 1, params);
    return detail::bh_from_window(w0, w1, params);
  }
  switch (strategy) {
    case EvalStrategy::Iterative: {
      const Rational w0 = detail::scalar_term_iterative(n, params);
      const Rational w1 = detail::scalar_term_iterative(n + 1, params);
      return detail::bh_from_window(w0, w1, params);
    }
    case EvalStrategy::MatrixPower: {
      const CompanionMatrix m = matrix_power(params, static_cast<unsigned long>(n));
      const Rational w0 = params.b * m.m10 + params.a * m.m11;
      const Rational w1 = params.b * m.m00 + params.a * m.m01;
      return detail::bh_from_window(w0, w1, params);
    }
    case EvalStrategy::Binet:
      return binet_bh(n, params);
    case EvalStrategy::GeneratingFunction:
      return gf_expand(params, static_cast<std::size_t>(n)).back();
  }
  return bh_term(n, params, EvalStrategy::Iterative);
}

}  // namespace bch
