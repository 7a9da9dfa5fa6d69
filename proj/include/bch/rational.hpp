#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bch {

namespace detail {
inline thread_local std::uint64_t rational_mul_count = 0;
}

// Multiplications performed in the coefficient ring on this thread since the
// last reset. Feeds the bench subcommand's operation counts.
inline std::uint64_t rational_mul_count() { return detail::rational_mul_count; }
inline void reset_rational_mul_count() { detail::rational_mul_count = 0; }

/**
 * Exact rational number, always in lowest terms with positive denominator.
 * Zero is 0/1. Arithmetic never rounds. Backed by GMP.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "num" or "num/den" with optional leading sign, e.g. "-3/4".
  static Rational from_string(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // GMP rejects '+'
    const std::string s(text);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s));
      const mpz_class num(s.substr(0, slash));
      const mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("Rational: zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) {
    ++detail::rational_mul_count;
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
  }

  // "num" when the denominator is 1, else "num/den".
  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

// r^e with negative exponents via the reciprocal (requires r != 0).
inline Rational pow(const Rational& r, long e) {
  if (e < 0) return pow(r.reciprocal(), -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));  // already canonical: num/den coprime
}

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace bch
