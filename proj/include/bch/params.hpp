#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <bch/rational.hpp>

namespace bch {

/**
 * Parameters (a, b; p, q) of the Horadam recurrence
 *   w_0 = a, w_1 = b, w_n = p*w_{n-1} + q*w_{n-2}.
 */
struct HoradamParams {
  Rational a;
  Rational b;
  Rational p;
  Rational q;

  static HoradamParams fibonacci() { return {0, 1, 1, 1}; }
  static HoradamParams lucas() { return {2, 1, 1, 1}; }
  static HoradamParams pell() { return {0, 1, 2, 1}; }

  // p^2 + 4q; zero means a repeated characteristic root.
  Rational discriminant() const { return p * p + Rational(4) * q; }

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

inline std::optional<HoradamParams> preset_by_name(std::string_view name) {
  if (name == "fibonacci") return HoradamParams::fibonacci();
  if (name == "lucas") return HoradamParams::lucas();
  if (name == "pell") return HoradamParams::pell();
  return std::nullopt;
}

// Interchangeable term-evaluation strategies; all agree exactly on their
// common domain (Binet requires a nonzero discriminant).
enum class EvalStrategy { Iterative, MatrixPower, Binet, GeneratingFunction };

inline std::string strategy_name(EvalStrategy s) {
  switch (s) {
    case EvalStrategy::Iterative: return "iterative";
    case EvalStrategy::MatrixPower: return "matrix";
    case EvalStrategy::Binet: return "binet";
    case EvalStrategy::GeneratingFunction: return "gf";
  }
  return "?";
}

inline std::optional<EvalStrategy> strategy_by_name(std::string_view name) {
  if (name == "iterative") return EvalStrategy::Iterative;
  if (name == "matrix") return EvalStrategy::MatrixPower;
  if (name == "binet") return EvalStrategy::Binet;
  if (name == "gf") return EvalStrategy::GeneratingFunction;
  return std::nullopt;
}

}  // namespace bch
