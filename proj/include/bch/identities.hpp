#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <bch/bicomplex.hpp>
#include <bch/errors.hpp>
#include <bch/horadam.hpp>
#include <bch/params.hpp>
#include <bch/quad_ext.hpp>
#include <bch/rational.hpp>

namespace bch {

/**
 * Catalog of closed-form identities for bicomplex Fibonacci/Lucas/Horadam
 * numbers. Every identity is checked by evaluating both sides independently:
 * the left side by recurrence terms plus ring multiplication (Iterative
 * strategy), the right side by its closed form (terms it needs come from the
 * MatrixPower strategy). The two sides never share intermediate values, so a
 * sweep is a genuine cross-check, not a tautology. Closed forms taken from
 * the literature are hypotheses under test: a sweep reports exactly what
 * direct evaluation yields, counterexamples included.
 */
enum class IdentityId {
  BfPlusBl,          // BF_n + BL_n = 2 BF_{n+1}
  BlNeighbors,       // BL_{n-1} + BL_{n+1} = 5 BF_n
  SumOdd,            // sum_{i=1..n} BL_{2i-1} = BL_{2n} - BL_0
  SumAll,            // sum_{i=1..n} BL_i = BL_{n+2} - BL_2
  SumEven,           // sum_{i=1..n} BL_{2i} = BL_{2n+1} - BL_1
  FiveBfSq,          // 5 BF_n^2 - BL_n^2 = 12 (-1)^{n+1} (2j+k)
  SumSq,             // sum_{i=1..n} BL_i^2 = BL_n BL_{n+1} - (5-10i-12j+9k)
  ProductSum,        // BL_n BL_m + BL_{n+1} BL_{m+1} = 5(2 BF_{n+m+1} + ...)
  LucasGf,           // series coeff n of the Lucas generating function = BL_n
  LucasCatalan,      // BL_n^2 - BL_{n+r} BL_{n-r} = 15 (-1)^{n-r} f_r^2 (2j+k)
  LucasCassini,      // BL_n^2 - BL_{n+1} BL_{n-1} = 15 (-1)^{n-1} (2j+k)
  HoradamGf,         // series coeff n of the Horadam generating function = BH_n
  HoradamCatalan,    // BH_n^2 - BH_{n+r} BH_{n-r} = AB ab (-q)^{n-r} U_r^2
  HoradamCassini,    // the r = 1 case of HoradamCatalan
  ScalarLucasLemma,  // k_n k_m + k_{n+1} k_{m+1} = 5 f_{n+m+1}
};

inline constexpr std::array<IdentityId, 15> all_identities{
    IdentityId::BfPlusBl,       IdentityId::BlNeighbors,
    IdentityId::SumOdd,         IdentityId::SumAll,
    IdentityId::SumEven,        IdentityId::FiveBfSq,
    IdentityId::SumSq,          IdentityId::ProductSum,
    IdentityId::LucasGf,        IdentityId::LucasCatalan,
    IdentityId::LucasCassini,   IdentityId::HoradamGf,
    IdentityId::HoradamCatalan, IdentityId::HoradamCassini,
    IdentityId::ScalarLucasLemma,
};

enum class IdentityArity { N, NR, NM };

inline IdentityArity arity(IdentityId id) {
  switch (id) {
    case IdentityId::LucasCatalan:
    case IdentityId::HoradamCatalan:
      return IdentityArity::NR;
    case IdentityId::ProductSum:
    case IdentityId::ScalarLucasLemma:
      return IdentityArity::NM;
    default:
      return IdentityArity::N;
  }
}

inline std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::BfPlusBl: return "bf_plus_bl";
    case IdentityId::BlNeighbors: return "bl_neighbors";
    case IdentityId::SumOdd: return "sum_odd";
    case IdentityId::SumAll: return "sum_all";
    case IdentityId::SumEven: return "sum_even";
    case IdentityId::FiveBfSq: return "five_bf_sq";
    case IdentityId::SumSq: return "sum_sq";
    case IdentityId::ProductSum: return "product_sum";
    case IdentityId::LucasGf: return "lucas_gf";
    case IdentityId::LucasCatalan: return "lucas_catalan_paper";
    case IdentityId::LucasCassini: return "lucas_cassini_paper";
    case IdentityId::HoradamGf: return "horadam_gf";
    case IdentityId::HoradamCatalan: return "horadam_catalan";
    case IdentityId::HoradamCassini: return "horadam_cassini";
    case IdentityId::ScalarLucasLemma: return "scalar_lucas_lemma";
  }
  return "?";
}

inline std::optional<IdentityId> identity_by_name(std::string_view name) {
  for (IdentityId id : all_identities)
    if (identity_name(id) == name) return id;
  if (name == "lucas_catalan") return IdentityId::LucasCatalan;
  if (name == "lucas_cassini") return IdentityId::LucasCassini;
  return std::nullopt;
}

// The Fibonacci/Lucas-specific identities are pinned to the presets
// (0,1;1,1) and (2,1;1,1); sweeping them with other params is refused.
// The Lucas preset is the recorded anchor.
inline std::optional<HoradamParams> pinned_params(IdentityId id) {
  switch (id) {
    case IdentityId::HoradamGf:
    case IdentityId::HoradamCatalan:
    case IdentityId::HoradamCassini:
      return std::nullopt;
    default:
      return HoradamParams::lucas();
  }
}

// Inclusive index bounds of a sweep. second_* is the r range for Catalan
// identities and the m range for the (n, m) identities; unused otherwise.
struct SweepBounds {
  long n_min = 0;
  long n_max = 0;
  long second_min = 0;
  long second_max = 0;
};

inline SweepBounds default_bounds(IdentityId id) {
  switch (id) {
    case IdentityId::ProductSum:
    case IdentityId::ScalarLucasLemma:
      return {0, 30, 0, 30};
    case IdentityId::LucasGf:
    case IdentityId::HoradamGf:
      return {0, 15, 0, 0};
    case IdentityId::LucasCatalan:
      return {1, 100, 1, 5};
    case IdentityId::HoradamCatalan:
      return {0, 60, 0, 5};
    case IdentityId::HoradamCassini:
      return {1, 60, 0, 0};
    default:
      return {1, 100, 0, 0};
  }
}

namespace detail {

inline Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// Smallest legal n (and second index) per identity.
inline long domain_n_min(IdentityId id) {
  switch (id) {
    case IdentityId::BlNeighbors:
    case IdentityId::LucasCassini:
    case IdentityId::HoradamCassini:
    case IdentityId::LucasCatalan:
      return 1;
    default:
      return 0;
  }
}

inline long domain_second_min(IdentityId id) {
  return id == IdentityId::LucasCatalan ? 1 : 0;
}

}  // namespace detail

// AB * (underline(alpha) underline(beta)) * (-q)^{n-r} * U_r^2, the closed
// form of BH_n^2 - BH_{n+r} BH_{n-r}. Uses the exact reduction
// (alpha^r - beta^r)^2 / (p^2 + 4q) = U_r^2 with U the (0, 1; p, q) sequence,
// so the whole evaluation stays rational and works even when p^2 + 4q = 0.
inline Bicomplex<Rational> catalan_rhs(long n, long r, const HoradamParams& params) {
  if (r < 0 || n < r)
    throw IndexOutOfDomain("catalan_rhs: needs n >= r >= 0");
  const Rational ab = params.b * params.b - params.a * params.b * params.p -
                      params.a * params.a * params.q;
  const Rational u_r = scalar_term(r, HoradamParams{0, 1, params.p, params.q},
                                   EvalStrategy::MatrixPower);
  const Rational scale = ab * pow(-params.q, n - r) * u_r * u_r;
  return scale * alpha_beta_product(QuadContext(params));
}

// The literature's stated Catalan right side for bicomplex Lucas numbers,
// 15 (-1)^{n-r} f_r^2 (2j+k), verbatim. The sweep compares it against direct
// evaluation; catalan_rhs at (2,1;1,1) gives the opposite sign, and the
// verifier reports whichever way direct evaluation decides.
inline Bicomplex<Rational> lucas_catalan_paper_rhs(long n, long r) {
  if (r < 1 || n < r)
    throw IndexOutOfDomain("lucas_catalan_paper_rhs: needs n >= r >= 1");
  const Rational f_r = scalar_term(r, HoradamParams::fibonacci(), EvalStrategy::MatrixPower);
  const Rational scale = Rational(15) * detail::sign_pow(n - r) * f_r * f_r;
  return scale * Bicomplex<Rational>(0, 0, 2, 1);
}

// k_n k_m + k_{n+1} k_{m+1} versus 5 f_{n+m+1}, evaluated independently.
inline std::pair<Rational, Rational> scalar_lucas_fib_lemma(long n, long m) {
  if (n < 0 || m < 0)
    throw IndexOutOfDomain("scalar_lucas_fib_lemma: needs n, m >= 0");
  const HoradamParams lucas = HoradamParams::lucas();
  const Rational lhs = scalar_term(n, lucas) * scalar_term(m, lucas) +
                       scalar_term(n + 1, lucas) * scalar_term(m + 1, lucas);
  const Rational rhs =
      Rational(5) * scalar_term(n + m + 1, HoradamParams::fibonacci(),
                                EvalStrategy::MatrixPower);
  return {lhs, rhs};
}

namespace detail {

inline Bicomplex<Rational> bl(long n) {
  return bh_term(n, HoradamParams::lucas(), EvalStrategy::Iterative);
}
inline Bicomplex<Rational> bf(long n) {
  return bh_term(n, HoradamParams::fibonacci(), EvalStrategy::Iterative);
}
// Closed-form (right) sides draw their terms from the MatrixPower strategy
// so the two sides of an identity never share an evaluation path.
inline Bicomplex<Rational> bl_rhs(long n) {
  return bh_term(n, HoradamParams::lucas(), EvalStrategy::MatrixPower);
}
inline Bicomplex<Rational> bf_rhs(long n) {
  return bh_term(n, HoradamParams::fibonacci(), EvalStrategy::MatrixPower);
}
inline Rational fib_rhs(long n) {
  return scalar_term(n, HoradamParams::fibonacci(), EvalStrategy::MatrixPower);
}

}  // namespace detail

/**
 * Both sides of one identity instance, evaluated exactly and independently.
 * `second` is r for the Catalan identities and m for the (n, m) identities;
 * it is ignored for single-index identities. Preset-pinned identities ignore
 * params. Throws IndexOutOfDomain outside the identity's domain.
 */
inline std::pair<Bicomplex<Rational>, Bicomplex<Rational>> evaluate_identity(
    IdentityId id, long n, long second, const HoradamParams& params) {
  using BC = Bicomplex<Rational>;
  if (n < detail::domain_n_min(id))
    throw IndexOutOfDomain("evaluate_identity: n below domain of " + identity_name(id));
  if (arity(id) != IdentityArity::N && second < detail::domain_second_min(id))
    throw IndexOutOfDomain("evaluate_identity: second index below domain of " +
                           identity_name(id));

  switch (id) {
    case IdentityId::BfPlusBl:
      return {detail::bf(n) + detail::bl(n), Rational(2) * detail::bf_rhs(n + 1)};

    case IdentityId::BlNeighbors:
      return {detail::bl(n - 1) + detail::bl(n + 1), Rational(5) * detail::bf_rhs(n)};

    case IdentityId::SumOdd: {
      BC sum;
      for (long i = 1; i <= n; ++i) sum = sum + detail::bl(2 * i - 1);
      return {sum, detail::bl_rhs(2 * n) - detail::bl_rhs(0)};
    }

    case IdentityId::SumAll: {
      BC sum;
      for (long i = 1; i <= n; ++i) sum = sum + detail::bl(i);
      return {sum, detail::bl_rhs(n + 2) - detail::bl_rhs(2)};
    }

    case IdentityId::SumEven: {
      BC sum;
      for (long i = 1; i <= n; ++i) sum = sum + detail::bl(2 * i);
      return {sum, detail::bl_rhs(2 * n + 1) - detail::bl_rhs(1)};
    }

    case IdentityId::FiveBfSq: {
      const BC bf_n = detail::bf(n);
      const BC bl_n = detail::bl(n);
      return {Rational(5) * (bf_n * bf_n) - bl_n * bl_n,
              (Rational(12) * detail::sign_pow(n + 1)) * BC(0, 0, 2, 1)};
    }

    case IdentityId::SumSq: {
      BC sum;
      for (long i = 1; i <= n; ++i) {
        const BC term = detail::bl(i);
        sum = sum + term * term;
      }
      return {sum, detail::bl_rhs(n) * detail::bl_rhs(n + 1) - BC(5, -10, -12, 9)};
    }

    case IdentityId::ProductSum: {
      const long m = second;
      const BC lhs = detail::bl(n) * detail::bl(m) + detail::bl(n + 1) * detail::bl(m + 1);
      const long s = n + m;
      const BC tail(Rational(2) * detail::fib_rhs(s + 4) - detail::fib_rhs(s + 1),
                    Rational(-2) * detail::fib_rhs(s + 6),
                    Rational(-2) * detail::fib_rhs(s + 5),
                    Rational(2) * detail::fib_rhs(s + 4));
      return {lhs, Rational(5) * (Rational(2) * detail::bf_rhs(s + 1) + tail)};
    }

    case IdentityId::LucasGf:
      return {gf_expand(HoradamParams::lucas(), static_cast<std::size_t>(n)).back(),
              detail::bl(n)};

    case IdentityId::HoradamGf:
      return {gf_expand(params, static_cast<std::size_t>(n)).back(),
              bh_term(n, params, EvalStrategy::Iterative)};

    case IdentityId::LucasCatalan: {
      const long r = second;
      if (n < r) throw IndexOutOfDomain("lucas_catalan: needs n >= r");
      const BC bl_n = detail::bl(n);
      return {bl_n * bl_n - detail::bl(n + r) * detail::bl(n - r),
              lucas_catalan_paper_rhs(n, r)};
    }

    case IdentityId::LucasCassini: {
      const BC bl_n = detail::bl(n);
      return {bl_n * bl_n - detail::bl(n + 1) * detail::bl(n - 1),
              (Rational(15) * detail::sign_pow(n - 1)) * BC(0, 0, 2, 1)};
    }

    case IdentityId::HoradamCatalan: {
      const long r = second;
      if (n < r) throw IndexOutOfDomain("horadam_catalan: needs n >= r");
      const BC bh_n = bh_term(n, params, EvalStrategy::Iterative);
      const BC lhs = bh_n * bh_n - bh_term(n + r, params, EvalStrategy::Iterative) *
                                       bh_term(n - r, params, EvalStrategy::Iterative);
      return {lhs, catalan_rhs(n, r, params)};
    }

    case IdentityId::HoradamCassini: {
      const BC bh_n = bh_term(n, params, EvalStrategy::Iterative);
      const BC lhs = bh_n * bh_n - bh_term(n + 1, params, EvalStrategy::Iterative) *
                                       bh_term(n - 1, params, EvalStrategy::Iterative);
      return {lhs, catalan_rhs(n, 1, params)};
    }

    case IdentityId::ScalarLucasLemma: {
      const auto [lhs, rhs] = scalar_lucas_fib_lemma(n, second);
      return {BC(lhs), BC(rhs)};
    }
  }
  throw std::logic_error("evaluate_identity: unknown identity");
}

struct IdentityIndices {
  long n = 0;
  std::optional<long> second;  // r or m, by the identity's arity
};

struct Counterexample {
  IdentityIndices indices;
  Bicomplex<Rational> lhs;
  Bicomplex<Rational> rhs;
  Bicomplex<Rational> difference;  // lhs - rhs
};

/**
 * Outcome of sweeping one identity over an index range. verdict is FAILS iff
 * counterexamples is nonempty; counterexamples are in increasing
 * lexicographic index order (minimal witness first).
 */
struct IdentityReport {
  IdentityId id{};
  HoradamParams params;
  SweepBounds bounds;
  std::vector<Counterexample> counterexamples;

  bool holds() const { return counterexamples.empty(); }
  std::string verdict() const { return holds() ? "HOLDS" : "FAILS"; }
};

/**
 * Evaluates the identity at every index tuple in bounds (skipping tuples
 * outside the identity's domain, e.g. n < r for Catalan sweeps) and collects
 * every counterexample. Deterministic: identical runs yield identical
 * reports. Throws IndexOutOfDomain for malformed bounds and
 * std::invalid_argument when a preset-pinned identity is given other params.
 */
inline IdentityReport sweep_verify(IdentityId id, const HoradamParams& params,
                                   const SweepBounds& bounds) {
  if (const auto pin = pinned_params(id); pin && !(params == *pin))
    throw std::invalid_argument("sweep_verify: " + identity_name(id) +
                                " is preset-pinned; refusing other params");
  if (bounds.n_max < bounds.n_min || bounds.n_min < detail::domain_n_min(id))
    throw IndexOutOfDomain("sweep_verify: malformed n bounds for " + identity_name(id));
  const bool has_second = arity(id) != IdentityArity::N;
  if (has_second && (bounds.second_max < bounds.second_min ||
                     bounds.second_min < detail::domain_second_min(id)))
    throw IndexOutOfDomain("sweep_verify: malformed second bounds for " +
                           identity_name(id));

  IdentityReport report{id, params, bounds, {}};
  for (long n = bounds.n_min; n <= bounds.n_max; ++n) {
    const long s_lo = has_second ? bounds.second_min : 0;
    const long s_hi = has_second ? bounds.second_max : 0;
    for (long s = s_lo; s <= s_hi; ++s) {
      if (arity(id) == IdentityArity::NR && n < s) continue;
      const auto [lhs, rhs] = evaluate_identity(id, n, s, params);
      if (lhs == rhs) continue;
      IdentityIndices idx{n, has_second ? std::optional<long>(s) : std::nullopt};
      report.counterexamples.push_back({idx, lhs, rhs, lhs - rhs});
    }
  }
  return report;
}

}  // namespace bch
