#include <bch/quad_ext.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "support/reference.hpp"

using bch::Bicomplex;
using bch::ContextMismatch;
using bch::DegenerateDiscriminant;
using bch::HoradamParams;
using bch::QuadContext;
using bch::QuadExt;
using bch::Rational;

namespace {

const std::vector<HoradamParams> kGrid = {
    HoradamParams::fibonacci(),
    HoradamParams::lucas(),
    HoradamParams::pell(),
    {1, 3, 2, -1},                       // repeated root: p^2 + 4q = 0
    {3, -2, -1, 5},
    {Rational(1, 2), 1, 1, Rational(1, 3)},
};

// (1 + q - q^2 - q^3) + p(1 - q^2) i + (p^2 + 2q)(1 + q) j + p(p^2 + 2q) k,
// the closed form alpha_beta_product is verified against.
Bicomplex<Rational> alpha_beta_closed_form(const Rational& p, const Rational& q) {
  const Rational q2 = q * q;
  const Rational p2q = p * p + Rational(2) * q;
  return {Rational(1) + q - q2 - q2 * q, p * (Rational(1) - q2),
          p2q * (Rational(1) + q), p * p2q};
}

}  // namespace

TEST_CASE("roots of t^2 - pt - q") {
  const auto [alpha, beta] = roots(QuadContext(Rational(1), Rational(1)));
  CHECK(alpha == QuadExt(Rational(1, 2), Rational(1, 2), Rational(5)));
  CHECK(beta == QuadExt(Rational(1, 2), Rational(-1, 2), Rational(5)));

  // Pell: alpha = 1 + sqrt(8)/2 = 1 + sqrt(2), and alpha^2 = 2 alpha + 1
  const auto [pa, pb] = roots(QuadContext(Rational(2), Rational(1)));
  CHECK(pa == QuadExt(Rational(1), Rational(1, 2), Rational(8)));
  CHECK(pa * pa == Rational(2) * pa + QuadExt(1));

  CHECK_THROWS_AS(roots(QuadContext(Rational(0), Rational(0))), DegenerateDiscriminant);
  CHECK_THROWS_AS(roots(QuadContext(Rational(2), Rational(-1))), DegenerateDiscriminant);
}

TEST_CASE("root sum and product are exact for every context") {
  for (const auto& params : kGrid) {
    const QuadContext ctx(params);
    if (ctx.discriminant().is_zero()) continue;
    const auto [alpha, beta] = roots(ctx);
    CHECK(alpha + beta == QuadExt(params.p));
    CHECK(alpha * beta == QuadExt(-params.q));
    CHECK(alpha * alpha == params.p * alpha + QuadExt(params.q));
    CHECK(beta * beta == params.p * beta + QuadExt(params.q));
  }
}

TEST_CASE("extension arithmetic") {
  const auto [alpha, beta] = roots(QuadContext(Rational(1), Rational(1)));
  CHECK(alpha * alpha == QuadExt(Rational(3, 2), Rational(1, 2), Rational(5)));
  CHECK(alpha.conjugate() == beta);
  CHECK((alpha - beta) == QuadExt(Rational(0), Rational(1), Rational(5)));

  // division is exact; (alpha^2 - beta^2)/(alpha - beta) = alpha + beta = p
  CHECK((alpha * alpha - beta * beta) / (alpha - beta) == QuadExt(1));

  CHECK(pow(alpha, 0) == QuadExt(1));
  CHECK(pow(alpha, 3) == alpha * alpha * alpha);
  CHECK(pow(alpha, -1) * alpha == QuadExt(1));
  CHECK(pow(alpha, -4) * pow(alpha, 4) == QuadExt(1));

  CHECK(alpha.field_norm() == Rational(-1));  // u^2 - v^2*delta = -q
  CHECK_THROWS_AS(QuadExt().inverse(), std::domain_error);
}

TEST_CASE("mixed discriminants are rejected, rationals are context-free") {
  const QuadExt sqrt5(Rational(0), Rational(1), Rational(5));
  const QuadExt sqrt8(Rational(0), Rational(1), Rational(8));
  CHECK_THROWS_AS(sqrt5 + sqrt8, ContextMismatch);
  CHECK_THROWS_AS(sqrt5 * sqrt8, ContextMismatch);
  CHECK(QuadExt(Rational(2)) * sqrt5 == QuadExt(Rational(0), Rational(2), Rational(5)));
  CHECK(QuadExt(Rational(2), Rational(0), Rational(8)) + sqrt5 ==
        QuadExt(Rational(2), Rational(1), Rational(5)));
}

TEST_CASE("underlined constants 1 + t i + t^2 j + t^3 k") {
  const QuadContext ctx(Rational(1), Rational(1));
  const auto [alpha, beta] = roots(ctx);
  const auto ua = underline(alpha);
  CHECK(ua.w() == QuadExt(1));
  CHECK(ua.x() == alpha);
  CHECK(ua.y() == alpha + QuadExt(1));                 // alpha^2 = alpha + 1
  CHECK(ua.z() == Rational(2) * alpha + QuadExt(1));   // alpha^3 = 2 alpha + 1

  // underline(beta) is the componentwise conjugate of underline(alpha)
  const auto ub = underline(beta);
  CHECK(ub.w() == ua.w().conjugate());
  CHECK(ub.x() == ua.x().conjugate());
  CHECK(ub.y() == ua.y().conjugate());
  CHECK(ub.z() == ua.z().conjugate());
}

TEST_CASE("alpha_beta_product is rational and matches its closed form") {
  CHECK(alpha_beta_product(QuadContext(Rational(1), Rational(1))) ==
        Bicomplex<Rational>(0, 0, 6, 3));

  // repeated-root context still works (no division by alpha - beta involved)
  CHECK(alpha_beta_product(QuadContext(Rational(2), Rational(-1))) ==
        Bicomplex<Rational>(0, 0, 0, 4));

  for (long pn = -10; pn <= 10; ++pn)
    for (long qn = -10; qn <= 10; ++qn) {
      const Rational p(pn), q(qn);
      REQUIRE(alpha_beta_product(QuadContext(p, q)) == alpha_beta_closed_form(p, q));
    }
}

TEST_CASE("A*B reduces to b^2 - abp - a^2 q") {
  for (const auto& params : kGrid) {
    const QuadContext ctx(params);
    if (ctx.discriminant().is_zero()) continue;
    const auto [alpha, beta] = roots(ctx);
    const QuadExt big_a = QuadExt(params.b) - QuadExt(params.a) * beta;
    const QuadExt big_b = QuadExt(params.b) - QuadExt(params.a) * alpha;
    const QuadExt product = big_a * big_b;
    REQUIRE(product.is_rational());
    REQUIRE(product.u() == params.b * params.b - params.a * params.b * params.p -
                               params.a * params.a * params.q);
  }
}

TEST_CASE("(alpha^r - beta^r)^2 equals (p^2 + 4q) U_r^2") {
  for (const auto& params : kGrid) {
    const QuadContext ctx(params);
    if (ctx.discriminant().is_zero()) continue;
    const auto [alpha, beta] = roots(ctx);
    const auto u_seq = ref::horadam_seq({0, 1, params.p, params.q}, 10);
    for (long r = 0; r <= 10; ++r) {
      const QuadExt diff = pow(alpha, r) - pow(beta, r);
      REQUIRE(diff * diff == QuadExt(ctx.discriminant() * u_seq[r] * u_seq[r]));
    }
  }
}

TEST_CASE("Binet evaluation of BH_n") {
  CHECK(binet_bh(0, HoradamParams::fibonacci()) == Bicomplex<Rational>(0, 1, 1, 2));
  CHECK(binet_bh(1, HoradamParams::lucas()) == Bicomplex<Rational>(1, 3, 4, 7));
  CHECK_THROWS_AS(binet_bh(3, HoradamParams{1, 3, 2, -1}), DegenerateDiscriminant);

  for (const auto& params : kGrid) {
    if (params.discriminant().is_zero()) continue;
    const auto seq = ref::horadam_seq(params, 203);
    for (long n = 0; n <= 200; ++n) {
      REQUIRE(binet_bh(n, params) ==
              Bicomplex<Rational>(seq[n], seq[n + 1], seq[n + 2], seq[n + 3]));
    }
  }
}

TEST_CASE("Binet handles negative discriminants and negative indices") {
  const HoradamParams params{0, 1, 1, -1};  // delta = -3
  const auto seq = ref::horadam_seq(params, 30);
  for (long n = 0; n <= 27; ++n)
    REQUIRE(binet_bh(n, params) ==
            Bicomplex<Rational>(seq[n], seq[n + 1], seq[n + 2], seq[n + 3]));

  // backward window: w_{-1} = 1 for Fibonacci
  CHECK(binet_bh(-1, HoradamParams::fibonacci()) == Bicomplex<Rational>(1, 0, 1, 1));
  CHECK(binet_scalar(-6, HoradamParams::fibonacci()) == Rational(-8));
}

TEST_CASE("scalar Binet agrees with iteration") {
  for (const auto& params : kGrid) {
    if (params.discriminant().is_zero()) continue;
    const auto seq = ref::horadam_seq(params, 60);
    for (long n = 0; n <= 60; ++n) REQUIRE(binet_scalar(n, params) == seq[n]);
  }
}
