#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "distft/derivative.hpp"
#include "distft/parser.hpp"
#include "distft/transform.hpp"
#include "distft/verify.hpp"

using namespace distft;
using dist::DistExpr;
using dist::DistTerm;
using dist::Side;
using exact::Coeff;
using exact::Rational;

namespace {

DistExpr xterm(const DistTerm& t, Coeff c = Coeff::one()) {
  return DistExpr::single(Side::X, std::move(c), t);
}

DistExpr theta() { return xterm(DistTerm::one_sided(Rational(0), +1)); }

}  // namespace

TEST_CASE("theta decomposes over {1, sgn} and recombines in rendering") {
  const DistExpr t = theta();
  DistExpr manual(Side::X);
  manual.append(Coeff(Rational(1, 2)), DistTerm::constant());
  manual.append(Coeff(Rational(1, 2)), DistTerm::sgn());
  CHECK(t == manual);
  CHECK(t.render() == "theta");
}

TEST_CASE("transform of the step function") {
  const DistExpr img = dist::ft(theta());
  DistExpr want(Side::K);
  want.append(Coeff::pi_pow_half(2), DistTerm::delta());
  want.append(Coeff::one(), DistTerm::ik_power(Rational(-1)));
  CHECK(img == want);
  CHECK(img.render() == "pi*delta + (ik)^(-1)");
}

TEST_CASE("transform table entries") {
  // x^3 -> -2 pi i delta'''
  const DistExpr x3 = dist::ft(xterm(DistTerm::monomial(3)));
  CHECK(x3 == DistExpr::single(Side::K, Coeff(Rational(0), Rational(-2), 2),
                               DistTerm::delta(3)));
  // 1 -> 2 pi delta
  CHECK(dist::ft(xterm(DistTerm::constant())) ==
        DistExpr::single(Side::K, Coeff::with_pi(Rational(2), 2),
                         DistTerm::delta()));
  // sgn -> 2 (ik)^-1
  CHECK(dist::ft(xterm(DistTerm::sgn())) ==
        DistExpr::single(Side::K, Coeff(Rational(2)),
                         DistTerm::ik_power(Rational(-1))));
  // x^-1 -> -i pi sgn(k)
  CHECK(dist::ft(xterm(DistTerm::neg_power(1))) ==
        DistExpr::single(Side::K, Coeff(Rational(0), Rational(-1), 2),
                         DistTerm::sgn()));
  // x^-2 -> -pi k sgn(k); the table formula pi k^(n-1) sgn(k)/(i^n (n-1)!)
  // at n=2 (the frequently misquoted sign)
  CHECK(dist::ft(xterm(DistTerm::neg_power(2))) ==
        DistExpr::single(Side::K, Coeff::with_pi(Rational(-1), 2),
                         DistTerm::sgn_power(1)));
  // e^(iax) -> 2 pi delta(k-a)
  CHECK(dist::ft(xterm(DistTerm::exp_line(Rational(2)))) ==
        DistExpr::single(Side::K, Coeff::with_pi(Rational(2), 2),
                         DistTerm::delta(0, Rational(2))));
  // x^(n+1/2) on R -> 2 Gamma(n+3/2) (ik)^(-n-3/2); n = 0
  CHECK(dist::ft(xterm(DistTerm::half_power_full(0))) ==
        DistExpr::single(Side::K, Coeff::pi_pow_half(1),
                         DistTerm::ik_power(Rational(-3, 2))));
}

TEST_CASE("derivative consistency forces the negative-power sign") {
  // ft(d/dx x^-1) = ik ft(x^-1) must equal ft(-x^-2)
  const DistExpr d = dist::derivative(xterm(DistTerm::neg_power(1)), 1);
  CHECK(d == xterm(DistTerm::neg_power(2), Coeff(Rational(-1))));
  const DistExpr lhs = dist::ft(d);
  // ik * (-i pi sgn k) = pi k sgn k
  CHECK(lhs == DistExpr::single(Side::K, Coeff::pi_pow_half(2),
                                DistTerm::sgn_power(1)));
}

TEST_CASE("fermi-dirac and bose-einstein images") {
  const DistExpr fd = dist::ft(xterm(DistTerm::fermi_dirac(Rational(1))));
  DistExpr want(Side::K);
  want.append(Coeff::pi_pow_half(2), DistTerm::delta());
  want.append(Coeff(Rational(0), Rational(1), 2), DistTerm::csch_pi(Rational(1)));
  CHECK(fd == want);
  CHECK(fd.render() == "pi*delta + i*pi*csch(pi)");

  const DistExpr be = dist::ft(xterm(DistTerm::bose_einstein(Rational(2))));
  DistExpr want_be(Side::K);
  want_be.append(-Coeff::pi_pow_half(2), DistTerm::delta());
  want_be.append(Coeff(Rational(0), Rational(-1, 2), 2),
                 DistTerm::coth_pi(Rational(1, 2)));
  CHECK(be == want_be);
}

TEST_CASE("inverse transform examples") {
  // 2 pi delta -> 1
  CHECK(dist::ift(DistExpr::single(Side::K, Coeff::with_pi(Rational(2), 2),
                                   DistTerm::delta())) ==
        xterm(DistTerm::constant()));
  // (ik)^(-1/2) -> x^(-1/2) theta(x) / sqrt(pi)
  const DistExpr h = dist::ift(DistExpr::single(
      Side::K, Coeff::one(), DistTerm::ik_power(Rational(-1, 2))));
  CHECK(h == xterm(DistTerm::one_sided(Rational(-1, 2), +1),
                   Coeff::pi_pow_half(-1)));
  // pi delta + (ik)^-1 -> theta
  DistExpr img(Side::K);
  img.append(Coeff::pi_pow_half(2), DistTerm::delta());
  img.append(Coeff::one(), DistTerm::ik_power(Rational(-1)));
  CHECK(dist::ift(img) == theta());
  CHECK(dist::ift(img).render() == "theta");
}

TEST_CASE("round trips termwise") {
  for (const DistTerm& t :
       {DistTerm::constant(), DistTerm::sgn(), DistTerm::delta(2),
        DistTerm::delta(0, Rational(3, 2)), DistTerm::monomial(4),
        DistTerm::sgn_power(2), DistTerm::neg_power(3),
        DistTerm::one_sided(Rational(1, 2), +1),
        DistTerm::one_sided(Rational(-3, 2), +1),
        DistTerm::exp_line(Rational(-2)), DistTerm::fermi_dirac(Rational(3)),
        DistTerm::bose_einstein(Rational(1, 2))}) {
    const DistExpr e = xterm(t, Coeff(Rational(3, 7), Rational(-1, 2)));
    CHECK(dist::ift(dist::ft(e)) == e);
  }
}

TEST_CASE("the two half-power conventions share one image") {
  // x^(1/2) on all of R carries the factor-2 regularization, so its image
  // coincides with that of 2 x^(1/2) theta(x); the inverse table is pinned
  // to the one-sided row.
  const DistExpr full = xterm(DistTerm::half_power_full(0));
  const DistExpr one_sided_twice =
      xterm(DistTerm::one_sided(Rational(1, 2), +1), Coeff(Rational(2)));
  CHECK(dist::ft(full) == dist::ft(one_sided_twice));
  CHECK(dist::ift(dist::ft(full)) == one_sided_twice);
}

TEST_CASE("unsupported forward kinds") {
  CHECK_THROWS_AS(dist::ft(xterm(DistTerm::csch_pi(Rational(1)))),
                  UnsupportedTermError);
  CHECK_THROWS_AS(
      dist::ft(xterm(DistTerm::delta(1, Rational(1)))),
      UnsupportedTermError);
  CHECK_THROWS_AS(dist::ift(DistExpr::single(Side::K, Coeff::one(),
                                             DistTerm::fermi_dirac(Rational(1)))),
                  NonInvertibleError);
}

TEST_CASE("formal derivatives") {
  // d theta / dx = delta
  CHECK(dist::derivative(theta(), 1) == xterm(DistTerm::delta()));
  // d/dx x^(-1/2) theta / sqrt(pi) = -(1/2) x^(-3/2) theta / sqrt(pi)
  const DistExpr hd = xterm(DistTerm::one_sided(Rational(-1, 2), +1),
                            Coeff::pi_pow_half(-1));
  CHECK(dist::derivative(hd, 1) ==
        xterm(DistTerm::one_sided(Rational(-3, 2), +1),
              Coeff::with_pi(Rational(-1, 2), -1)));
  // x^2 twice -> 2, three times -> 0
  CHECK(dist::derivative(xterm(DistTerm::monomial(2)), 2) ==
        xterm(DistTerm::constant(), Coeff(Rational(2))));
  CHECK(dist::derivative(xterm(DistTerm::monomial(2)), 3).is_zero());
  CHECK_THROWS_AS(dist::derivative(xterm(DistTerm::fermi_dirac(Rational(1))), 1),
                  UnsupportedTermError);
  // k-side: d/dk (ik)^-1 = -i (ik)^-2
  const DistExpr ik = DistExpr::single(Side::K, Coeff::one(),
                                       DistTerm::ik_power(Rational(-1)));
  CHECK(dist::derivative(ik, 1) ==
        DistExpr::single(Side::K, Coeff(Rational(0), Rational(-1)),
                         DistTerm::ik_power(Rational(-2))));
}

TEST_CASE("fractional derivative of exponential lines") {
  // d^1/2 e^(ix) = (1+i)/sqrt(2) e^(ix)
  const DistExpr d = dist::frac_derivative(
      xterm(DistTerm::exp_line(Rational(1))), Rational(1, 2));
  CHECK(d == xterm(DistTerm::exp_line(Rational(1)),
                   Coeff(Rational(1, 2), Rational(1, 2), 0, 2)));
  // a = 2: sqrt(2/2)(1+i) = (1+i)
  CHECK(dist::frac_derivative(xterm(DistTerm::exp_line(Rational(2))),
                              Rational(1, 2)) ==
        xterm(DistTerm::exp_line(Rational(2)),
              Coeff(Rational(1), Rational(1))));
  // negative frequency uses the conjugate branch
  CHECK(dist::frac_derivative(xterm(DistTerm::exp_line(Rational(-1))),
                              Rational(1, 2)) ==
        xterm(DistTerm::exp_line(Rational(-1)),
              Coeff(Rational(1, 2), Rational(-1, 2), 0, 2)));
}

TEST_CASE("fractional derivative of theta and delta") {
  const DistExpr ht = dist::frac_derivative(theta(), Rational(1, 2));
  CHECK(ht == xterm(DistTerm::one_sided(Rational(-1, 2), +1),
                    Coeff::pi_pow_half(-1)));
  CHECK(ht.render() == "pi^(-1/2)*x^(-1/2)*theta");

  // d^1/2 delta = -(1/(2 sqrt(pi))) x^(-3/2) theta
  const DistExpr hd =
      dist::frac_derivative(xterm(DistTerm::delta()), Rational(1, 2));
  CHECK(hd == xterm(DistTerm::one_sided(Rational(-3, 2), +1),
                    Coeff::with_pi(Rational(-1, 2), -1)));
  // and it agrees with d/dx of d^1/2 theta
  CHECK(hd == dist::derivative(ht, 1));
}

TEST_CASE("fractional derivative annihilates constants") {
  const DistExpr c = xterm(DistTerm::constant(), Coeff(Rational(5)));
  for (const Rational a : {Rational(1, 2), Rational(3, 2), Rational(5, 2)})
    CHECK(dist::frac_derivative(c, a).is_zero());
  CHECK(dist::frac_derivative(c, Rational(0)) == c);
}

TEST_CASE("semigroup of half derivatives") {
  for (const DistExpr& e :
       {theta(), xterm(DistTerm::exp_line(Rational(2))),
        xterm(DistTerm::constant(), Coeff(Rational(3))),
        xterm(DistTerm::delta())}) {
    CHECK(dist::frac_derivative(dist::frac_derivative(e, Rational(1, 2)),
                                Rational(1, 2)) == dist::derivative(e, 1));
  }
  // 3/2-order route: d^(3/2) theta = d(d^(1/2) theta)
  CHECK(dist::frac_derivative(theta(), Rational(3, 2)) ==
        dist::derivative(dist::frac_derivative(theta(), Rational(1, 2)), 1));
}

TEST_CASE("integer fractional orders delegate to the classical rules") {
  for (long n = 1; n <= 6; ++n) {
    for (long m = 1; m <= n; ++m) {
      const DistExpr d =
          dist::frac_derivative(xterm(DistTerm::monomial(n)), Rational(m));
      const Rational want(exact::factorial(n), exact::factorial(n - m));
      DistExpr expect(Side::X);
      expect.append(Coeff(want), n == m ? DistTerm::constant()
                                        : DistTerm::monomial(n - m));
      CHECK(d == expect);
    }
  }
}

TEST_CASE("fractional operand errors") {
  CHECK_THROWS_AS(dist::frac_derivative(xterm(DistTerm::monomial(2)),
                                        Rational(1, 2)),
                  FractionalOperandError);
  CHECK_THROWS_AS(dist::frac_derivative(xterm(DistTerm::fermi_dirac(Rational(1))),
                                        Rational(1, 2)),
                  FractionalOperandError);
  CHECK_THROWS_AS(dist::frac_derivative(theta(), Rational(1, 3)),
                  UnsupportedAlphaError);
}

TEST_CASE("operations check the domain tag") {
  const DistExpr k_side =
      DistExpr::single(Side::K, Coeff::one(), DistTerm::delta());
  CHECK_THROWS_AS(dist::ft(k_side), DomainError);
  CHECK_THROWS_AS(dist::ift(theta()), DomainError);
  CHECK_THROWS_AS(dist::frac_derivative(k_side, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(dist::derivative(theta(), 0), DomainError);
  CHECK_THROWS_AS(theta() + k_side, DomainError);
}

TEST_CASE("pointwise evaluation") {
  // theta at 3 -> 1; at -2 -> 0
  CHECK(theta().eval(3.0).real() == 1.0);
  CHECK(theta().eval(-2.0).real() == 0.0);
  // x^-2 at 2 -> 0.25
  CHECK(xterm(DistTerm::neg_power(2)).eval(2.0).real() ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(xterm(DistTerm::neg_power(2)).eval(0.0),
                  SingularPointError);

  // pi delta + i pi csch(pi k) at k = 1 -> i pi / sinh(pi)
  const DistExpr img = dist::ft(xterm(DistTerm::fermi_dirac(Rational(1))));
  const auto v = img.eval(1.0, true);
  CHECK(v.real() == 0.0);
  CHECK(v.imag() == doctest::Approx(0.2720290549821331).epsilon(1e-12));

  // delta at its support: skipped or singular
  const DistExpr d = xterm(DistTerm::delta());
  CHECK(d.eval(0.0, true) == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(d.eval(0.0, false), SingularPointError);
}

TEST_CASE("zero-temperature trend of the fermi-dirac image") {
  const DistExpr theta_minus =
      xterm(DistTerm::one_sided(Rational(0), -1));
  double prev = 1e9;
  double mag = 0;
  for (const long beta : {1L, 10L, 100L}) {
    const DistExpr diff =
        dist::ft(xterm(DistTerm::fermi_dirac(Rational(beta)))) -
        dist::ft(theta_minus);
    mag = std::abs(diff.eval(1.0, true));
    CHECK(mag < prev);
    prev = mag;
  }
  CHECK(mag < 1e-3);
}

TEST_CASE("randomized round-trip and linearity suites") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const DistExpr e = verify::random_invertible_expr(rng);
    CHECK(dist::ift(dist::ft(e)) == e);
  }
  for (int i = 0; i < 300; ++i) {
    const DistExpr e1 = verify::random_invertible_expr(rng);
    const DistExpr e2 = verify::random_invertible_expr(rng);
    const Coeff a(Rational(2, 3), Rational(-1));
    const Coeff b(Rational(0), Rational(5, 4));
    CHECK(dist::ft(e1.scaled(a) + e2.scaled(b)) ==
          dist::ft(e1).scaled(a) + dist::ft(e2).scaled(b));
  }
}
