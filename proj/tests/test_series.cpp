#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "distft/trig_series.hpp"

using namespace distft;
using series::Harmonic;
using series::TrigSeries;
using exact::Coeff;
using exact::Rational;

namespace {

TrigSeries single_harmonic(long n, Coeff a, Coeff b) {
  return TrigSeries(Coeff::zero(), {{n, std::move(a), std::move(b)}});
}

}  // namespace

TEST_CASE("built-in sawtooth coefficients") {
  const TrigSeries s = series::builtin_series("sawtooth", 3);
  REQUIRE(s.harmonics().size() == 3);
  CHECK(s.mean().is_zero());
  CHECK(s.harmonics()[0].b == Coeff(Rational(2)));
  CHECK(s.harmonics()[1].b == Coeff(Rational(-1)));
  CHECK(s.harmonics()[2].b == Coeff(Rational(2, 3)));
  for (const auto& h : s.harmonics()) CHECK(h.a.is_zero());

  const TrigSeries one = series::builtin_series("sawtooth", 1);
  REQUIRE(one.harmonics().size() == 1);
  CHECK(one.harmonics()[0].b == Coeff(Rational(2)));
}

TEST_CASE("built-in absx coefficients") {
  const TrigSeries s = series::builtin_series("absx", 2);
  CHECK(s.mean() == Coeff::with_pi(Rational(1, 2), 2));
  REQUIRE(s.harmonics().size() == 2);
  CHECK(s.harmonics()[0].n == 1);
  CHECK(s.harmonics()[0].a == Coeff::with_pi(Rational(-4), -2));
  CHECK(s.harmonics()[1].n == 3);
  CHECK(s.harmonics()[1].a == Coeff::with_pi(Rational(-4, 9), -2));
  CHECK_THROWS_AS(series::builtin_series("square", 2), UnknownNameError);
}

TEST_CASE("half derivative of sin(2x) is cos(2x) + sin(2x)") {
  const TrigSeries s = single_harmonic(2, Coeff::zero(), Coeff::one());
  const TrigSeries d = series::frac_deriv_series(s, Rational(1, 2));
  REQUIRE(d.harmonics().size() == 1);
  CHECK(d.harmonics()[0].a == Coeff::one());
  CHECK(d.harmonics()[0].b == Coeff::one());
}

TEST_CASE("half derivative of the sawtooth matches the closed coefficients") {
  const long order = 30;
  const TrigSeries d = series::frac_deriv_series(
      series::builtin_series("sawtooth", order), Rational(1, 2));
  REQUIRE(d.harmonics().size() == static_cast<std::size_t>(order));
  for (const auto& h : d.harmonics()) {
    // sqrt(2) (-1)^(n-1) / sqrt(n), for both a and b
    Coeff want = Coeff::sqrt_of_rational(Rational(2, h.n));
    if (h.n % 2 == 0) want = -want;
    CHECK(h.a == want);
    CHECK(h.b == want);
  }
}

TEST_CASE("half derivative of absx matches the closed coefficients") {
  const TrigSeries d = series::frac_deriv_series(
      series::builtin_series("absx", 50), Rational(1, 2));
  CHECK(d.mean().is_zero());
  for (const auto& h : d.harmonics()) {
    // a' = -4/(pi sqrt(2) j^(3/2)), b' = +4/(pi sqrt(2) j^(3/2))
    const Coeff mag = Coeff::with_pi(Rational(-4), -2) *
                      Coeff::sqrt_of_rational(Rational(1, 2 * h.n * h.n * h.n));
    CHECK(h.a == mag);
    CHECK(h.b == -mag);
  }
}

TEST_CASE("alpha = 2 is the classical second derivative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<Harmonic> hs;
  for (long n = 1; n <= 8; ++n)
    hs.push_back({n, Coeff(Rational(coeff(rng))), Coeff(Rational(coeff(rng)))});
  const TrigSeries s(Coeff(Rational(3)), std::move(hs));
  const TrigSeries d2 = series::frac_deriv_series(s, Rational(2));
  for (std::size_t i = 0; i < s.harmonics().size(); ++i) {
    const auto& h = s.harmonics()[i];
    if (h.a.is_zero() && h.b.is_zero()) continue;
    const auto& g = d2.harmonics()[i];
    CHECK(g.a == h.a.scaled(Rational(-h.n * h.n)));
    CHECK(g.b == h.b.scaled(Rational(-h.n * h.n)));
  }
}

TEST_CASE("semigroup and rotation pair laws") {
  const Rational half(1, 2);
  for (long n = 1; n <= 10; ++n) {
    const TrigSeries cosn = single_harmonic(n, Coeff::one(), Coeff::zero());
    const TrigSeries sinn = single_harmonic(n, Coeff::zero(), Coeff::one());
    const TrigSeries ddc =
        series::frac_deriv_series(series::frac_deriv_series(cosn, half), half);
    const TrigSeries dds =
        series::frac_deriv_series(series::frac_deriv_series(sinn, half), half);
    CHECK(ddc == single_harmonic(n, Coeff::zero(), Coeff(Rational(-n))));
    CHECK(dds == single_harmonic(n, Coeff(Rational(n)), Coeff::zero()));
  }
  // d^1/2 d^1 = d^3/2 on a mixed series
  const TrigSeries s(Coeff::zero(), {{1, Coeff(Rational(1)), Coeff(Rational(2))},
                                     {4, Coeff(Rational(-3)), Coeff::zero()}});
  CHECK(series::frac_deriv_series(series::frac_deriv_series(s, Rational(1)),
                                  half) ==
        series::frac_deriv_series(s, Rational(3, 2)));
  CHECK(series::frac_deriv_series(s, Rational(0)) == s);
  CHECK_THROWS_AS(series::frac_deriv_series(s, Rational(1, 3)),
                  UnsupportedAlphaError);
}

TEST_CASE("energy of each harmonic scales by n^(2 alpha)") {
  const TrigSeries s(Coeff::zero(), {{3, Coeff(Rational(2, 3)), Coeff(Rational(-1, 2))}});
  const TrigSeries d = series::frac_deriv_series(s, Rational(1, 2));
  const Coeff before = s.harmonics()[0].a * s.harmonics()[0].a +
                       s.harmonics()[0].b * s.harmonics()[0].b;
  const Coeff after = d.harmonics()[0].a * d.harmonics()[0].a +
                      d.harmonics()[0].b * d.harmonics()[0].b;
  CHECK(after == before.scaled(Rational(3)));
}

TEST_CASE("sampling") {
  const double pi = std::numbers::pi;
  // odd function vanishes at 0
  const TrigSeries saw = series::builtin_series("sawtooth", 30);
  CHECK(series::sample_series(saw, std::vector<double>{0.0})[0] == 0.0);
  // partial sums of |x| at 0 shrink with the order
  const TrigSeries ax = series::builtin_series("absx", 100);
  const double at0 = series::sample_series(ax, std::vector<double>{0.0})[0];
  CHECK(std::abs(at0) < 0.013);
  // interior point: |x| at x = 1 within the truncation error
  const double at1 = series::sample_series(ax, std::vector<double>{1.0})[0];
  CHECK(at1 == doctest::Approx(1.0).epsilon(1e-2));
  // sawtooth at pi/2 equals pi/2 well inside the interval
  const double athalf =
      series::sample_series(saw, std::vector<double>{pi / 2})[0];
  CHECK(athalf == doctest::Approx(pi / 2).epsilon(5e-2));
}

TEST_CASE("series csv") {
  std::istringstream in("n,a,b\n0,1/2,0\n1,0,2\n2,0,-1\n");
  const TrigSeries s = series::read_series_csv(in);
  CHECK(s.mean() == Coeff(Rational(1, 2)));
  REQUIRE(s.harmonics().size() == 2);
  CHECK(s.harmonics()[1].b == Coeff(Rational(-1)));

  std::istringstream bad("x,y\n");
  CHECK_THROWS(series::read_series_csv(bad));
  std::istringstream decreasing("n,a,b\n2,1,0\n1,1,0\n");
  CHECK_THROWS_AS(series::read_series_csv(decreasing), DomainError);

  std::ostringstream out;
  const std::vector<double> xs{0.0, 0.5};
  const std::vector<double> ys{1.0, -0.25};
  series::write_sample_csv(out, xs, ys);
  CHECK(out.str() == "x,y\n0,1\n0.5,-0.25\n");
}
