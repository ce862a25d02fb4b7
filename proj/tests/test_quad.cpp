#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "distft/quadrature.hpp"
#include "distft/sinc_integrals.hpp"

using namespace distft;
using quad::Range;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sinc quadrature reproduces the classical values") {
  const auto dirichlet = quad::integrate_sinc_power(1, 1, Range::Half, 1e-9);
  CHECK(dirichlet.converged);
  CHECK(dirichlet.value == doctest::Approx(kPi / 2).epsilon(1e-9));

  const auto ln2 = quad::integrate_sinc_power(4, 3, Range::Half, 1e-9);
  CHECK(ln2.value == doctest::Approx(0.6931471805599453).epsilon(1e-8));

  const auto odd = quad::integrate_sinc_power(3, 2, Range::Full, 1e-9);
  CHECK(odd.value == 0.0);
  CHECK(odd.evaluations == 0);

  const auto full33 = quad::integrate_sinc_power(3, 3, Range::Full, 1e-9);
  CHECK(full33.value == doctest::Approx(3.0 * kPi / 4).epsilon(1e-9));
}

TEST_CASE("regularized even-n m=1 values") {
  // int_0^inf sin^2 x / x dx exists only after removing the log divergence;
  // the finite part is (1/2) ln 2
  const auto reg = quad::integrate_sinc_power(2, 1, Range::Half, 1e-9);
  CHECK(reg.value == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-8));
  const auto reg4 = quad::integrate_sinc_power(4, 1, Range::Half, 1e-9);
  CHECK(reg4.value ==
        doctest::Approx(sinc::half_line(4, 1).to_double()).epsilon(1e-8));
}

TEST_CASE("oracle sweep against the closed forms (n <= 8)") {
  for (long n = 1; n <= 8; ++n) {
    for (long m = 1; m <= n; ++m) {
      const double exact_half = sinc::half_line(n, m).to_double();
      const auto got = quad::integrate_sinc_power(n, m, Range::Half, 1e-9);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(std::abs(got.value - exact_half) <= 1e-8);
      const double exact_full = sinc::full_line(n, m).to_double();
      const auto got_full = quad::integrate_sinc_power(n, m, Range::Full, 1e-9);
      CHECK(std::abs(got_full.value - exact_full) <= 1e-8);
    }
  }
}

TEST_CASE("sinc quadrature domain errors") {
  CHECK_THROWS_AS(quad::integrate_sinc_power(2, 3, Range::Half, 1e-9),
                  DomainError);
  CHECK_THROWS_AS(quad::integrate_sinc_power(3, 2, Range::Half, 1e-13),
                  DomainError);
}

TEST_CASE("fermi-dirac sine transform") {
  // beta=1, k=1: 1 - pi/sinh(pi)
  const auto r = quad::fd_sine_transform(1.0, 1.0, 1e-9);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 - kPi / std::sinh(kPi)).epsilon(1e-9));
  // large k: sinh term negligible
  const auto rk = quad::fd_sine_transform(1.0, 50.0, 1e-9);
  CHECK(rk.value == doctest::Approx(0.02).epsilon(1e-4));
  // beta=10, k=1
  const auto rb = quad::fd_sine_transform(10.0, 1.0, 1e-9);
  CHECK(rb.value ==
        doctest::Approx(1.0 - kPi / (10.0 * std::sinh(kPi / 10.0)))
            .epsilon(1e-8));
}

TEST_CASE("bose-einstein sine transform") {
  const auto r = quad::be_sine_transform(1.0, 1.0, 1e-9);
  CHECK(r.value ==
        doctest::Approx(kPi / std::tanh(kPi) - 1.0).epsilon(1e-9));
  // beta = 2 pi, k = 2: (1/2) coth(1) - 1/2
  const auto r2 = quad::be_sine_transform(2.0 * kPi, 2.0, 1e-9);
  CHECK(r2.value ==
        doctest::Approx(0.5 / std::tanh(1.0) - 0.5).epsilon(1e-8));
  // k -> 0: removable pole; the closed form tends to 0 like pi^2 k/3
  const auto r0 = quad::be_sine_transform(1.0, 1e-3, 1e-9);
  CHECK(r0.value ==
        doctest::Approx(kPi / std::tanh(kPi * 1e-3) - 1e3).epsilon(1e-6));
  CHECK(std::abs(r0.value) < 4e-3);
}

TEST_CASE("alternating sum acceleration") {
  // alpha = 1/2: closed form pi - 2
  CHECK(quad::alt_sum_closed(0.5) ==
        doctest::Approx(kPi - 2.0).epsilon(1e-15));
  CHECK(quad::alt_sum(0.5, 10000) ==
        doctest::Approx(kPi - 2.0).epsilon(1e-10));
  // alpha = 3/2: (pi/sin(3 pi/2) - 2/3)/3
  CHECK(quad::alt_sum_closed(1.5) ==
        doctest::Approx((-kPi - 2.0 / 3.0) / 3.0).epsilon(1e-14));
  for (const double a : {0.25, 0.5, 1.5, 2.5})
    CHECK(std::abs(quad::alt_sum(a, 10000) - quad::alt_sum_closed(a)) <= 1e-8);
  CHECK_THROWS_AS(quad::alt_sum_closed(2.0), DomainError);
  CHECK_THROWS_AS(quad::alt_sum(3.0, 100), DomainError);
}

TEST_CASE("partial-fraction route to the csch closed form") {
  const auto v = quad::fd_partial_fraction(1.0, 1.0, 100000);
  CHECK(v.real() == 0.0);
  CHECK(v.imag() == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-6));
  // odd in k
  const auto vm = quad::fd_partial_fraction(1.0, -1.0, 100000);
  CHECK(vm.imag() == doctest::Approx(-v.imag()).epsilon(1e-12));
  // beta=2, k=2: i pi/(2 sinh(pi))
  const auto v2 = quad::fd_partial_fraction(2.0, 2.0, 100000);
  CHECK(v2.imag() ==
        doctest::Approx(kPi / (2.0 * std::sinh(kPi))).epsilon(1e-6));
}

TEST_CASE("riemann-liouville half derivative of the step") {
  const auto r1 = quad::rl_half_derivative(quad::RlFunction::Heaviside, 1.0, 1e-6);
  CHECK(r1.converged);
  CHECK(r1.value == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-6));
  const auto r4 = quad::rl_half_derivative(quad::RlFunction::Heaviside, 4.0, 1e-6);
  CHECK(r4.value == doctest::Approx(0.2820947917738781).epsilon(1e-6));
  const auto rp = quad::rl_half_derivative(quad::RlFunction::Heaviside,
                                           1.0 / kPi, 1e-6);
  CHECK(rp.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(
      quad::rl_half_derivative(quad::RlFunction::Heaviside, -1.0, 1e-6),
      DomainError);
}
