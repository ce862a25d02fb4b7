#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "distft/coeff.hpp"
#include "distft/exact_value.hpp"
#include "distft/rational.hpp"

using distft::DomainError;
using distft::OverflowError;
using distft::PowerMismatchError;
using distft::exact::Coeff;
using distft::exact::ExactValue;
using distft::exact::Rational;

namespace {

Rational rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(-9, 3).to_string() == "-3");
  CHECK(Rational(22, 8).to_string() == "11/4");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic is exact on random inputs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = rnd_rat(rng), b = rnd_rat(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("rational parsing round trip") {
  for (const char* s : {"0", "7", "-7", "3/4", "-45/32", "125/96"}) {
    CHECK(Rational::from_string(s).to_string() == s);
  }
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
  CHECK_THROWS(Rational::from_string("a/b"));
}

TEST_CASE("coeff multiplication rules") {
  // i * i = -1
  CHECK(Coeff::i() * Coeff::i() == Coeff(Rational(-1)));
  // (2) pi^1 * (1/2) pi^(1/2) = pi^(3/2)
  const Coeff a = Coeff::with_pi(Rational(2), 2);
  const Coeff b = Coeff::with_pi(Rational(1, 2), 1);
  CHECK(a * b == Coeff::pi_pow_half(3));
  // radicals: sqrt(2) * sqrt(6) = 2 sqrt(3)
  const Coeff r2 = Coeff::sqrt_of_rational(Rational(2));
  const Coeff r6 = Coeff::sqrt_of_rational(Rational(6));
  CHECK(r2 * r6 == Coeff(Rational(2), Rational(0), 0, 3));
}

TEST_CASE("coeff addition requires matching powers") {
  const Coeff one = Coeff::one();
  const Coeff pi = Coeff::pi_pow_half(2);
  CHECK((Coeff(Rational(1), Rational(1)) + Coeff(Rational(1), Rational(-1))) ==
        Coeff(Rational(2)));
  CHECK_THROWS_AS(one + pi, PowerMismatchError);
  CHECK_THROWS_AS(
      Coeff::sqrt_of_rational(Rational(2)) + Coeff::sqrt_of_rational(Rational(3)),
      PowerMismatchError);
  // zero is the universal identity
  CHECK(Coeff::zero() + pi == pi);
  CHECK(pi + Coeff::zero() == pi);
}

TEST_CASE("unit phases at eighth turns") {
  CHECK(Coeff::cis_eighth(0) == Coeff::one());
  CHECK(Coeff::cis_eighth(2) == Coeff::i());
  CHECK(Coeff::cis_eighth(4) == Coeff(Rational(-1)));
  // e^(i pi/4) = (1+i)/sqrt(2)
  CHECK(Coeff::cis_eighth(1) ==
        Coeff(Rational(1, 2), Rational(1, 2), 0, 2));
  CHECK(Coeff::cis_eighth(1) * Coeff::cis_eighth(1) == Coeff::i());
  CHECK(Coeff::cis_eighth(3) * Coeff::cis_eighth(-3) == Coeff::one());
}

TEST_CASE("gamma at halves and integers") {
  // Gamma(1/2) = sqrt(pi), Gamma(3/2) = sqrt(pi)/2, Gamma(-1/2) = -2 sqrt(pi)
  CHECK(Coeff::gamma_half_integer(Rational(1, 2)) == Coeff::pi_pow_half(1));
  CHECK(Coeff::gamma_half_integer(Rational(3, 2)) ==
        Coeff::with_pi(Rational(1, 2), 1));
  CHECK(Coeff::gamma_half_integer(Rational(-1, 2)) ==
        Coeff::with_pi(Rational(-2), 1));
  CHECK(Coeff::gamma_half_integer(Rational(-3, 2)) ==
        Coeff::with_pi(Rational(4, 3), 1));
  CHECK(Coeff::gamma_half_integer(Rational(5)) == Coeff(Rational(24)));
  CHECK_THROWS_AS(Coeff::gamma_half_integer(Rational(0)), DomainError);
  CHECK_THROWS_AS(Coeff::gamma_half_integer(Rational(-2)), DomainError);
}

TEST_CASE("exact value addition and log factoring") {
  const ExactValue a = ExactValue::log_term(3, Rational(3, 4));
  const ExactValue b = ExactValue::log_term(3, Rational(1, 4));
  CHECK(a + b == ExactValue::log_term(3, Rational(1)));
  CHECK(ExactValue::pi_times(Rational(1, 2)) +
            ExactValue::pi_times(Rational(1, 2)) ==
        ExactValue::pi_times(Rational(1)));
  CHECK((ExactValue::log_term(2, Rational(1)) +
         ExactValue::log_term(2, Rational(-1)))
            .is_zero());
  // ln 9 = 2 ln 3
  CHECK(ExactValue::log_term(9, Rational(1)) ==
        ExactValue::log_term(3, Rational(2)));
  // ln 12 = 2 ln 2 + ln 3
  const ExactValue twelve = ExactValue::log_term(12, Rational(1));
  CHECK(twelve.log_terms().at(2) == Rational(2));
  CHECK(twelve.log_terms().at(3) == Rational(1));
}

TEST_CASE("exact value rendering") {
  CHECK(ExactValue::pi_times(Rational(3, 4)).render() == "3/4*pi");
  const ExactValue v = ExactValue::log_term(5, Rational(125, 96)) +
                       ExactValue::log_term(3, Rational(-45, 32));
  CHECK(v.render() == "-45/32*ln(3) + 125/96*ln(5)");
  CHECK(ExactValue().render() == "0");
  CHECK((ExactValue::from_rational(Rational(1, 2)) +
         ExactValue::pi_times(Rational(-2)))
            .render() == "1/2 - 2*pi");
}

TEST_CASE("render-parse identity on random values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    ExactValue v = ExactValue::from_rational(rnd_rat(rng)) +
                   ExactValue::pi_times(rnd_rat(rng));
    v.add_log(2, rnd_rat(rng));
    v.add_log(3, rnd_rat(rng));
    v.add_log(7, rnd_rat(rng));
    const std::string s = v.render();
    CHECK(ExactValue::parse(s) == v);
    CHECK(ExactValue::parse(s).render() == s);
  }
}

TEST_CASE("exact value addition is associative and commutative") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    ExactValue a = ExactValue::pi_times(rnd_rat(rng));
    a.add_log(2, rnd_rat(rng));
    ExactValue b = ExactValue::from_rational(rnd_rat(rng));
    b.add_log(3, rnd_rat(rng));
    ExactValue c = ExactValue::log_term(5, rnd_rat(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("float evaluation") {
  CHECK(ExactValue::pi_times(Rational(3, 4)).to_double() ==
        doctest::Approx(2.356194490192345).epsilon(1e-15));
  CHECK(ExactValue::log_term(2, Rational(1)).to_double() ==
        doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(ExactValue().to_double() == 0.0);
  ExactValue huge = ExactValue::from_rational(
      Rational(10).pow_int(400));
  CHECK_THROWS_AS(huge.to_double(), OverflowError);
}
