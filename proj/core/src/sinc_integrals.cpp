#include "distft/sinc_integrals.hpp"

#include "distft/coeff.hpp"
#include "distft/errors.hpp"

namespace distft::sinc {

namespace {

using exact::binomial;
using exact::Coeff;
using exact::factorial;

void check_domain(long n, long m) {
  if (m < 1 || n < m)
    throw DomainError("sinc integral requires n >= m >= 1");
}

mpz_class pow2(long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

mpz_class ipow(long base, long e) {
  mpz_class r;
  mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Extracts the rational pi coefficient from a Coeff that must be a pure
// rational multiple of pi; the simplified i powers must leave no
// imaginary part.
Rational pi_part(const Coeff& c) {
  if (!c.im().is_zero())
    throw Error("sinc closed form produced an imaginary residue");
  if (c.is_zero()) return Rational(0);
  if (c.pi_half_power() != 2 || c.root() != 1)
    throw Error("sinc closed form left the rational-pi span");
  return c.re();
}

}  // namespace

ExactValue full_line(long n, long m) {
  check_domain(n, m);
  mpz_class sum(0);
  for (long l = 0; l <= n; ++l) {
    const long d = 2 * l - n;
    if (d == 0) continue;  // sgn(0) kills the center term
    mpz_class term = binomial(n, l) * ipow(std::abs(d), m - 1);
    // (2l-n)^(m-1) sgn(2l-n) = sgn(d)^m |d|^(m-1)
    bool neg = l % 2 != 0;
    if (d < 0 && m % 2 != 0) neg = !neg;
    if (neg) term = -term;
    sum += term;
  }
  const Coeff c = Coeff::with_pi(Rational(sum, pow2(n) * factorial(m - 1)), 2)
                      .times_i_pow(-(n + m));
  return ExactValue::pi_times(pi_part(c));
}

ExactValue full_line_diag(long n) {
  if (n < 1) throw DomainError("diagonal form requires n >= 1");
  mpz_class sum(0);
  for (long l = 0; 2 * l <= n; ++l) {
    mpz_class term = binomial(n, l) * ipow(n - 2 * l, n - 1);
    if (l % 2 != 0) term = -term;
    sum += term;
  }
  return ExactValue::pi_times(
      Rational(sum, pow2(n - 1) * factorial(n - 1)));
}

ExactValue half_line(long n, long m) {
  check_domain(n, m);
  const mpz_class denom = pow2(n) * factorial(m - 1);

  if ((n - m) % 2 == 0) {
    // -i^(m-n)/(2^n (m-1)!) * (pi/2) * sum' (-1)^l C(n,l)(n-2l)^(m-1) sgn(2l-n)
    mpz_class sum(0);
    for (long l = 0; l <= n; ++l) {
      const long d = n - 2 * l;
      if (d == 0) continue;  // omitted center term
      mpz_class term = binomial(n, l) * ipow(d, m - 1);
      if (d > 0) term = -term;  // sgn(2l-n) = -sgn(d)
      if (l % 2 != 0) term = -term;
      sum += term;
    }
    const Coeff c = Coeff::with_pi(Rational(sum, denom * 2), 2)
                        .times_i_pow(m - n)
                        .scaled(Rational(-1));
    return ExactValue::pi_times(pi_part(c));
  }

  // i^(m-n+1)/(2^n (m-1)!) * sum' (-1)^l C(n,l)(n-2l)^(m-1) ln|2l-n|
  const long e = m - n + 1;  // even
  const int front = (((e / 2) % 2) == 0) ? 1 : -1;
  ExactValue out;
  for (long l = 0; l <= n; ++l) {
    const long d = n - 2 * l;
    if (d == 0) continue;
    const std::uint64_t arg = static_cast<std::uint64_t>(std::abs(d));
    if (arg == 1) continue;  // ln 1 contributes nothing
    mpz_class w = binomial(n, l) * ipow(d, m - 1);
    if (l % 2 != 0) w = -w;
    if (front < 0) w = -w;
    out.add_log(arg, Rational(w, denom));
  }
  return out;
}

Rational antideriv_coeff_A(long m) {
  if (m < 1) throw DomainError("antiderivative coefficient needs m >= 1");
  Rational a(1);
  for (long j = 1; j < m; ++j) a = a / Rational(j);
  return a;
}

}  // namespace distft::sinc
