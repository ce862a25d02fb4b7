#include "distft/coeff.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace distft::exact {

namespace {

// sqrt(v) = extracted * sqrt(squarefree)
void extract_square(std::uint64_t v, mpz_class& extracted,
                    std::uint64_t& squarefree) {
  extracted = 1;
  squarefree = 1;
  for (const auto& [p, e] : factor_u64(v)) {
    for (int k = 0; k < e / 2; ++k) extracted *= static_cast<unsigned long>(p);
    if (e % 2) squarefree *= p;
  }
}

}  // namespace

Coeff::Coeff(Rational re, Rational im, int pi_half_power, std::uint64_t root)
    : re_(std::move(re)), im_(std::move(im)), pi2_(pi_half_power) {
  if (root == 0) throw DomainError("radical part must be positive");
  if (root != 1) {
    mpz_class sq;
    extract_square(root, sq, root_);
    if (sq != 1) {
      const Rational f((sq));
      re_ *= f;
      im_ *= f;
    }
  }
  normalize();
}

void Coeff::normalize() {
  if (re_.is_zero() && im_.is_zero()) {
    pi2_ = 0;
    root_ = 1;
  }
}

Coeff Coeff::sqrt_of_rational(const Rational& a) {
  if (a.sign() <= 0) throw DomainError("sqrt of non-positive rational");
  // sqrt(p/q) = sqrt(p*q)/q
  const mpz_class v = a.num() * a.den();
  if (!v.fits_ulong_p())
    throw DomainError("radicand too large for exact square root bookkeeping");
  return Coeff(Rational(mpz_class(1), a.den()), Rational(0), 0, v.get_ui());
}

Coeff Coeff::rational_pow_half_int(const Rational& a, long p) {
  if (a.sign() <= 0) throw DomainError("fractional power of non-positive base");
  // a^(p/2) = a^(p div 2) * (p odd ? sqrt(a) : 1), with floor division
  // so odd p always leaves a single +1/2 power.
  const long h = (p >= 0) ? p / 2 : (p - 1) / 2;
  Coeff out(a.pow_int(h));
  if (p % 2 != 0) out = out * sqrt_of_rational(a);
  return out;
}

Coeff Coeff::cis_eighth(long j) {
  j %= 8;
  if (j < 0) j += 8;
  static const int re8[8] = {2, 1, 0, -1, -2, -1, 0, 1};
  static const int im8[8] = {0, 1, 2, 1, 0, -1, -2, -1};
  // even multiples of pi/4 are Gaussian units, odd ones carry 1/sqrt(2)
  if (j % 2 == 0)
    return Coeff(Rational(re8[j] / 2), Rational(im8[j] / 2));
  return Coeff(Rational(re8[j], 2), Rational(im8[j], 2), 0, 2);
}

Coeff Coeff::gamma_int_plus_half(long n) {
  // Gamma(n + 1/2): (2n)!/(4^n n!) sqrt(pi) for n >= 0,
  // (-4)^j j!/(2j)! sqrt(pi) for n = -j < 0. Never a pole.
  if (n >= 0) {
    const auto un = static_cast<unsigned long>(n);
    const Rational q(factorial(2 * un),
                     Rational(4).pow_int(n).num() * factorial(un));
    return with_pi(q, 1);
  }
  const auto j = static_cast<unsigned long>(-n);
  mpz_class num = factorial(j);
  mpz_class four_j;
  mpz_ui_pow_ui(four_j.get_mpz_t(), 4, j);
  num *= four_j;
  if (j % 2) num = -num;
  return with_pi(Rational(num, factorial(2 * j)), 1);
}

Coeff Coeff::gamma_half_integer(const Rational& q) {
  if (q.is_integer()) {
    const long n = q.to_long();
    if (n <= 0) throw DomainError("Gamma pole at non-positive integer");
    return Coeff(Rational(factorial(static_cast<unsigned long>(n - 1))));
  }
  if (q.den() != 2) throw DomainError("Gamma only at halves and integers");
  // q = n + 1/2  =>  n = floor(q)
  const mpz_class n = q.floor();
  if (!n.fits_slong_p()) throw DomainError("Gamma argument out of range");
  return gamma_int_plus_half(n.get_si());
}

Coeff Coeff::operator-() const {
  Coeff c = *this;
  c.re_ = -c.re_;
  c.im_ = -c.im_;
  return c;
}

Coeff Coeff::conj() const {
  Coeff c = *this;
  c.im_ = -c.im_;
  return c;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  // 1/((a+bi) pi^(h/2) sqrt(s)) = (a-bi)/(a^2+b^2) * pi^(-h/2) * sqrt(s)/s
  const Rational n2 = re_ * re_ + im_ * im_;
  Coeff out(re_ / n2, -(im_ / n2), -pi2_, root_);
  if (root_ != 1) out = out.scaled(Rational(1, static_cast<long>(root_)));
  return out;
}

Coeff Coeff::times_i_pow(long n) const {
  n %= 4;
  if (n < 0) n += 4;
  Coeff c = *this;
  switch (n) {
    case 0: break;
    case 1: {
      Rational r = c.re_;
      c.re_ = -c.im_;
      c.im_ = r;
      break;
    }
    case 2:
      c.re_ = -c.re_;
      c.im_ = -c.im_;
      break;
    default: {
      Rational r = c.re_;
      c.re_ = c.im_;
      c.im_ = -r;
      break;
    }
  }
  c.normalize();
  return c;
}

Coeff Coeff::scaled(const Rational& q) const {
  Coeff c = *this;
  c.re_ *= q;
  c.im_ *= q;
  c.normalize();
  return c;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Rational re = a.re_ * b.re_ - a.im_ * b.im_;
  Rational im = a.re_ * b.im_ + a.im_ * b.re_;
  // sqrt(s)*sqrt(t) = gcd * sqrt(s t / gcd^2), both squarefree
  const std::uint64_t g = std::gcd(a.root_, b.root_);
  const std::uint64_t root = (a.root_ / g) * (b.root_ / g);
  if (g != 1) {
    const Rational f(static_cast<long>(g));
    re *= f;
    im *= f;
  }
  return Coeff(std::move(re), std::move(im), a.pi2_ + b.pi2_, root);
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi2_ != b.pi2_)
    throw PowerMismatchError("cannot add scalars with unlike pi powers");
  if (a.root_ != b.root_)
    throw PowerMismatchError("cannot add scalars with unlike radical parts");
  return Coeff(a.re_ + b.re_, a.im_ + b.im_, a.pi2_, a.root_);
}

std::complex<double> Coeff::to_complex() const {
  const long double scale =
      std::pow(std::numbers::pi_v<long double>,
               static_cast<long double>(pi2_) / 2.0L) *
      std::sqrt(static_cast<long double>(root_));
  return {static_cast<double>(re_.to_long_double() * scale),
          static_cast<double>(im_.to_long_double() * scale)};
}

long double Coeff::real_to_long_double() const {
  return re_.to_long_double() *
         std::pow(std::numbers::pi_v<long double>,
                  static_cast<long double>(pi2_) / 2.0L) *
         std::sqrt(static_cast<long double>(root_));
}

}  // namespace distft::exact
