#pragma once

#include <complex>
#include <cstdint>

#include "distft/rational.hpp"

namespace distft::exact {

// Exact scalar of the symbolic layer:
//
//   value = (re + im*i) * pi^(pi_half_power/2) * sqrt(root)
//
// with re, im rational, pi_half_power an integer and root a squarefree
// positive integer. Closed under multiplication; addition requires equal
// pi powers and equal radical parts (PowerMismatchError otherwise, with
// zero acting as the universal identity). Canonical form: zero has
// pi_half_power = 0 and root = 1; root is always squarefree.
class Coeff {
 public:
  Coeff() = default;  // zero
  Coeff(Rational re) : re_(std::move(re)) { normalize(); }  // NOLINT
  Coeff(long n) : re_(Rational(n)) {}                       // NOLINT
  Coeff(Rational re, Rational im, int pi_half_power = 0,
        std::uint64_t root = 1);

  static Coeff zero() { return Coeff(); }
  static Coeff one() { return Coeff(Rational(1)); }
  static Coeff i() { return Coeff(Rational(0), Rational(1)); }
  static Coeff imaginary(Rational im) {
    return Coeff(Rational(0), std::move(im));
  }
  static Coeff pi_pow_half(int h) { return Coeff(Rational(1), Rational(0), h); }
  // q * pi^(h/2)
  static Coeff with_pi(Rational q, int h) {
    return Coeff(std::move(q), Rational(0), h);
  }
  // sqrt(a) for rational a > 0, squares extracted into the rational part
  static Coeff sqrt_of_rational(const Rational& a);
  // a^(p/2) for rational a > 0 and integer p
  static Coeff rational_pow_half_int(const Rational& a, long p);
  // e^(i*j*pi/4), exact (the only unit phases fractional orders produce)
  static Coeff cis_eighth(long j);
  // Gamma(n + 1/2) for any integer n: rational multiple of sqrt(pi)
  static Coeff gamma_int_plus_half(long n);
  // Gamma(q) for q with denominator 1 or 2 (poles at integers <= 0 throw)
  static Coeff gamma_half_integer(const Rational& q);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  int pi_half_power() const { return pi2_; }
  std::uint64_t root() const { return root_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const {
    return im_.is_zero() && pi2_ == 0 && root_ == 1 && re_.is_one();
  }

  Coeff operator-() const;
  Coeff conj() const;
  Coeff inverse() const;
  // multiply by i^n
  Coeff times_i_pow(long n) const;
  Coeff scaled(const Rational& q) const;

  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.pi2_ == b.pi2_ &&
           a.root_ == b.root_;
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  long double real_to_long_double() const;

 private:
  void normalize();

  Rational re_{};
  Rational im_{};
  int pi2_ = 0;
  std::uint64_t root_ = 1;
};

}  // namespace distft::exact
