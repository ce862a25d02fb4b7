#include "distft/rational.hpp"

#include <cmath>

namespace distft::exact {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(s)));
    }
    mpz_class num(std::string(s.substr(0, slash)));
    mpz_class den(std::string(s.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + std::string(s) + "'", 0,
                     "int or int/posint");
  }
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(),
             v_.get_den().get_mpz_t());
  return q;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw DomainError("rational does not fit a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool inv = e < 0;
  const unsigned long ue = inv ? static_cast<unsigned long>(-e)
                               : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw DomainError("zero to a negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ue);
  return inv ? Rational(d, n) : Rational(n, d);
}

long double Rational::to_long_double() const {
  // Split num/den into (double mantissa, exponent) pairs so huge values
  // do not overflow before the final scaling.
  long exp_n = 0, exp_d = 0;
  const double mn = mpz_get_d_2exp(&exp_n, num().get_mpz_t());
  const double md = mpz_get_d_2exp(&exp_d, den().get_mpz_t());
  if (md == 0.0) throw DomainError("corrupt rational");
  return std::ldexp(static_cast<long double>(mn) / md,
                    static_cast<int>(exp_n - exp_d));
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (v < 2) return out;
  for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace distft::exact
