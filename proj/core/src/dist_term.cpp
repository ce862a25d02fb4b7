#include "distft/dist_term.hpp"

#include <cmath>
#include <numbers>

#include "distft/errors.hpp"

namespace distft::dist {

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Const: return "const";
    case TermKind::Sgn: return "sgn";
    case TermKind::Delta: return "delta";
    case TermKind::Monomial: return "monomial";
    case TermKind::SgnPower: return "sgn-power";
    case TermKind::NegPower: return "neg-power";
    case TermKind::OneSided: return "one-sided power";
    case TermKind::HalfPowerFull: return "full-line half power";
    case TermKind::IkPower: return "(ik)-power";
    case TermKind::ExpLine: return "exponential line";
    case TermKind::FermiDirac: return "fermi-dirac";
    case TermKind::BoseEinstein: return "bose-einstein";
    case TermKind::Csch: return "csch";
    case TermKind::Coth: return "coth";
  }
  return "?";
}

DistTerm DistTerm::constant() { return {TermKind::Const, 0, +1, Rational(0)}; }

DistTerm DistTerm::sgn() { return {TermKind::Sgn, 0, +1, Rational(0)}; }

DistTerm DistTerm::delta(long n, Rational shift) {
  if (n < 0) throw DomainError("delta derivative order must be >= 0");
  return {TermKind::Delta, n, +1, std::move(shift)};
}

DistTerm DistTerm::monomial(long n) {
  if (n < 1) throw DomainError("monomial exponent must be >= 1");
  return {TermKind::Monomial, n, +1, Rational(0)};
}

DistTerm DistTerm::sgn_power(long n) {
  if (n < 1) throw DomainError("sgn-power exponent must be >= 1");
  return {TermKind::SgnPower, n, +1, Rational(0)};
}

DistTerm DistTerm::neg_power(long n) {
  if (n < 1) throw DomainError("negative-power exponent must be >= 1");
  return {TermKind::NegPower, n, +1, Rational(0)};
}

DistTerm DistTerm::one_sided(Rational alpha, int side) {
  if (!alpha.denominator_is_one_or_two())
    throw DomainError("one-sided exponent must have denominator 1 or 2");
  if (side != +1 && side != -1) throw DomainError("side must be +1 or -1");
  return {TermKind::OneSided, 0, side, std::move(alpha)};
}

DistTerm DistTerm::half_power_full(long n) {
  return {TermKind::HalfPowerFull, n, +1, Rational(0)};
}

DistTerm DistTerm::ik_power(Rational alpha) {
  if (!alpha.denominator_is_one_or_two())
    throw DomainError("(ik)-power exponent must have denominator 1 or 2");
  return {TermKind::IkPower, 0, +1, std::move(alpha)};
}

DistTerm DistTerm::exp_line(Rational a) {
  return {TermKind::ExpLine, 0, +1, std::move(a)};
}

DistTerm DistTerm::fermi_dirac(Rational beta) {
  if (beta.sign() <= 0) throw DomainError("fermi-dirac beta must be > 0");
  return {TermKind::FermiDirac, 0, +1, std::move(beta)};
}

DistTerm DistTerm::bose_einstein(Rational beta) {
  if (beta.sign() <= 0) throw DomainError("bose-einstein beta must be > 0");
  return {TermKind::BoseEinstein, 0, +1, std::move(beta)};
}

DistTerm DistTerm::csch_pi(Rational q) {
  if (q.sign() <= 0) throw DomainError("csch scale must be > 0");
  return {TermKind::Csch, 0, +1, std::move(q)};
}

DistTerm DistTerm::coth_pi(Rational q) {
  if (q.sign() <= 0) throw DomainError("coth scale must be > 0");
  return {TermKind::Coth, 0, +1, std::move(q)};
}

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

std::complex<long double> principal_pow(long double t, long double alpha) {
  // t^alpha on the principal branch; t < 0 picks up e^(i pi alpha).
  if (t > 0) return {std::pow(t, alpha), 0.0L};
  const long double mag = std::pow(-t, alpha);
  return {mag * std::cos(kPi * alpha), mag * std::sin(kPi * alpha)};
}

}  // namespace

std::complex<long double> DistTerm::eval(double td) const {
  const long double t = td;
  switch (kind) {
    case TermKind::Const:
      return {1.0L, 0.0L};
    case TermKind::Sgn:
      return {t > 0 ? 1.0L : (t < 0 ? -1.0L : 0.0L), 0.0L};
    case TermKind::Delta:
      return {0.0L, 0.0L};  // away from the shift; expression layer guards
    case TermKind::Monomial:
      return {std::pow(t, static_cast<long double>(order)), 0.0L};
    case TermKind::SgnPower: {
      const long double s = t > 0 ? 1.0L : (t < 0 ? -1.0L : 0.0L);
      return {s * std::pow(t, static_cast<long double>(order)), 0.0L};
    }
    case TermKind::NegPower:
      if (t == 0) throw SingularPointError("x^-n at 0");
      return {std::pow(t, static_cast<long double>(-order)), 0.0L};
    case TermKind::OneSided: {
      const long double a = param.to_long_double();
      if (t == 0) {
        if (a < 0) throw SingularPointError("one-sided power at 0");
        return {0.0L, 0.0L};
      }
      if ((side > 0 && t < 0) || (side < 0 && t > 0)) return {0.0L, 0.0L};
      return principal_pow(t, a);
    }
    case TermKind::HalfPowerFull: {
      const long double a = static_cast<long double>(order) + 0.5L;
      if (t == 0) {
        if (order < 0) throw SingularPointError("half power at 0");
        return {0.0L, 0.0L};
      }
      return principal_pow(t, a);
    }
    case TermKind::IkPower: {
      const long double a = param.to_long_double();
      if (t == 0) {
        if (a < 0) throw SingularPointError("(ik)^a at 0");
        return {0.0L, 0.0L};
      }
      // (i t)^a = |t|^a e^(i a pi/2 sgn t)
      const long double mag = std::pow(std::abs(t), a);
      const long double ph = a * kPi / 2.0L * (t > 0 ? 1.0L : -1.0L);
      return {mag * std::cos(ph), mag * std::sin(ph)};
    }
    case TermKind::ExpLine: {
      const long double w = param.to_long_double() * t;
      return {std::cos(w), std::sin(w)};
    }
    case TermKind::FermiDirac: {
      const long double w = param.to_long_double() * t;
      if (w >= 0) {
        const long double e = std::exp(-w);
        return {e / (1.0L + e), 0.0L};
      }
      return {1.0L / (std::exp(w) + 1.0L), 0.0L};
    }
    case TermKind::BoseEinstein: {
      if (t == 0) throw SingularPointError("bose-einstein at 0");
      const long double w = param.to_long_double() * t;
      return {1.0L / std::expm1(w), 0.0L};
    }
    case TermKind::Csch: {
      if (t == 0) throw SingularPointError("csch at 0");
      const long double w = param.to_long_double() * kPi * t;
      return {2.0L / (std::exp(w) - std::exp(-w)), 0.0L};
    }
    case TermKind::Coth: {
      if (t == 0) throw SingularPointError("coth at 0");
      const long double w = param.to_long_double() * kPi * t;
      const long double ep = std::exp(w), em = std::exp(-w);
      return {(ep + em) / (ep - em), 0.0L};
    }
  }
  throw Error("unreachable term kind");
}

std::string DistTerm::render(Side side_tag) const {
  const char v = side_tag == Side::X ? 'x' : 'k';
  const std::string var(1, v);
  switch (kind) {
    case TermKind::Const:
      return "1";
    case TermKind::Sgn:
      return "sgn";
    case TermKind::Delta: {
      std::string s = "delta";
      if (order > 0) s += "^(" + std::to_string(order) + ")";
      if (!param.is_zero()) s += "@" + param.to_string();
      return s;
    }
    case TermKind::Monomial:
      return var + "^" + std::to_string(order);
    case TermKind::SgnPower:
      return var + "^" + std::to_string(order) + "*sgn";
    case TermKind::NegPower:
      return var + "^-" + std::to_string(order);
    case TermKind::OneSided:
      return var + "^(" + param.to_string() + ")*theta" +
             (side < 0 ? "(-" + var + ")" : "");
    case TermKind::HalfPowerFull:
      return var + "^" + std::to_string(2 * order + 1) + "/2";
    case TermKind::IkPower:
      return "(i" + var + ")^(" + param.to_string() + ")";
    case TermKind::ExpLine:
      if (param.is_one()) return "exp(i" + var + ")";
      if (param == Rational(-1)) return "exp(-i" + var + ")";
      return "exp(i" + param.to_string() + var + ")";
    case TermKind::FermiDirac:
      return "fd(" + param.to_string() + ")";
    case TermKind::BoseEinstein:
      return "be(" + param.to_string() + ")";
    case TermKind::Csch:
      return param.is_one() ? "csch(pi)" : "csch(" + param.to_string() + "*pi)";
    case TermKind::Coth:
      return param.is_one() ? "coth(pi)" : "coth(" + param.to_string() + "*pi)";
  }
  return "?";
}

}  // namespace distft::dist
