#include "distft/transform.hpp"

#include <string>

#include "distft/errors.hpp"

namespace distft::dist {

namespace {

using exact::factorial;

[[noreturn]] void unsupported(const DistTerm& t, const char* dir) {
  throw UnsupportedTermError(std::string("no ") + dir +
                             " table entry for term kind '" +
                             kind_name(t.kind) + "'");
}

}  // namespace

DistExpr ft(const DistExpr& e) {
  if (e.side() != Side::X)
    throw DomainError("ft expects an x-side expression");
  DistExpr out(Side::K);
  const Coeff two_pi = Coeff::with_pi(Rational(2), 2);

  for (const auto& [c, t] : e.terms()) {
    switch (t.kind) {
      case TermKind::Const:
        out.append(c * two_pi, DistTerm::delta());
        break;
      case TermKind::Sgn:
        out.append(c.scaled(Rational(2)), DistTerm::ik_power(Rational(-1)));
        break;
      case TermKind::SgnPower:
        out.append(c.scaled(Rational(mpz_class(factorial(t.order) * 2))),
                   DistTerm::ik_power(Rational(-(t.order + 1))));
        break;
      case TermKind::Delta:
        if (t.param.is_zero()) {
          // F[delta^(n)] = (ik)^n = i^n k^n
          if (t.order == 0)
            out.append(c, DistTerm::constant());
          else
            out.append(c.times_i_pow(t.order), DistTerm::monomial(t.order));
        } else if (t.order == 0) {
          out.append(c, DistTerm::exp_line(-t.param));
        } else {
          throw UnsupportedTermError(
              "shifted delta derivatives transform outside the taxonomy");
        }
        break;
      case TermKind::Monomial:
        out.append(c * two_pi.times_i_pow(t.order),
                   DistTerm::delta(t.order));
        break;
      case TermKind::NegPower: {
        // pi k^(n-1) sgn(k) / (i^n (n-1)!)
        const Coeff f =
            Coeff::with_pi(Rational(mpz_class(1), factorial(t.order - 1)), 2)
                .times_i_pow(-t.order);
        out.append(c * f, t.order == 1 ? DistTerm::sgn()
                                       : DistTerm::sgn_power(t.order - 1));
        break;
      }
      case TermKind::OneSided: {
        // Integer exponents live decomposed; only half-integer ones remain.
        if (t.side < 0 || t.param.is_integer()) unsupported(t, "forward");
        const Coeff g = Coeff::gamma_half_integer(t.param + Rational(1));
        out.append(c * g, DistTerm::ik_power(-t.param - Rational(1)));
        break;
      }
      case TermKind::HalfPowerFull: {
        const Rational a(2 * t.order + 1, 2);  // exponent n + 1/2
        const Coeff g =
            Coeff::gamma_half_integer(a + Rational(1)).scaled(Rational(2));
        out.append(c * g, DistTerm::ik_power(-a - Rational(1)));
        break;
      }
      case TermKind::ExpLine:
        out.append(c * two_pi, DistTerm::delta(0, t.param));
        break;
      case TermKind::FermiDirac: {
        out.append(c * Coeff::pi_pow_half(2), DistTerm::delta());
        const Coeff f = Coeff(Rational(0), Rational(1) / t.param, 2);
        out.append(c * f, DistTerm::csch_pi(Rational(1) / t.param));
        break;
      }
      case TermKind::BoseEinstein: {
        out.append(-(c * Coeff::pi_pow_half(2)), DistTerm::delta());
        const Coeff f = Coeff(Rational(0), -(Rational(1) / t.param), 2);
        out.append(c * f, DistTerm::coth_pi(Rational(1) / t.param));
        break;
      }
      default:
        unsupported(t, "forward");
    }
  }
  return out;
}

DistExpr ift(const DistExpr& e) {
  if (e.side() != Side::K)
    throw DomainError("ift expects a k-side expression");
  DistExpr out(Side::X);
  const Coeff inv_two_pi = Coeff::with_pi(Rational(1, 2), -2);

  for (const auto& [c, t] : e.terms()) {
    switch (t.kind) {
      case TermKind::Delta:
        if (t.param.is_zero()) {
          if (t.order == 0)
            out.append(c * inv_two_pi, DistTerm::constant());
          else
            out.append(c.times_i_pow(-t.order) * inv_two_pi,
                       DistTerm::monomial(t.order));
        } else if (t.order == 0) {
          out.append(c * inv_two_pi, DistTerm::exp_line(t.param));
        } else {
          throw NonInvertibleError(
              "shifted delta derivative matches no table image");
        }
        break;
      case TermKind::Const:
        out.append(c, DistTerm::delta());
        break;
      case TermKind::Monomial:
        out.append(c.times_i_pow(-t.order), DistTerm::delta(t.order));
        break;
      case TermKind::Sgn:
        out.append(c * Coeff(Rational(0), Rational(1), -2),
                   DistTerm::neg_power(1));
        break;
      case TermKind::SgnPower: {
        // inverse of x^-n -> pi k^(n-1) sgn(k)/(i^n (n-1)!)
        const Coeff f =
            Coeff::with_pi(Rational(factorial(t.order)), -2)
                .times_i_pow(t.order + 1);
        out.append(c * f, DistTerm::neg_power(t.order + 1));
        break;
      }
      case TermKind::IkPower: {
        const Rational& a = t.param;
        if (a.is_integer()) {
          // Canonical k side only carries negative integer (ik)-powers.
          const long m = -a.to_long();
          if (m <= 0)
            throw NonInvertibleError("unexpected (ik)-power exponent");
          const Coeff f(Rational(mpz_class(1), factorial(m - 1) * 2));
          out.append(c * f, m == 1 ? DistTerm::sgn()
                                   : DistTerm::sgn_power(m - 1));
        } else {
          // (ik)^(-b-1) -> x^b Theta(x) / Gamma(b+1)
          const Rational b = -a - Rational(1);
          const Coeff g = Coeff::gamma_half_integer(b + Rational(1));
          out.append(c * g.inverse(), DistTerm::one_sided(b, +1));
        }
        break;
      }
      case TermKind::ExpLine:
        out.append(c, DistTerm::delta(0, -t.param));
        break;
      case TermKind::Csch: {
        // csch(pi k/b) = (b/(i pi)) (F[fd(b)] - pi delta), b = 1/param
        const Rational beta = Rational(1) / t.param;
        out.append(c * Coeff(Rational(0), -beta, -2),
                   DistTerm::fermi_dirac(beta));
        out.append(c * Coeff(Rational(0), beta / Rational(2), -2),
                   DistTerm::constant());
        break;
      }
      case TermKind::Coth: {
        // coth(pi k/b) = (i b/pi) (F[be(b)] + pi delta), b = 1/param
        const Rational beta = Rational(1) / t.param;
        out.append(c * Coeff(Rational(0), beta, -2),
                   DistTerm::bose_einstein(beta));
        out.append(c * Coeff(Rational(0), beta / Rational(2), -2),
                   DistTerm::constant());
        break;
      }
      default:
        throw NonInvertibleError(std::string("term kind '") +
                                 kind_name(t.kind) +
                                 "' matches no table image");
    }
  }
  return out;
}

}  // namespace distft::dist
