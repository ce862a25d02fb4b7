#include "distft/derivative.hpp"

#include <string>

#include "distft/errors.hpp"
#include "distft/transform.hpp"

namespace distft::dist {

namespace {

DistExpr derivative_once(const DistExpr& e) {
  DistExpr out(e.side());
  for (const auto& [c, t] : e.terms()) {
    switch (t.kind) {
      case TermKind::Const:
        break;
      case TermKind::Sgn:
        out.append(c.scaled(Rational(2)), DistTerm::delta());
        break;
      case TermKind::Delta:
        out.append(c, DistTerm::delta(t.order + 1, t.param));
        break;
      case TermKind::Monomial:
        out.append(c.scaled(Rational(t.order)),
                   t.order == 1 ? DistTerm::constant()
                                : DistTerm::monomial(t.order - 1));
        break;
      case TermKind::SgnPower:
        // x^n (2 delta) vanishes for n >= 1
        out.append(c.scaled(Rational(t.order)),
                   t.order == 1 ? DistTerm::sgn()
                                : DistTerm::sgn_power(t.order - 1));
        break;
      case TermKind::NegPower:
        out.append(c.scaled(Rational(-t.order)),
                   DistTerm::neg_power(t.order + 1));
        break;
      case TermKind::OneSided:
        out.append(c.scaled(t.param),
                   DistTerm::one_sided(t.param - Rational(1), t.side));
        break;
      case TermKind::HalfPowerFull:
        out.append(c.scaled(Rational(2 * t.order + 1, 2)),
                   DistTerm::half_power_full(t.order - 1));
        break;
      case TermKind::IkPower:
        // d/dk (ik)^a = i a (ik)^(a-1)
        out.append((c * Coeff::imaginary(t.param)),
                   DistTerm::ik_power(t.param - Rational(1)));
        break;
      case TermKind::ExpLine:
        out.append(c * Coeff::imaginary(t.param), t);
        break;
      default:
        throw UnsupportedTermError(
            std::string("derivative of '") + kind_name(t.kind) +
            "' leaves the taxonomy");
    }
  }
  return out;
}

// (ik)^alpha * e for a k-side expression and non-integer alpha > 0.
DistExpr mul_ik_alpha(const DistExpr& e, const Rational& alpha) {
  DistExpr out(Side::K);
  for (const auto& [c, t] : e.terms()) {
    switch (t.kind) {
      case TermKind::Delta: {
        if (t.order > 0)
          throw FractionalOperandError(
              "k^alpha times a delta derivative is outside the taxonomy");
        if (t.param.is_zero()) break;  // k^alpha delta(k) = 0 for alpha > 0
        // (ik)^alpha delta(k-a) = (ia)^alpha delta(k-a)
        const long p = (t.param.sign() > 0 ? 1 : -1) *
                       (alpha * Rational(2)).to_long();
        const Coeff scale =
            Coeff::rational_pow_half_int(t.param.abs(),
                                         (alpha * Rational(2)).to_long()) *
            Coeff::cis_eighth(p);
        out.append(c * scale, t);
        break;
      }
      case TermKind::Const:
        out.append(c, DistTerm::ik_power(alpha));
        break;
      case TermKind::Monomial:
        // k^m = i^-m (ik)^m
        out.append(c.times_i_pow(-t.order),
                   DistTerm::ik_power(alpha + Rational(t.order)));
        break;
      case TermKind::IkPower:
        out.append(c, DistTerm::ik_power(alpha + t.param));
        break;
      default:
        throw FractionalOperandError(
            std::string("(ik)^alpha times '") + kind_name(t.kind) +
            "' is outside the taxonomy");
    }
  }
  return out;
}

}  // namespace

DistExpr derivative(const DistExpr& e, long m) {
  if (m < 1) throw DomainError("derivative order must be >= 1");
  DistExpr out = e;
  for (long i = 0; i < m; ++i) out = derivative_once(out);
  return out;
}

DistExpr frac_derivative(const DistExpr& e, const Rational& alpha) {
  if (e.side() != Side::X)
    throw DomainError("frac_derivative expects an x-side expression");
  if (alpha.sign() < 0 || !alpha.denominator_is_one_or_two())
    throw UnsupportedAlphaError(
        "fractional order must be >= 0 with denominator 1 or 2");
  if (alpha.is_zero()) return e;
  if (alpha.is_integer()) return derivative(e, alpha.to_long());
  return ift(mul_ik_alpha(ft(e), alpha));
}

}  // namespace distft::dist
