#pragma once

#include <complex>
#include <string>
#include <tuple>

#include "distft/coeff.hpp"
#include "distft/rational.hpp"

namespace distft::dist {

using exact::Coeff;
using exact::Rational;

enum class Side { X, K };

// Closed taxonomy of distribution primitives. The set is fixed; every
// operation is a rewrite between members of this set.
enum class TermKind {
  Const,          // the function 1
  Sgn,            // sgn(x)
  Delta,          // delta^(order)(x - shift)
  Monomial,       // x^order, order >= 1
  SgnPower,       // x^order * sgn(x), order >= 1
  NegPower,       // x^-order (principal value), order >= 1
  OneSided,       // x^param * Theta(side*x), param non-integer or negative
  HalfPowerFull,  // x^(order+1/2) on all of R (symmetrized regularization)
  IkPower,        // (i x)^param, principal branch
  ExpLine,        // e^(i*param*x)
  FermiDirac,     // 1/(e^(param x)+1), param > 0
  BoseEinstein,   // 1/(e^(param x)-1), param > 0
  Csch,           // 1/sinh(param*pi*x), param > 0
  Coth,           // coth(param*pi*x), param > 0
};

const char* kind_name(TermKind k);

struct DistTerm {
  TermKind kind = TermKind::Const;
  long order = 0;     // Delta/Monomial/SgnPower/NegPower/HalfPowerFull
  int side = +1;      // OneSided only
  Rational param{};   // Delta shift, OneSided/IkPower exponent, ExpLine
                      // frequency, FermiDirac/BoseEinstein beta,
                      // Csch/Coth scale (times pi)

  static DistTerm constant();
  static DistTerm sgn();
  static DistTerm delta(long n = 0, Rational shift = Rational(0));
  static DistTerm monomial(long n);
  static DistTerm sgn_power(long n);
  static DistTerm neg_power(long n);
  static DistTerm one_sided(Rational alpha, int side = +1);
  static DistTerm half_power_full(long n);
  static DistTerm ik_power(Rational alpha);
  static DistTerm exp_line(Rational a);
  static DistTerm fermi_dirac(Rational beta);
  static DistTerm bose_einstein(Rational beta);
  static DistTerm csch_pi(Rational q);
  static DistTerm coth_pi(Rational q);

  friend bool operator==(const DistTerm& a, const DistTerm& b) {
    return a.kind == b.kind && a.order == b.order && a.side == b.side &&
           a.param == b.param;
  }
  friend bool operator<(const DistTerm& a, const DistTerm& b) {
    return std::tie(a.kind, a.order, a.side, a.param) <
           std::tie(b.kind, b.order, b.side, b.param);
  }

  // Pointwise value at t; Delta is handled by the expression layer.
  std::complex<long double> eval(double t) const;

  std::string render(Side side_tag) const;
};

}  // namespace distft::dist
