#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "distft/dist_term.hpp"

namespace distft::dist {

// Finite linear combination of DistTerm primitives with exact coefficients,
// tagged with the side (x or k) it lives on. Terms are kept sorted and
// merged; zero coefficients are dropped.
//
// Canonical basis notes:
//  - Theta(+-x) and integer-exponent one-sided powers are stored decomposed
//    over {Const, Sgn, Monomial, SgnPower} (Theta = 1/2 + sgn/2, etc.); the
//    renderer recombines matched pairs, so "theta" still prints as theta.
//  - On the k side, negative integer powers are stored as (ik)^-m and
//    positive integer (ik)-powers decompose into i^m * k^m.
class DistExpr {
 public:
  explicit DistExpr(Side side) : side_(side) {}

  static DistExpr zero(Side side) { return DistExpr(side); }
  static DistExpr single(Side side, Coeff c, const DistTerm& t);

  Side side() const { return side_; }
  const std::vector<std::pair<Coeff, DistTerm>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  // Canonicalizing insertion (decomposition + like-term merge).
  void append(const Coeff& c, const DistTerm& t);

  DistExpr scaled(const Coeff& c) const;
  friend DistExpr operator+(const DistExpr& a, const DistExpr& b);
  friend DistExpr operator-(const DistExpr& a, const DistExpr& b);

  friend bool operator==(const DistExpr& a, const DistExpr& b) {
    return a.side_ == b.side_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DistExpr& a, const DistExpr& b) {
    return !(a == b);
  }

  // Numeric evaluation of the function-like part at t. Delta terms vanish
  // away from their shift; at the shift they are skipped when
  // exclude_singular is set and raise SingularPointError otherwise.
  std::complex<double> eval(double t, bool exclude_singular = false) const;

  std::string render() const;

 private:
  void insert_merged(const Coeff& c, const DistTerm& t);

  Side side_;
  std::vector<std::pair<Coeff, DistTerm>> terms_;
};

std::string render_coeff(const Coeff& c, bool with_star);

}  // namespace distft::dist
