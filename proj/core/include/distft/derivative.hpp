#pragma once

#include "distft/dist_expr.hpp"

namespace distft::dist {

// m-fold formal termwise derivative. Power-rule kinds rewrite in place
// (one-sided powers as finite parts, without boundary deltas); sgn goes to
// 2 delta; quantum-statistics and csch/coth kinds have no image in the
// taxonomy and raise UnsupportedTermError.
DistExpr derivative(const DistExpr& e, long m);

// Fractional derivative of order alpha > 0 (denominator 1 or 2), defined
// through the transform: ift( (ik)^alpha * ft(e) ), with
// (ik)^alpha = |k|^alpha e^(i alpha pi/2 sgn k) on the principal branch.
// Integer orders agree exactly with derivative().
DistExpr frac_derivative(const DistExpr& e, const Rational& alpha);

}  // namespace distft::dist
