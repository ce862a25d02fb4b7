#pragma once

#include "distft/dist_expr.hpp"

namespace distft::dist {

// Generalized Fourier transform, convention F[f](k) = int f(x) e^(-ikx) dx,
// extended linearly over the term table:
//
//   1              -> 2 pi delta
//   sgn            -> 2 (ik)^-1
//   x^n sgn(x)     -> 2 n! (ik)^-(n+1)
//   delta^(n)      -> i^n k^n
//   delta(x-a)     -> e^(-iak)
//   x^n            -> 2 pi i^n delta^(n)
//   x^-n           -> pi k^(n-1) sgn(k) / (i^n (n-1)!)
//   x^a Theta(x)   -> Gamma(a+1) (ik)^(-a-1)      (a half-integer)
//   x^(n+1/2) on R -> 2 Gamma(n+3/2) (ik)^(-n-3/2)
//   e^(iax)        -> 2 pi delta(k-a)
//   fd(b)          -> pi delta + (i pi / b) csch(pi k / b)
//   be(b)          -> (pi/(i b)) coth(pi k / b) - pi delta
//
// (Theta and x^n Theta rows follow by linearity from the decomposed
// canonical basis and reproduce pi delta + (ik)^-1 etc. verbatim.)
DistExpr ft(const DistExpr& e);

// Exact inverse with the 1/(2 pi) convention; ift(ft(e)) = e termwise on
// every invertible kind. (ik)^-a with half-integer exponent inverts through
// the one-sided power row: (ik)^(-a-1) -> x^a Theta(x) / Gamma(a+1).
DistExpr ift(const DistExpr& e);

}  // namespace distft::dist
