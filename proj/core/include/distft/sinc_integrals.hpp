#pragma once

#include "distft/exact_value.hpp"

namespace distft::sinc {

using exact::ExactValue;
using exact::Rational;

// int_R sin^n x / x^m dx for n >= m >= 1, closed form
//   pi / (2^n i^(n+m) (m-1)!) * sum_l (-1)^l C(n,l) (2l-n)^(m-1) sgn(2l-n);
// exactly 0 when n-m is odd, a rational multiple of pi otherwise.
ExactValue full_line(long n, long m);

// Same integral on the diagonal n = m via the rearranged sum
//   pi / (2^(n-1) (n-1)!) * sum_{l<=n/2} (-1)^l C(n,l) (n-2l)^(n-1).
ExactValue full_line_diag(long n);

// int_0^inf sin^n x / x^m dx for n >= m >= 1:
//   n-m even: rational multiple of pi (= full_line/2);
//   n-m odd:  rational combination of ln p over the primes p <= n,
// both from the omitted-center sum (the 2l = n term is dropped, the
// "0 ln 0 = 0" convention).
ExactValue half_line(long n, long m);

// Antiderivative coefficient A_{m-1} from the recursion
// A_{m-1} = A_{m-2}/(m-1), A_0 = 1 (evaluates to 1/(m-1)!).
Rational antideriv_coeff_A(long m);

}  // namespace distft::sinc
