#pragma once

#include <complex>

namespace distft::quad {

enum class Range { Full, Half };

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  bool converged = false;
  long long evaluations = 0;
};

// Numerical value of int sin^n x / x^m dx over [0,inf) or R, n >= m >= 1,
// tol >= 1e-12. Oscillation is handled by splitting at multiples of pi:
// odd n gives an alternating half-period series (Euler-accelerated); even n
// has its mean C(n,n/2)/2^n removed per half-period with the mean tail
// integrated analytically. For even n with m = 1 the integral only exists
// as the regularized limit of int sin^n x e^(-kx)/x dx + c_n ln k as
// k -> 0+, which is evaluated by Richardson extrapolation in k^2.
// The full range is 0 for odd n-m and twice the half range otherwise.
// Raises ConvergenceError if the 1e7-evaluation budget runs out.
QuadResult integrate_sinc_power(long n, long m, Range range, double tol);

// 2 int_0^inf sin(kx)/(e^(bx)+1) dx, the smooth (odd) part of the
// Fermi-Dirac transform; equals 1/k - pi/(b sinh(pi k/b)).
QuadResult fd_sine_transform(double beta, double k, double tol);

// 2 int_0^inf sin(kx)/(e^(bx)-1) dx = (pi/b) coth(pi k/b) - 1/k; the
// integrand's pole at 0 is removable (limit k/b).
QuadResult be_sine_transform(double beta, double k, double tol);

// sum_{n>=1} (-1)^n/(alpha^2 - n^2), accelerated partial sum over at most
// N terms, and its closed form (pi/sin(alpha pi) - 1/alpha)/(2 alpha).
double alt_sum(double alpha, long n_terms);
double alt_sum_closed(double alpha);

// i/k + 2ik sum_{n=1}^N (-1)^n/(b^2 n^2 + k^2), accelerated; converges to
// i pi/(b sinh(pi k/b)).
std::complex<double> fd_partial_fraction(double beta, double k, long n_terms);

enum class RlFunction { Heaviside };

// Riemann-Liouville half derivative oracle: the fractional integral of
// Theta is 2 sqrt(x/pi); its derivative is taken by a central difference
// with h = x * 1e-5, giving 1/sqrt(pi x).
QuadResult rl_half_derivative(RlFunction f, double x, double tol);

}  // namespace distft::quad
