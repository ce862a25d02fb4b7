#include "distft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "distft/errors.hpp"
#include "distft/rational.hpp"

namespace distft::quad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kEvalBudget = 10'000'000;

struct EvalCounter {
  long long count = 0;
  void charge(long long n) {
    count += n;
    if (count > kEvalBudget)
      throw ConvergenceError("quadrature evaluation budget exhausted", count);
  }
};

// 7-point Gauss / 15-point Kronrod pair (nodes on [0,1] half-interval).
struct GK {
  static constexpr double node[8] = {
      0.000000000000000, 0.405845151377397, 0.741531185599394,
      0.949107912342759, 0.207784955007898, 0.586087235467691,
      0.864864423359769, 0.991455371120813};
  static constexpr double gauss_w[8] = {
      0.417959183673469, 0.381830050505119, 0.279705391489277,
      0.129484966168870, 0.0, 0.0, 0.0, 0.0};
  static constexpr double kronrod_w[8] = {
      0.209482141084728, 0.190350578064785, 0.140653259715525,
      0.063092092629979, 0.204432940075298, 0.169004726639267,
      0.104790010322250, 0.022935322010529};
};

template <typename F>
double gk15(const F& f, double a, double b, double& err, EvalCounter& evals) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  evals.charge(15);
  const double f0 = f(mid);
  double g7 = GK::gauss_w[0] * f0;
  double k15 = GK::kronrod_w[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * GK::node[i];
    const double fi = f(mid + dx) + f(mid - dx);
    g7 += GK::gauss_w[i] * fi;
    k15 += GK::kronrod_w[i] * fi;
  }
  g7 *= h;
  k15 *= h;
  err = std::pow(200.0 * std::abs(g7 - k15), 1.5);
  return k15;
}

template <typename F>
double adaptive(const F& f, double a, double b, double tol, EvalCounter& evals,
                double& err_out) {
  struct Seg {
    double a, b;
  };
  std::vector<Seg> stack{{a, b}};
  double sum = 0.0, err_sum = 0.0;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    double err = 0.0;
    const double v = gk15(f, s.a, s.b, err, evals);
    const double share = tol * (s.b - s.a) / (b - a);
    if (err <= share || err <= 1e-17 ||
        s.b - s.a < 1e-13 * std::abs(b - a) || stack.size() > 1024) {
      sum += v;
      err_sum += err;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    stack.push_back({s.a, mid});
    stack.push_back({mid, s.b});
  }
  err_out += err_sum;
  return sum;
}

// Iterated averaging (Euler transformation) of an alternating series given
// its raw terms; the error estimate is the last averaging correction.
double euler_accelerate(const std::vector<double>& terms, double& err_out) {
  std::vector<double> s(terms.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    s[i] = acc;
  }
  const int depth = static_cast<int>(
      std::min<std::size_t>(20, s.size() > 1 ? s.size() - 1 : 0));
  double prev = s.back();
  double last = prev;
  for (int d = 0; d < depth; ++d) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
    prev = last;
    last = s.back();
  }
  err_out += std::abs(last - prev) + 1e-16;
  return last;
}

double sin_over_x(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 *
                             (1.0 - x2 / 72.0)));
  }
  return std::sin(x) / x;
}

// sin^n x / x^m, continuously extended at 0 (x^(n-m) scaling).
double sinc_power(double x, long n, long m) {
  if (x == 0.0) return n == m ? 1.0 : 0.0;
  if (std::abs(x) < 1e-3) {
    return std::pow(sin_over_x(x), static_cast<double>(n)) *
           std::pow(x, static_cast<double>(n - m));
  }
  return std::pow(std::sin(x), static_cast<double>(n)) /
         std::pow(x, static_cast<double>(m));
}

double sinc_mean(long n) {  // mean of sin^n over a period (even n)
  return exact::binomial(static_cast<unsigned long>(n),
                         static_cast<unsigned long>(n / 2))
             .get_d() /
         std::pow(2.0, static_cast<double>(n));
}

// Abel-regularized value for even n, m = 1: A(k) + c_n ln k extrapolated
// to k -> 0 in powers of k^2 (A(k) = int_0^inf sin^n x e^(-kx)/x dx).
double regularized_even_n_m1(long n, double tol, EvalCounter& evals,
                             double& err_out) {
  const double cn = sinc_mean(n);
  constexpr int kPoints = 4;
  double xs[kPoints], vs[kPoints];
  for (int i = 0; i < kPoints; ++i) {
    const double k = 0.25 / (1 << i);
    const double x_max = (std::log(1.0 / tol) + 6.0) / k;
    const long panels = static_cast<long>(x_max / kPi) + 1;
    double a_val = 0.0, err = 0.0;
    for (long j = 0; j < panels; ++j) {
      a_val += adaptive(
          [n, k](double x) {
            return sinc_power(x, n, 1) * std::exp(-k * x);
          },
          j * kPi, (j + 1) * kPi, tol / (8.0 * panels), evals, err);
    }
    err_out += err;
    xs[i] = k * k;
    vs[i] = a_val + cn * std::log(k);
  }
  // Neville extrapolation to k^2 = 0
  double prev = vs[kPoints - 1];
  for (int level = 1; level < kPoints; ++level) {
    for (int i = 0; i < kPoints - level; ++i) {
      vs[i] = vs[i + 1] + (vs[i] - vs[i + 1]) * xs[i + level] /
                              (xs[i + level] - xs[i]);
    }
    if (level == kPoints - 1) err_out += std::abs(vs[0] - prev);
    prev = vs[0];
  }
  return vs[0];
}

double half_line_sinc(long n, long m, double tol, EvalCounter& evals,
                      double& err_out) {
  if (n % 2 == 0 && m == 1)
    return regularized_even_n_m1(n, tol, evals, err_out);

  const long head_panels = 24;
  double head = 0.0;
  for (long j = 0; j < head_panels; ++j) {
    head += adaptive([n, m](double x) { return sinc_power(x, n, m); },
                     j * kPi, (j + 1) * kPi, tol / (8.0 * head_panels), evals,
                     err_out);
  }

  if (n % 2 != 0) {
    // alternating half-period series, accelerated
    const long tail_terms = 64;
    std::vector<double> terms;
    terms.reserve(tail_terms);
    for (long j = head_panels; j < head_panels + tail_terms; ++j) {
      terms.push_back(adaptive(
          [n, m](double x) { return sinc_power(x, n, m); }, j * kPi,
          (j + 1) * kPi, tol / (16.0 * tail_terms), evals, err_out));
    }
    return head + euler_accelerate(terms, err_out);
  }

  // even n, m >= 2: remove the mean per half period, integrate its tail
  // analytically, and sum the fast-decaying remainder.
  const double cn = sinc_mean(n);
  const double mean_tail =
      cn * std::pow(head_panels * kPi, 1.0 - static_cast<double>(m)) /
      (static_cast<double>(m) - 1.0);
  double rest = 0.0;
  double u_abs = 0.0;
  for (long j = head_panels;; ++j) {
    const double a = j * kPi, b = (j + 1) * kPi;
    const double delta =
        cn * (std::pow(a, 1.0 - static_cast<double>(m)) -
              std::pow(b, 1.0 - static_cast<double>(m))) /
        (static_cast<double>(m) - 1.0);
    const double u = adaptive(
        [n, m](double x) { return sinc_power(x, n, m); }, a, b,
        tol / 1024.0, evals, err_out) - delta;
    rest += u;
    u_abs = std::abs(u);
    // |u_j| ~ j^-(m+1): remaining tail is about |u_j| * j / m
    const double rem = u_abs * static_cast<double>(j) /
                       static_cast<double>(m);
    if (rem < tol / 4.0 && j > head_panels + 8) {
      err_out += rem;
      break;
    }
  }
  return head + mean_tail + rest;
}

}  // namespace

QuadResult integrate_sinc_power(long n, long m, Range range, double tol) {
  if (m < 1 || n < m)
    throw DomainError("sinc quadrature requires n >= m >= 1");
  if (!(tol >= 1e-12))
    throw DomainError("tolerance must be at least 1e-12");

  QuadResult r;
  if (range == Range::Full && (n - m) % 2 != 0) {
    // odd integrand: the principal value vanishes, no quadrature needed
    r.converged = true;
    return r;
  }
  EvalCounter evals;
  double err = 0.0;
  double v = half_line_sinc(n, m, tol, evals, err);
  if (range == Range::Full) {
    v *= 2.0;
    err *= 2.0;
  }
  r.value = v;
  r.abs_err_estimate = err;
  r.converged = err <= tol;
  r.evaluations = evals.count;
  return r;
}

QuadResult fd_sine_transform(double beta, double k, double tol) {
  if (!(beta > 0) || !(k > 0)) throw DomainError("beta and k must be > 0");
  if (!(tol >= 1e-12)) throw DomainError("tolerance must be at least 1e-12");
  EvalCounter evals;
  const double x_max =
      std::max(std::log(4.0 / (tol * beta)) / beta, 4.0 * kPi / k);
  const double period = kPi / k;
  const long panels = static_cast<long>(x_max / period) + 1;
  double err = 0.0, sum = 0.0;
  for (long j = 0; j < panels; ++j) {
    sum += adaptive(
        [beta, k](double x) {
          // stable 1/(e^(bx)+1)
          const double e = std::exp(-beta * x);
          return std::sin(k * x) * e / (1.0 + e);
        },
        j * period, (j + 1) * period, tol / (8.0 * panels), evals, err);
  }
  QuadResult r;
  r.value = 2.0 * sum;
  r.abs_err_estimate = 2.0 * (err + std::exp(-beta * panels * period) / beta);
  r.converged = r.abs_err_estimate <= tol;
  r.evaluations = evals.count;
  return r;
}

QuadResult be_sine_transform(double beta, double k, double tol) {
  if (!(beta > 0) || !(k > 0)) throw DomainError("beta and k must be > 0");
  if (!(tol >= 1e-12)) throw DomainError("tolerance must be at least 1e-12");
  EvalCounter evals;
  const double x_max =
      std::max(std::log(8.0 / (tol * beta)) / beta, 4.0 * kPi / k);
  const double period = kPi / k;
  const long panels = static_cast<long>(x_max / period) + 1;
  double err = 0.0, sum = 0.0;
  for (long j = 0; j < panels; ++j) {
    sum += adaptive(
        [beta, k](double x) {
          if (x == 0.0) return k / beta;  // removable limit
          return std::sin(k * x) / std::expm1(beta * x);
        },
        j * period, (j + 1) * period, tol / (8.0 * panels), evals, err);
  }
  QuadResult r;
  r.value = 2.0 * sum;
  r.abs_err_estimate =
      2.0 * (err + 1.2 * std::exp(-beta * panels * period) / beta);
  r.converged = r.abs_err_estimate <= tol;
  r.evaluations = evals.count;
  return r;
}

double alt_sum(double alpha, long n_terms) {
  if (alpha == std::round(alpha))
    throw DomainError("series undefined at integer alpha");
  if (n_terms < 1) throw DomainError("series needs at least one term");
  const long n0 =
      static_cast<long>(std::ceil(std::abs(alpha))) + 1;  // past the sign flip
  double direct = 0.0;
  long n = 1;
  for (; n < n0 && n <= n_terms; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    direct += sign / (alpha * alpha - static_cast<double>(n) * n);
  }
  std::vector<double> tail;
  const long tail_terms = std::min<long>(n_terms - n + 1, 64);
  for (long j = 0; j < tail_terms; ++j, ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    tail.push_back(sign / (alpha * alpha - static_cast<double>(n) * n));
  }
  if (tail.empty()) return direct;
  double err = 0.0;
  return direct + euler_accelerate(tail, err);
}

double alt_sum_closed(double alpha) {
  if (alpha == std::round(alpha))
    throw DomainError("closed form undefined at integer alpha");
  return (kPi / std::sin(alpha * kPi) - 1.0 / alpha) / (2.0 * alpha);
}

std::complex<double> fd_partial_fraction(double beta, double k, long n_terms) {
  if (k == 0.0) throw DomainError("k must be nonzero");
  if (n_terms < 1) throw DomainError("series needs at least one term");
  const long direct_terms = std::min<long>(n_terms, 512);
  const long window = std::min<long>(direct_terms, 64);
  double direct = 0.0;
  long n = 1;
  for (; n <= direct_terms - window; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    direct += sign / (beta * beta * n * n + k * k);
  }
  std::vector<double> tail;
  for (; n <= direct_terms; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    tail.push_back(sign / (beta * beta * n * n + k * k));
  }
  double err = 0.0;
  const double s = direct + euler_accelerate(tail, err);
  return {0.0, 1.0 / k + 2.0 * k * s};
}

QuadResult rl_half_derivative(RlFunction f, double x, double tol) {
  if (f != RlFunction::Heaviside)
    throw UnknownNameError("unsupported function for the RL oracle");
  if (!(x > 0)) throw DomainError("x must be > 0");
  // I^(1/2) Theta = 2 sqrt(x/pi); differentiate by central difference.
  const double h = x * 1e-5;
  auto g = [](double t) { return 2.0 * std::sqrt(t / kPi); };
  QuadResult r;
  r.value = (g(x + h) - g(x - h)) / (2.0 * h);
  // |g'''| h^2 / 6 = h^2/(8 sqrt(pi)) x^(-5/2)
  r.abs_err_estimate =
      h * h / (8.0 * std::sqrt(kPi)) * std::pow(x, -2.5) + 1e-15;
  r.converged = r.abs_err_estimate <= tol;
  r.evaluations = 2;
  return r;
}

}  // namespace distft::quad
