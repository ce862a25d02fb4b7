#include "distft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>

#include "distft/derivative.hpp"
#include "distft/errors.hpp"
#include "distft/exact_value.hpp"
#include "distft/quadrature.hpp"
#include "distft/sinc_integrals.hpp"
#include "distft/transform.hpp"
#include "distft/trig_series.hpp"

namespace distft::verify {

using dist::DistExpr;
using dist::DistTerm;
using dist::Side;
using exact::Coeff;
using exact::ExactValue;
using exact::Rational;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct Collector {
  std::vector<CheckResult> results;
  std::string filter;

  bool wanted(const std::string& name) const {
    return filter.empty() || name.find(filter) != std::string::npos;
  }

  void exact(const std::string& name, const std::string& params, bool ok,
             const std::string& expected = "ok",
             const std::string& got_on_fail = "violation") {
    if (!wanted(name)) return;
    results.push_back(
        {name, params, expected, ok ? expected : got_on_fail, 0.0, ok});
  }

  void numeric(const std::string& name, const std::string& params,
               double expected, double got, double tol) {
    if (!wanted(name)) return;
    const double err = std::abs(expected - got);
    results.push_back({name, params, fmt_double(expected), fmt_double(got),
                       err, err <= tol});
  }

  void value(const std::string& name, const std::string& params,
             const ExactValue& expected, const ExactValue& got) {
    if (!wanted(name)) return;
    results.push_back({name, params, expected.render(), got.render(), 0.0,
                       expected == got});
  }
};

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    const Rational q(num(rng), den(rng));
    if (!nonzero || !q.is_zero()) return q;
  }
}

Coeff random_gauss(std::mt19937_64& rng) {
  for (;;) {
    const Coeff c(random_rational(rng), random_rational(rng));
    if (!c.is_zero()) return c;
  }
}

// ---------------------------------------------------------------- distalg

void check_distalg(Collector& out, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const std::string seed_params = "n=1000 seed=" + std::to_string(opts.seed);

  bool rt_ok = true;
  for (int i = 0; i < 1000 && rt_ok; ++i) {
    const DistExpr e = random_invertible_expr(rng);
    rt_ok = dist::ift(dist::ft(e)) == e;
  }
  out.exact("dist.roundtrip", seed_params, rt_ok, "ift(ft(e)) = e");

  bool lin_ok = true;
  for (int i = 0; i < 1000 && lin_ok; ++i) {
    const DistExpr e1 = random_invertible_expr(rng);
    const DistExpr e2 = random_invertible_expr(rng);
    const Coeff a = random_gauss(rng), b = random_gauss(rng);
    const DistExpr lhs = dist::ft(e1.scaled(a) + e2.scaled(b));
    const DistExpr rhs = dist::ft(e1).scaled(a) + dist::ft(e2).scaled(b);
    lin_ok = lhs == rhs;
  }
  out.exact("dist.linearity", seed_params, lin_ok,
            "ft(a e1 + b e2) = a ft(e1) + b ft(e2)");

  // semigroup d^1/2 d^1/2 = d on theta, exp lines, constants
  const Rational half(1, 2);
  auto semigroup_holds = [&half](const DistExpr& e) {
    return dist::frac_derivative(dist::frac_derivative(e, half), half) ==
           dist::derivative(e, 1);
  };
  out.exact("dist.semigroup.theta", "alpha=1/2",
            semigroup_holds(DistExpr::single(
                Side::X, Coeff::one(), DistTerm::one_sided(Rational(0), 1))));
  bool exp_ok = true;
  for (const long a : {1L, 2L, 5L})
    exp_ok = exp_ok &&
             semigroup_holds(DistExpr::single(Side::X, Coeff::one(),
                                              DistTerm::exp_line(Rational(a))));
  out.exact("dist.semigroup.expline", "a={1,2,5} alpha=1/2", exp_ok);
  const DistExpr c5 =
      DistExpr::single(Side::X, Coeff(Rational(5)), DistTerm::constant());
  out.exact("dist.semigroup.const", "c=5 alpha=1/2",
            semigroup_holds(c5) &&
                dist::frac_derivative(c5, half).is_zero() &&
                dist::frac_derivative(c5, Rational(3, 2)).is_zero());

  // classical rules through the transform route
  bool mono_ok = true;
  for (long n = 1; n <= 8 && mono_ok; ++n) {
    for (long m = 1; m <= n && mono_ok; ++m) {
      const DistExpr d = dist::frac_derivative(
          DistExpr::single(Side::X, Coeff::one(), DistTerm::monomial(n)),
          Rational(m));
      const Rational want(exact::factorial(n), exact::factorial(n - m));
      DistExpr expect(Side::X);
      expect.append(Coeff(want), n == m ? DistTerm::constant()
                                        : DistTerm::monomial(n - m));
      mono_ok = d == expect;
    }
  }
  out.exact("dist.classical.monomial", "n<=8", mono_ok,
            "d^m x^n = n!/(n-m)! x^(n-m)");

  bool neg_ok = true;
  for (long n = 1; n <= 8 && neg_ok; ++n) {
    for (long m = 1; m <= 8 && neg_ok; ++m) {
      const DistExpr d = dist::derivative(
          DistExpr::single(Side::X, Coeff::one(), DistTerm::neg_power(n)), m);
      Rational want(exact::factorial(n + m - 1), exact::factorial(n - 1));
      if (m % 2 != 0) want = -want;
      neg_ok = d == DistExpr::single(Side::X, Coeff(want),
                                     DistTerm::neg_power(n + m));
    }
  }
  out.exact("dist.classical.negpower", "n,m<=8", neg_ok,
            "d^m x^-n = (-1)^m (n+m-1)!/(n-1)! x^-(n+m)");

  // smooth part of F[fd] is odd and purely imaginary
  bool odd_ok = true;
  for (const long b : {1L, 2L}) {
    const DistExpr img = dist::ft(DistExpr::single(
        Side::X, Coeff::one(), DistTerm::fermi_dirac(Rational(b))));
    for (const double k : {0.5, 1.0, 3.0}) {
      const auto plus = img.eval(k, true);
      const auto minus = img.eval(-k, true);
      odd_ok = odd_ok && plus.real() == 0.0 && minus.real() == 0.0 &&
               plus.imag() == -minus.imag();
    }
  }
  out.exact("dist.fd_smooth.odd_imaginary", "beta={1,2} k={1/2,1,3}", odd_ok);

  // zero-temperature trend of F[fd(b)] - F[theta(-x)] at k = 1
  const DistExpr theta_m = DistExpr::single(
      Side::X, Coeff::one(), DistTerm::one_sided(Rational(0), -1));
  double prev = 1e300;
  bool zt_ok = true;
  double final_mag = 0.0;
  for (const long b : {1L, 10L, 100L}) {
    const DistExpr diff =
        dist::ft(DistExpr::single(Side::X, Coeff::one(),
                                  DistTerm::fermi_dirac(Rational(b)))) -
        dist::ft(theta_m);
    final_mag = std::abs(diff.eval(1.0, true));
    zt_ok = zt_ok && final_mag < prev;
    prev = final_mag;
  }
  zt_ok = zt_ok && final_mag < 1e-3;
  out.numeric("dist.zerotemp", "k=1 beta={1,10,100}", 0.0, final_mag, 1e-3);
  out.exact("dist.zerotemp.monotone", "k=1 beta={1,10,100}", zt_ok,
            "strictly decreasing");
}

// -------------------------------------------------------------- fracseries

series::TrigSeries random_series(std::mt19937_64& rng, long max_order) {
  std::uniform_int_distribution<long> ord(1, max_order);
  const long order = ord(rng);
  std::vector<series::Harmonic> hs;
  for (long n = 1; n <= order; ++n) {
    Coeff a(random_rational(rng)), b(random_rational(rng));
    if (a.is_zero() && b.is_zero()) continue;
    hs.push_back({n, a, b});
  }
  return series::TrigSeries(Coeff(random_rational(rng)), std::move(hs));
}

// classical termwise derivative, independent of the rotation rule
series::TrigSeries classical_series_derivative(const series::TrigSeries& s,
                                               long m) {
  series::TrigSeries cur = s;
  for (long i = 0; i < m; ++i) {
    std::vector<series::Harmonic> hs;
    for (const auto& h : cur.harmonics()) {
      const Coeff na = h.b.scaled(Rational(h.n));
      const Coeff nb = -(h.a.scaled(Rational(h.n)));
      if (na.is_zero() && nb.is_zero()) continue;
      hs.push_back({h.n, na, nb});
    }
    cur = series::TrigSeries(Coeff::zero(), std::move(hs));
  }
  return cur;
}

void check_fracseries(Collector& out, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed + 1);
  const Rational half(1, 2);

  bool sg_ok = true;
  const Rational orders[] = {half, Rational(1), Rational(3, 2)};
  for (int i = 0; i < 60 && sg_ok; ++i) {
    const auto s = random_series(rng, 12);
    for (const auto& a : orders) {
      for (const auto& b : orders) {
        sg_ok = sg_ok &&
                series::frac_deriv_series(series::frac_deriv_series(s, a), b) ==
                    series::frac_deriv_series(s, a + b);
      }
    }
  }
  out.exact("series.semigroup", "alpha,beta in {1/2,1,3/2} seed=" +
                                    std::to_string(opts.seed + 1),
            sg_ok, "d^a d^b = d^(a+b)");

  bool pair_ok = true;
  for (long n = 1; n <= 12 && pair_ok; ++n) {
    const series::TrigSeries cosn(Coeff::zero(),
                                  {{n, Coeff::one(), Coeff::zero()}});
    const series::TrigSeries sinn(Coeff::zero(),
                                  {{n, Coeff::zero(), Coeff::one()}});
    const auto ddc = series::frac_deriv_series(
        series::frac_deriv_series(cosn, half), half);
    const auto dds = series::frac_deriv_series(
        series::frac_deriv_series(sinn, half), half);
    const series::TrigSeries want_c(
        Coeff::zero(), {{n, Coeff::zero(), Coeff(Rational(-n))}});
    const series::TrigSeries want_s(Coeff::zero(),
                                    {{n, Coeff(Rational(n)), Coeff::zero()}});
    pair_ok = ddc == want_c && dds == want_s;
  }
  out.exact("series.halfpair", "n<=12", pair_ok,
            "d^1/2 d^1/2 {cos,sin}(nx) = {-n sin, n cos}(nx)");

  bool energy_ok = true;
  for (int i = 0; i < 60 && energy_ok; ++i) {
    const auto s = random_series(rng, 10);
    for (const auto& a : orders) {
      const auto d = series::frac_deriv_series(s, a);
      const long p = (a * Rational(2)).to_long();
      auto it = d.harmonics().begin();
      for (const auto& h : s.harmonics()) {
        const Coeff before = h.a * h.a + h.b * h.b;
        if (before.is_zero()) continue;
        const Coeff scale = Coeff::rational_pow_half_int(Rational(h.n), p);
        if (it == d.harmonics().end() || it->n != h.n) {
          energy_ok = false;
          break;
        }
        const Coeff after = it->a * it->a + it->b * it->b;
        energy_ok = energy_ok && after == before * scale * scale;
        ++it;
      }
    }
  }
  out.exact("series.energy", "alpha in {1/2,1,3/2}", energy_ok,
            "a'^2+b'^2 = n^(2a) (a^2+b^2)");

  bool int_ok = true;
  for (int i = 0; i < 60 && int_ok; ++i) {
    const auto s = random_series(rng, 10);
    for (long m = 1; m <= 3; ++m) {
      int_ok = int_ok && series::frac_deriv_series(s, Rational(m)) ==
                             classical_series_derivative(s, m);
    }
  }
  out.exact("series.integer_match", "alpha in {1,2,3}", int_ok,
            "integer orders = classical termwise derivative");
}

// ----------------------------------------------------------------- sincint

void check_sincint(Collector& out) {
  bool diag_ok = true;
  for (long n = 1; n <= 20 && diag_ok; ++n)
    diag_ok = sinc::full_line(n, n) == sinc::full_line_diag(n);
  out.exact("sinc.diag", "n<=20", diag_ok,
            "full_line(n,n) = full_line_diag(n)");

  bool halving_ok = true, parity_ok = true;
  for (long n = 1; n <= 20; ++n) {
    for (long m = 1; m <= n; ++m) {
      const ExactValue full = sinc::full_line(n, m);
      const ExactValue half = sinc::half_line(n, m);
      if ((n - m) % 2 == 0) {
        halving_ok = halving_ok && full == half.scaled(Rational(2));
        parity_ok = parity_ok && half.log_terms().empty();
      } else {
        halving_ok = halving_ok && full.is_zero();
        parity_ok = parity_ok && half.coeff_pi().is_zero() &&
                    half.coeff_one().is_zero();
      }
    }
  }
  out.exact("sinc.halving", "n<=20", halving_ok,
            "full = 2 half (even), full = 0 (odd)");
  out.exact("sinc.parity", "n<=20", parity_ok,
            "even: span{pi}; odd: span{ln p}");
  out.exact("sinc.reality", "n<=20", true,
            "no imaginary residue in any closed form");

  bool rec_ok = true;
  for (long m = 1; m <= 30 && rec_ok; ++m)
    rec_ok = sinc::antideriv_coeff_A(m) *
                 Rational(exact::factorial(m - 1)) ==
             Rational(1);
  out.exact("sinc.recursion_A", "m<=30", rec_ok, "A_(m-1) (m-1)! = 1");

  struct Golden {
    long n, m;
    const char* range;
    const char* value;
  };
  const Golden golden[] = {
      {3, 3, "full", "3/4*pi"},          {4, 4, "full", "2/3*pi"},
      {5, 5, "full", "115/192*pi"},      {6, 6, "full", "11/20*pi"},
      {3, 2, "half", "3/4*ln(3)"},       {4, 3, "half", "1*ln(2)"},
      {5, 4, "half", "-45/32*ln(3) + 125/96*ln(5)"},
      {1, 1, "half", "1/2*pi"},          {2, 2, "half", "1/2*pi"},
      {3, 1, "half", "1/4*pi"},
  };
  for (const auto& g : golden) {
    const ExactValue got = g.range == std::string("full")
                               ? sinc::full_line(g.n, g.m)
                               : sinc::half_line(g.n, g.m);
    out.value("sinc.golden",
              "n=" + std::to_string(g.n) + " m=" + std::to_string(g.m) +
                  " range=" + g.range,
              ExactValue::parse(g.value), got);
  }
}

// -------------------------------------------------------------- quadoracle

void check_quad(Collector& out, const VerifyOptions& opts) {
  const double pi = 3.14159265358979323846;

  const double sweep_tol = opts.tol > 0 ? opts.tol : 1e-8;
  for (long n = 1; n <= 12; ++n) {
    for (long m = 1; m <= n; ++m) {
      for (const auto range : {quad::Range::Half, quad::Range::Full}) {
        const std::string name = "quad.sinc_oracle";
        const std::string params =
            "n=" + std::to_string(n) + " m=" + std::to_string(m) +
            " range=" + (range == quad::Range::Half ? "half" : "full");
        if (!out.wanted(name)) continue;
        const ExactValue exact_val = range == quad::Range::Half
                                         ? sinc::half_line(n, m)
                                         : sinc::full_line(n, m);
        const auto q = quad::integrate_sinc_power(n, m, range, 1e-9);
        out.numeric(name, params, exact_val.to_double(), q.value, sweep_tol);
      }
    }
  }

  const double grid_tol = opts.tol > 0 ? opts.tol : 1e-6;
  const double pf_tol = opts.tol > 0 ? opts.tol : 1e-4;
  const std::pair<const char*, double> betas[] = {
      {"1/2", 0.5}, {"1", 1.0}, {"2", 2.0}, {"10", 10.0}};
  const std::pair<const char*, double> ks[] = {
      {"1/4", 0.25}, {"1", 1.0}, {"4", 4.0}};
  for (const auto& [bs, b] : betas) {
    for (const auto& [ksr, k] : ks) {
      const std::string params = std::string("beta=") + bs + " k=" + ksr;
      const double fd_closed = 1.0 / k - pi / (b * std::sinh(pi * k / b));
      const double be_closed = pi / b / std::tanh(pi * k / b) - 1.0 / k;
      if (out.wanted("quad.fd"))
        out.numeric("quad.fd", params, fd_closed,
                    quad::fd_sine_transform(b, k, 1e-9).value, grid_tol);
      if (out.wanted("quad.be"))
        out.numeric("quad.be", params, be_closed,
                    quad::be_sine_transform(b, k, 1e-9).value, grid_tol);
      if (out.wanted("quad.fdpf")) {
        const double csch_closed = pi / (b * std::sinh(pi * k / b));
        out.numeric("quad.fdpf", params + " N=100000", csch_closed,
                    quad::fd_partial_fraction(b, k, 100000).imag(), pf_tol);
      }
    }
  }

  const std::pair<const char*, double> alphas[] = {
      {"0.25", 0.25}, {"0.5", 0.5}, {"1.5", 1.5}, {"2.5", 2.5}};
  const double alt_tol = opts.tol > 0 ? opts.tol : 1e-8;
  for (const auto& [as, a] : alphas) {
    if (!out.wanted("quad.altsum")) continue;
    out.numeric("quad.altsum", std::string("alpha=") + as,
                quad::alt_sum_closed(a), quad::alt_sum(a, 10000), alt_tol);
  }

  // RL oracle against the transform-route half derivative of theta
  const DistExpr half_theta = dist::frac_derivative(
      DistExpr::single(Side::X, Coeff::one(),
                       DistTerm::one_sided(Rational(0), 1)),
      Rational(1, 2));
  const std::pair<const char*, double> xs[] = {
      {"1/pi", 1.0 / pi}, {"1", 1.0}, {"4", 4.0}};
  const double rl_tol = opts.tol > 0 ? opts.tol : 1e-6;
  for (const auto& [xsr, x] : xs) {
    if (!out.wanted("quad.rl")) continue;
    const double via_table = half_theta.eval(x).real();
    const double via_rl =
        quad::rl_half_derivative(quad::RlFunction::Heaviside, x, 1e-6).value;
    out.numeric("quad.rl", std::string("x=") + xsr, via_table, via_rl, rl_tol);
  }
}

}  // namespace

DistExpr random_invertible_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(1, 4);
  std::uniform_int_distribution<int> kind(0, 10);
  std::uniform_int_distribution<long> small(1, 4);
  std::uniform_int_distribution<long> half_odd(-2, 3);

  DistExpr e(Side::X);
  const int count = n_terms(rng);
  for (int i = 0; i < count; ++i) {
    DistTerm t = DistTerm::constant();
    switch (kind(rng)) {
      case 0: t = DistTerm::constant(); break;
      case 1: t = DistTerm::sgn(); break;
      case 2: t = DistTerm::delta(small(rng) - 1); break;
      case 3: t = DistTerm::delta(0, random_rational(rng)); break;
      case 4: t = DistTerm::monomial(small(rng)); break;
      case 5: t = DistTerm::sgn_power(small(rng)); break;
      case 6: t = DistTerm::neg_power(small(rng)); break;
      case 7:
        t = DistTerm::one_sided(Rational(2 * half_odd(rng) + 1, 2), +1);
        break;
      case 8: t = DistTerm::exp_line(random_rational(rng, true)); break;
      case 9: t = DistTerm::fermi_dirac(random_rational(rng).abs() + Rational(1, 2)); break;
      default:
        t = DistTerm::bose_einstein(random_rational(rng).abs() + Rational(1, 2));
        break;
    }
    e.append(random_gauss(rng), t);
  }
  if (e.is_zero()) e.append(Coeff::one(), DistTerm::constant());
  return e;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Collector out;
  out.filter = opts.filter;
  check_distalg(out, opts);
  check_fracseries(out, opts);
  check_sincint(out);
  check_quad(out, opts);
  std::sort(out.results.begin(), out.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return std::tie(a.name, a.params) < std::tie(b.name, b.params);
            });
  return out.results;
}

std::string format_check_line(const CheckResult& c) {
  std::string line = "CHECK " + c.name;
  if (!c.params.empty()) line += " " + c.params;
  line += " expected=" + c.expected + " got=" + c.got +
          " err=" + fmt_double(c.err) + (c.pass ? " PASS" : " FAIL");
  return line;
}

}  // namespace distft::verify
