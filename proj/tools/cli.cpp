#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "distft/derivative.hpp"
#include "distft/errors.hpp"
#include "distft/exact_value.hpp"
#include "distft/parser.hpp"
#include "distft/quadrature.hpp"
#include "distft/sinc_integrals.hpp"
#include "distft/transform.hpp"
#include "distft/trig_series.hpp"
#include "distft/verify.hpp"

namespace distft::cli {

namespace {

using dist::Side;
using exact::ExactValue;
using exact::Rational;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_svg(std::ostream& os, const std::vector<double>& xs,
              const std::vector<double>& ys) {
  const int w = 800, h = 400, margin = 10;
  double xmin = xs.front(), xmax = xs.back();
  double ymin = ys.front(), ymax = ys.front();
  for (const double y : ys) {
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " "
     << h << "\">\n<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px =
        margin + (xs[i] - xmin) / (xmax - xmin) * (w - 2 * margin);
    const double py =
        h - margin - (ys[i] - ymin) / (ymax - ymin) * (h - 2 * margin);
    os << (i ? " " : "") << static_cast<float>(px) << ","
       << static_cast<float>(py);
  }
  os << "\"/>\n</svg>\n";
}

int cmd_sincint(std::ostream& out, long n, long m, const std::string& range,
                const std::string& format, bool table, long max_n) {
  if (table) {
    out << "n,m,range,exact,float\n";
    for (long nn = 1; nn <= max_n; ++nn) {
      for (long mm = 1; mm <= nn; ++mm) {
        for (const char* r : {"full", "half"}) {
          const ExactValue v = r == std::string("full")
                                   ? sinc::full_line(nn, mm)
                                   : sinc::half_line(nn, mm);
          out << nn << "," << mm << "," << r << "," << v.render() << ","
              << fmt17(v.to_double()) << "\n";
        }
      }
    }
    return 0;
  }
  const ExactValue v =
      range == "full" ? sinc::full_line(n, m) : sinc::half_line(n, m);
  if (format == "exact" || format == "both") out << v.render() << "\n";
  if (format == "float" || format == "both") out << fmt17(v.to_double()) << "\n";
  return 0;
}

int cmd_series(std::ostream& out, const std::string& name,
               const std::string& coeffs_path, const std::string& alpha_str,
               long order, long samples, double xmin, double xmax,
               const std::string& out_path, const std::string& svg_path) {
  (void)out;
  series::TrigSeries s;
  if (!coeffs_path.empty()) {
    std::ifstream in(coeffs_path);
    if (!in) throw Error("cannot open coefficients file '" + coeffs_path + "'");
    s = series::read_series_csv(in);
    if (order > 0 &&
        static_cast<std::size_t>(order) < s.harmonics().size()) {
      std::vector<series::Harmonic> hs(s.harmonics().begin(),
                                       s.harmonics().begin() + order);
      s = series::TrigSeries(s.mean(), std::move(hs));
    }
  } else {
    s = series::builtin_series(name, order);
  }
  const Rational alpha = Rational::from_string(alpha_str);
  const series::TrigSeries d = series::frac_deriv_series(s, alpha);

  if (samples < 2) throw DomainError("--samples must be at least 2");
  std::vector<double> xs(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i)
    xs[static_cast<std::size_t>(i)] =
        xmin + (xmax - xmin) * static_cast<double>(i) /
                   static_cast<double>(samples - 1);
  const std::vector<double> ys = series::sample_series(d, xs);

  std::ofstream fo(out_path);
  if (!fo) throw Error("cannot open output file '" + out_path + "'");
  series::write_sample_csv(fo, xs, ys);
  if (!svg_path.empty()) {
    std::ofstream so(svg_path);
    if (!so) throw Error("cannot open svg file '" + svg_path + "'");
    emit_svg(so, xs, ys);
  }
  return 0;
}

int cmd_verify(std::ostream& out, double tol, std::uint64_t seed,
               const std::string& filter) {
  verify::VerifyOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  opts.filter = filter;
  const auto results = verify::run_verification(opts);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << verify::format_check_line(r) << "\n";
    if (r.pass) ++passed;
  }
  out << "VERIFY " << passed << "/" << results.size()
      << (passed == results.size() ? " PASS" : " FAIL") << "\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact generalized Fourier transforms of distributions, "
               "fractional derivatives and sinc-power integrals"};
  app.require_subcommand(1);

  std::string expr, alpha_str;
  auto* ft_cmd = app.add_subcommand("ft", "Fourier transform of an expression");
  ft_cmd->add_option("--expr", expr, "x-side expression")->required();

  auto* ifft_cmd =
      app.add_subcommand("ifft", "inverse Fourier transform of an expression");
  ifft_cmd->add_option("--expr", expr, "k-side expression")->required();

  auto* frac_cmd =
      app.add_subcommand("fracderiv", "fractional derivative of an expression");
  frac_cmd->add_option("--expr", expr, "x-side expression")->required();
  frac_cmd->add_option("--alpha", alpha_str, "order (rational, halves allowed)")
      ->required();

  long n = 0, m = 0, max_n = 8;
  std::string range = "full", format = "both";
  bool table = false;
  auto* sinc_cmd =
      app.add_subcommand("sincint", "exact sin^n x / x^m integrals");
  sinc_cmd->add_option("--n", n, "sine power");
  sinc_cmd->add_option("--m", m, "denominator power");
  sinc_cmd->add_option("--range", range, "full or half line")
      ->check(CLI::IsMember({"full", "half"}));
  sinc_cmd->add_option("--format", format, "exact, float or both")
      ->check(CLI::IsMember({"exact", "float", "both"}));
  sinc_cmd->add_flag("--table", table, "emit a CSV table for all n,m");
  sinc_cmd->add_option("--max-n", max_n, "largest n for --table");

  std::string name, coeffs_path, out_path, svg_path;
  long order = 0, samples = 0;
  double xmin = -std::numbers::pi, xmax = std::numbers::pi;
  auto* series_cmd = app.add_subcommand(
      "series", "fractional derivative of a trigonometric series, sampled");
  series_cmd->add_option("--name", name, "built-in series (sawtooth|absx)")
      ->check(CLI::IsMember({"sawtooth", "absx"}));
  series_cmd->add_option("--coeffs", coeffs_path, "series CSV (n,a,b)");
  series_cmd->add_option("--alpha", alpha_str, "order (rational)")->required();
  series_cmd->add_option("--order", order, "retained harmonics")->required();
  series_cmd->add_option("--samples", samples, "sample count")->required();
  series_cmd->add_option("--xmin", xmin, "left end of the sample grid");
  series_cmd->add_option("--xmax", xmax, "right end of the sample grid");
  series_cmd->add_option("--out", out_path, "sample CSV path")->required();
  series_cmd->add_option("--svg", svg_path, "optional polyline SVG path");

  double tol = 0.0;
  std::uint64_t seed = 42;
  std::string filter;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the numeric verification suites");
  verify_cmd->add_option("--tol", tol, "tolerance override");
  verify_cmd->add_option("--seed", seed, "seed for randomized suites");
  verify_cmd->add_option("--filter", filter, "substring filter on check names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(ft_cmd)) {
      out << dist::ft(dist::parse_expr(expr, Side::X)).render() << "\n";
      return 0;
    }
    if (app.got_subcommand(ifft_cmd)) {
      out << dist::ift(dist::parse_expr(expr, Side::K)).render() << "\n";
      return 0;
    }
    if (app.got_subcommand(frac_cmd)) {
      const Rational alpha = Rational::from_string(alpha_str);
      out << dist::frac_derivative(dist::parse_expr(expr, Side::X), alpha)
                 .render()
          << "\n";
      return 0;
    }
    if (app.got_subcommand(sinc_cmd)) {
      if (!table && (n == 0 || m == 0))
        throw DomainError("--n and --m are required without --table");
      return cmd_sincint(out, n, m, range, format, table, max_n);
    }
    if (app.got_subcommand(series_cmd)) {
      if (name.empty() && coeffs_path.empty())
        throw DomainError("one of --name or --coeffs is required");
      return cmd_series(out, name, coeffs_path, alpha_str, order, samples,
                        xmin, xmax, out_path, svg_path);
    }
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(out, tol, seed, filter);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace distft::cli
