#include "distft/trig_series.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "distft/errors.hpp"

namespace distft::series {

TrigSeries::TrigSeries(Coeff mean, std::vector<Harmonic> harmonics)
    : mean_(std::move(mean)), harmonics_(std::move(harmonics)) {
  long last = 0;
  for (auto it = harmonics_.begin(); it != harmonics_.end();) {
    if (it->n <= last)
      throw DomainError("harmonic frequencies must be strictly increasing");
    last = it->n;
    if (it->a.is_zero() && it->b.is_zero())
      it = harmonics_.erase(it);
    else
      ++it;
  }
}

bool operator==(const TrigSeries& a, const TrigSeries& b) {
  if (a.mean_ != b.mean_ || a.harmonics_.size() != b.harmonics_.size())
    return false;
  for (std::size_t i = 0; i < a.harmonics_.size(); ++i) {
    const auto& ha = a.harmonics_[i];
    const auto& hb = b.harmonics_[i];
    if (ha.n != hb.n || ha.a != hb.a || ha.b != hb.b) return false;
  }
  return true;
}

TrigSeries builtin_series(const std::string& name, long order) {
  if (order < 1) throw DomainError("order must be >= 1");
  std::vector<Harmonic> hs;
  hs.reserve(static_cast<std::size_t>(order));
  if (name == "sawtooth") {
    for (long n = 1; n <= order; ++n) {
      const long sign = (n % 2 == 1) ? 1 : -1;
      hs.push_back({n, Coeff::zero(), Coeff(Rational(2 * sign, n))});
    }
    return TrigSeries(Coeff::zero(), std::move(hs));
  }
  if (name == "absx") {
    for (long i = 1; i <= order; ++i) {
      const long j = 2 * i - 1;
      hs.push_back({j, Coeff::with_pi(Rational(-4, j * j), -2), Coeff::zero()});
    }
    return TrigSeries(Coeff::with_pi(Rational(1, 2), 2), std::move(hs));
  }
  throw UnknownNameError("unknown built-in series '" + name + "'");
}

TrigSeries frac_deriv_series(const TrigSeries& s, const Rational& alpha) {
  if (alpha.sign() < 0 || !alpha.denominator_is_one_or_two())
    throw UnsupportedAlphaError(
        "series order must be >= 0 with denominator 1 or 2");
  if (alpha.is_zero()) return s;

  const long p = (alpha * Rational(2)).to_long();  // alpha = p/2
  // cos(alpha pi/2) and sin(alpha pi/2), exact
  const Coeff phase = Coeff::cis_eighth(p);
  const Coeff rot_cos(phase.re(), Rational(0), 0, phase.root());
  const Coeff rot_sin(phase.im(), Rational(0), 0, phase.root());

  std::vector<Harmonic> hs;
  hs.reserve(s.harmonics().size());
  for (const auto& h : s.harmonics()) {
    const Coeff scale = Coeff::rational_pow_half_int(Rational(h.n), p);
    hs.push_back({h.n, scale * (h.a * rot_cos + h.b * rot_sin),
                  scale * (h.b * rot_cos - h.a * rot_sin)});
  }
  return TrigSeries(Coeff::zero(), std::move(hs));
}

std::vector<double> sample_series(const TrigSeries& s,
                                  std::span<const double> xs) {
  struct Entry {
    long double n, a, b;
  };
  std::vector<Entry> rows;
  rows.reserve(s.harmonics().size());
  for (const auto& h : s.harmonics())
    rows.push_back({static_cast<long double>(h.n), h.a.real_to_long_double(),
                    h.b.real_to_long_double()});
  const long double mean = s.mean().real_to_long_double();

  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) {
    long double acc = mean;
    for (const auto& r : rows) {
      const long double w = r.n * static_cast<long double>(x);
      acc += r.a * std::cos(w) + r.b * std::sin(w);
    }
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

namespace {

Rational parse_csv_rational(const std::string& field, long line_no) {
  try {
    return Rational::from_string(field);
  } catch (const ParseError&) {
    throw Error("series csv line " + std::to_string(line_no) +
                ": malformed rational '" + field + "'");
  }
}

}  // namespace

TrigSeries read_series_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || (line != "n,a,b" && line != "n,a,b\r"))
    throw Error("series csv must start with header 'n,a,b'");
  Coeff mean = Coeff::zero();
  std::vector<Harmonic> hs;
  long line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw Error("series csv line " + std::to_string(line_no) +
                  ": expected 'n,a,b'");
    long n = 0;
    try {
      n = std::stol(line.substr(0, c1));
    } catch (const std::exception&) {
      throw Error("series csv line " + std::to_string(line_no) +
                  ": malformed frequency");
    }
    const Rational a =
        parse_csv_rational(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    const Rational b = parse_csv_rational(line.substr(c2 + 1), line_no);
    if (n == 0) {
      if (!b.is_zero())
        throw Error("series csv: mean row must be '0,<mean>,0'");
      mean = Coeff(a);
    } else {
      hs.push_back({n, Coeff(a), Coeff(b)});
    }
  }
  return TrigSeries(std::move(mean), std::move(hs));
}

void write_sample_csv(std::ostream& os, std::span<const double> xs,
                      std::span<const double> ys) {
  os << "x,y\n";
  char buf[64];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", xs[i], ys[i]);
    os << buf << "\n";
  }
}

}  // namespace distft::series
