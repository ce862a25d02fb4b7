#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "distft/coeff.hpp"

namespace distft::series {

using exact::Coeff;
using exact::Rational;

// Truncated trigonometric series on the 2 pi period:
//   mean + sum_n (a_n cos(n x) + b_n sin(n x))
// Frequencies are strictly increasing and all-zero harmonics are dropped.
// Coefficients live in the exact ring rational * sqrt(m) * pi^h, which is
// closed under half-order differentiation (rotation by pi/4 brings in
// 1/sqrt(2), the n^(1/2) factor brings in sqrt(n), absx brings in 1/pi).
struct Harmonic {
  long n = 1;
  Coeff a{};  // cosine coefficient
  Coeff b{};  // sine coefficient
};

class TrigSeries {
 public:
  TrigSeries() = default;
  TrigSeries(Coeff mean, std::vector<Harmonic> harmonics);

  const Coeff& mean() const { return mean_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  friend bool operator==(const TrigSeries& a, const TrigSeries& b);
  friend bool operator!=(const TrigSeries& a, const TrigSeries& b) {
    return !(a == b);
  }

 private:
  Coeff mean_{};
  std::vector<Harmonic> harmonics_;
};

// Built-in series: "sawtooth" is x on (-pi, pi) continued periodically,
// b_n = 2(-1)^(n-1)/n; "absx" is |x| with mean pi/2 and cosine coefficients
// -4/(pi j^2) on the odd harmonics j (fundamental included). `order` counts
// retained nonzero harmonics. Unknown names raise UnknownNameError.
TrigSeries builtin_series(const std::string& name, long order);

// Weyl differentiation of order alpha >= 0 (denominator 1 or 2): harmonic n
// maps by a' = n^a (a cos(a pi/2) + b sin(a pi/2)),
//         b' = n^a (b cos(a pi/2) - a sin(a pi/2)); the mean dies for a > 0.
TrigSeries frac_deriv_series(const TrigSeries& s, const Rational& alpha);

// Pointwise samples, accumulated in extended precision.
std::vector<double> sample_series(const TrigSeries& s,
                                  std::span<const double> xs);

// CSV with header "n,a,b"; the mean is row "0,<mean>,0"; rationals as p/q.
TrigSeries read_series_csv(std::istream& is);
void write_sample_csv(std::ostream& os, std::span<const double> xs,
                      std::span<const double> ys);

}  // namespace distft::series
