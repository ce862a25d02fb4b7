#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "distft/rational.hpp"

namespace distft::exact {

// Value in the rational span of {1, pi} u {ln p : p prime}. Log arguments
// are canonicalized to primes (ln m expands over the factorization of m);
// zero-coefficient entries are never stored.
class ExactValue {
 public:
  ExactValue() = default;

  static ExactValue from_rational(Rational q);
  static ExactValue pi_times(Rational q);
  // q * ln(m) for integer m >= 1 (ln 1 contributes nothing)
  static ExactValue log_term(std::uint64_t m, const Rational& q);

  const Rational& coeff_one() const { return one_; }
  const Rational& coeff_pi() const { return pi_; }
  const std::map<std::uint64_t, Rational>& log_terms() const { return logs_; }

  bool is_zero() const;

  ExactValue& add_log(std::uint64_t m, const Rational& q);

  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
  ExactValue operator-() const;
  ExactValue scaled(const Rational& q) const;
  ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.one_ == b.one_ && a.pi_ == b.pi_ && a.logs_ == b.logs_;
  }
  friend bool operator!=(const ExactValue& a, const ExactValue& b) {
    return !(a == b);
  }

  // Grammar: value := "0" | signed_term (" + " term | " - " term)*
  //          term  := rat | rat "*pi" | rat "*ln(" prime ")"
  std::string render() const;
  static ExactValue parse(std::string_view s);

  double to_double() const;

 private:
  void prune();

  Rational one_{};
  Rational pi_{};
  std::map<std::uint64_t, Rational> logs_;
};

}  // namespace distft::exact
