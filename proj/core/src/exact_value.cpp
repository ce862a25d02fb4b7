#include "distft/exact_value.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace distft::exact {

ExactValue ExactValue::from_rational(Rational q) {
  ExactValue v;
  v.one_ = std::move(q);
  return v;
}

ExactValue ExactValue::pi_times(Rational q) {
  ExactValue v;
  v.pi_ = std::move(q);
  return v;
}

ExactValue ExactValue::log_term(std::uint64_t m, const Rational& q) {
  ExactValue v;
  v.add_log(m, q);
  return v;
}

ExactValue& ExactValue::add_log(std::uint64_t m, const Rational& q) {
  if (m == 0) throw DomainError("ln(0) is not a value");
  if (q.is_zero() || m == 1) return *this;
  for (const auto& [p, e] : factor_u64(m)) {
    Rational& c = logs_[p];
    c += q * Rational(e);
    if (c.is_zero()) logs_.erase(p);
  }
  return *this;
}

bool ExactValue::is_zero() const {
  return one_.is_zero() && pi_.is_zero() && logs_.empty();
}

void ExactValue::prune() {
  for (auto it = logs_.begin(); it != logs_.end();) {
    if (it->second.is_zero())
      it = logs_.erase(it);
    else
      ++it;
  }
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  ExactValue v = a;
  v.one_ += b.one_;
  v.pi_ += b.pi_;
  for (const auto& [p, q] : b.logs_) v.logs_[p] += q;
  v.prune();
  return v;
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) {
  return a + (-b);
}

ExactValue ExactValue::operator-() const { return scaled(Rational(-1)); }

ExactValue ExactValue::scaled(const Rational& q) const {
  ExactValue v;
  if (q.is_zero()) return v;
  v.one_ = one_ * q;
  v.pi_ = pi_ * q;
  for (const auto& [p, c] : logs_) v.logs_[p] = c * q;
  return v;
}

std::string ExactValue::render() const {
  struct Part {
    Rational coeff;
    std::string suffix;
  };
  std::vector<Part> parts;
  if (!one_.is_zero()) parts.push_back({one_, ""});
  if (!pi_.is_zero()) parts.push_back({pi_, "*pi"});
  for (const auto& [p, c] : logs_)
    parts.push_back({c, "*ln(" + std::to_string(p) + ")"});
  if (parts.empty()) return "0";

  std::string out;
  bool first = true;
  for (const auto& part : parts) {
    const bool neg = part.coeff.sign() < 0;
    const Rational mag = neg ? -part.coeff : part.coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += mag.to_string() + part.suffix;
  }
  return out;
}

namespace {

struct ValueScanner {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  bool consume(std::string_view tok) {
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("exact value parse error at offset " +
                         std::to_string(pos),
                     pos, expected);
  }

  Rational rational(bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && peek() == '-') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (peek() == '/') {
      ++pos;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("digit after '/'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    }
    return Rational::from_string(s.substr(start, pos - start));
  }

  std::uint64_t integer() {
    const std::size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail("integer");
    return std::stoull(std::string(s.substr(start, pos - start)));
  }
};

}  // namespace

ExactValue ExactValue::parse(std::string_view s) {
  ValueScanner in{s};
  ExactValue v;
  if (s == "0") return v;

  bool negate = in.peek() == '-';
  if (negate) ++in.pos;
  for (;;) {
    Rational q = in.rational(false);
    if (negate) q = -q;
    if (in.consume("*pi")) {
      v.pi_ += q;
    } else if (in.consume("*ln(")) {
      const std::uint64_t m = in.integer();
      if (!in.consume(")")) in.fail("')'");
      v.add_log(m, q);
    } else {
      v.one_ += q;
    }
    if (in.eof()) break;
    if (in.consume(" + "))
      negate = false;
    else if (in.consume(" - "))
      negate = true;
    else
      in.fail("' + ' or ' - '");
  }
  v.prune();
  return v;
}

double ExactValue::to_double() const {
  long double acc = one_.to_long_double();
  acc += pi_.to_long_double() * std::numbers::pi_v<long double>;
  for (const auto& [p, c] : logs_)
    acc += c.to_long_double() * std::log(static_cast<long double>(p));
  const double out = static_cast<double>(acc);
  if (!std::isfinite(out))
    throw OverflowError("exact value exceeds binary64 range");
  return out;
}

}  // namespace distft::exact
