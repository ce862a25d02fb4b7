#include "distft/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "distft/errors.hpp"

namespace distft::dist {

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;
  char var;  // 'x' or 'k'

  bool eof() const { return pos >= s.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < s.size() ? s[pos + ahead] : '\0';
  }
  void skip_ws() {
    while (!eof() && s[pos] == ' ') ++pos;
  }
  bool consume(std::string_view tok) {
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  bool lookahead(std::string_view tok) const {
    return s.substr(pos, tok.size()) == tok;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("parse error at offset " + std::to_string(pos) +
                         ": expected " + expected,
                     pos, expected);
  }

  bool at_digit() const {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  Rational rational(bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && peek() == '-') ++pos;
    if (!at_digit()) fail("digit");
    while (at_digit()) ++pos;
    // '/2' style denominators; don't swallow '/...' that isn't numeric
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos;
      while (at_digit()) ++pos;
    }
    return Rational::from_string(s.substr(start, pos - start));
  }

  unsigned long uinteger() {
    const std::size_t start = pos;
    while (at_digit()) ++pos;
    if (pos == start) fail("unsigned integer");
    try {
      return std::stoul(std::string(s.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer in range");
    }
  }
};

// a word boundary so "pi" does not eat the front of "pix" etc.
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct TermParts {
  Coeff coeff = Coeff::one();
  std::optional<DistTerm> prim;
};

class ExprParser {
 public:
  ExprParser(std::string_view s, Side side)
      : in_{s, 0, side == Side::X ? 'x' : 'k'}, side_(side) {}

  DistExpr run() {
    DistExpr out(side_);
    in_.skip_ws();
    bool neg = in_.consume("-");
    for (;;) {
      in_.skip_ws();
      TermParts t = term();
      Coeff c = neg ? -t.coeff : t.coeff;
      out.append(c, t.prim.value_or(DistTerm::constant()));
      in_.skip_ws();
      if (in_.eof()) break;
      if (in_.consume("+"))
        neg = false;
      else if (in_.consume("-"))
        neg = true;
      else
        in_.fail("'+', '-' or end of input");
    }
    return out;
  }

 private:
  TermParts term() {
    TermParts t;
    for (;;) {
      factor(t);
      in_.skip_ws();
      if (in_.peek() == '*') {
        ++in_.pos;
        in_.skip_ws();
        if (t.prim) in_.fail("no factor after a primitive");
        continue;
      }
      break;
    }
    return t;
  }

  void factor(TermParts& t) {
    const char c = in_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = in_.rational(false);
      if (in_.peek() == 'i' && !ident_char(in_.peek(1))) {
        ++in_.pos;
        t.coeff = t.coeff * Coeff::imaginary(q);
      } else {
        t.coeff = t.coeff.scaled(q);
      }
      return;
    }
    if (c == '(') {
      if (in_.lookahead(std::string("(i") + in_.var + ")")) {
        t.prim = ik_prim();
        return;
      }
      t.coeff = t.coeff * complex_coeff();
      return;
    }
    if (c == 'i' && !ident_char(in_.peek(1))) {
      ++in_.pos;
      t.coeff = t.coeff * Coeff::i();
      return;
    }
    if (in_.lookahead("pi") && !ident_char(in_.peek(2))) {
      in_.pos += 2;
      t.coeff = t.coeff * pi_factor();
      return;
    }
    if (in_.lookahead("sqrt(")) {
      in_.pos += 5;
      if (in_.consume("pi")) {
        t.coeff = t.coeff * Coeff::pi_pow_half(1);
      } else {
        const unsigned long v = in_.uinteger();
        if (v == 0) in_.fail("positive radicand");
        t.coeff = t.coeff * Coeff(Rational(1), Rational(0), 0, v);
      }
      if (!in_.consume(")")) in_.fail("')'");
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.prim = prim();
      return;
    }
    in_.fail("coefficient or primitive");
  }

  Coeff pi_factor() {
    // after "pi": optional ^(rat); pi alone is pi^1
    if (in_.consume("^(")) {
      const Rational e = in_.rational(true);
      if (!in_.consume(")")) in_.fail("')'");
      const Rational h = e * Rational(2);
      if (!h.is_integer()) in_.fail("pi exponent with denominator 1 or 2");
      return Coeff::pi_pow_half(static_cast<int>(h.to_long()));
    }
    return Coeff::pi_pow_half(2);
  }

  Coeff complex_coeff() {
    if (!in_.consume("(")) in_.fail("'('");
    const Rational re = in_.rational(true);
    bool neg_im;
    if (in_.consume("+"))
      neg_im = false;
    else if (in_.consume("-"))
      neg_im = true;
    else
      in_.fail("'+' or '-' inside complex coefficient");
    Rational im = in_.rational(false);
    if (!in_.consume("i")) in_.fail("'i'");
    if (!in_.consume(")")) in_.fail("')'");
    return Coeff(re, neg_im ? -im : im);
  }

  DistTerm ik_prim() {
    // "(ik)^(" rat ")"
    in_.pos += 4;
    if (!in_.consume("^(")) in_.fail("'^('");
    const Rational a = in_.rational(true);
    if (!in_.consume(")")) in_.fail("')'");
    return checked([&] { return DistTerm::ik_power(a); });
  }

  // Builds a term, converting invariant violations into parse errors.
  template <typename F>
  DistTerm checked(F&& f) {
    try {
      return f();
    } catch (const DomainError& e) {
      in_.fail(std::string("valid parameters (") + e.what() + ")");
    }
  }

  int theta_suffix_side() {
    // after "theta": optional "(-x)"
    if (in_.consume(std::string("(-") + in_.var + ")")) return -1;
    return +1;
  }

  DistTerm prim() {
    if (in_.consume("theta")) {
      const int side = theta_suffix_side();
      return DistTerm::one_sided(Rational(0), side);
    }
    if (in_.consume("sgn")) return DistTerm::sgn();
    if (in_.consume("delta")) {
      long n = 0;
      Rational shift(0);
      if (in_.consume("^(")) {
        n = static_cast<long>(in_.uinteger());
        if (!in_.consume(")")) in_.fail("')'");
      }
      if (in_.consume("@")) shift = in_.rational(true);
      return checked([&] { return DistTerm::delta(n, shift); });
    }
    if (in_.consume("exp(")) {
      bool neg = in_.consume("-");
      if (!in_.consume("i")) in_.fail("'i'");
      Rational a(1);
      if (in_.peek() != in_.var) a = in_.rational(true);
      if (!in_.consume(std::string(1, in_.var))) in_.fail("variable letter");
      if (!in_.consume(")")) in_.fail("')'");
      return DistTerm::exp_line(neg ? -a : a);
    }
    if (in_.consume("fd(")) {
      const Rational b = in_.rational(true);
      if (!in_.consume(")")) in_.fail("')'");
      return checked([&] { return DistTerm::fermi_dirac(b); });
    }
    if (in_.consume("be(")) {
      const Rational b = in_.rational(true);
      if (!in_.consume(")")) in_.fail("')'");
      return checked([&] { return DistTerm::bose_einstein(b); });
    }
    if (in_.lookahead("csch(") || in_.lookahead("coth(")) {
      const bool is_csch = in_.peek() == 'c' && in_.peek(1) == 's';
      in_.pos += 5;
      Rational q(1);
      if (!in_.lookahead("pi")) {
        q = in_.rational(true);
        if (!in_.consume("*")) in_.fail("'*pi'");
      }
      if (!in_.consume("pi")) in_.fail("'pi'");
      if (!in_.consume(")")) in_.fail("')'");
      return checked([&] {
        return is_csch ? DistTerm::csch_pi(q) : DistTerm::coth_pi(q);
      });
    }
    if (in_.peek() == in_.var && in_.peek(1) == '^') {
      in_.pos += 2;
      Rational e(0);
      if (in_.peek() == '(') {
        ++in_.pos;
        e = in_.rational(true);
        if (!in_.consume(")")) in_.fail("')'");
      } else {
        e = in_.rational(true);
      }
      if (!e.denominator_is_one_or_two())
        in_.fail("exponent with denominator 1 or 2");
      if (in_.lookahead("*theta")) {
        in_.pos += 6;
        const int side = theta_suffix_side();
        return checked([&] { return DistTerm::one_sided(e, side); });
      }
      if (in_.lookahead("*sgn")) {
        in_.pos += 4;
        if (!e.is_integer() || e.sign() < 1)
          in_.fail("positive integer exponent before '*sgn'");
        return DistTerm::sgn_power(e.to_long());
      }
      if (e.is_integer()) {
        const long n = e.to_long();
        if (n > 0) return DistTerm::monomial(n);
        if (n < 0) return DistTerm::neg_power(-n);
        return DistTerm::constant();
      }
      // half-integer full-line power x^(2n+1)/2
      const mpz_class num = e.num();  // odd
      const mpz_class n2 = (num - 1) / 2;
      if (!n2.fits_slong_p()) in_.fail("half-integer exponent in range");
      return DistTerm::half_power_full(n2.get_si());
    }
    in_.fail("primitive");
  }

  Scanner in_;
  Side side_;
};

}  // namespace

DistExpr parse_expr(std::string_view s, Side side) {
  if (s.empty()) throw ParseError("empty expression", 0, "expression");
  return ExprParser(s, side).run();
}

}  // namespace distft::dist
