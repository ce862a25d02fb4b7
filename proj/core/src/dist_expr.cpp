#include "distft/dist_expr.hpp"

#include <algorithm>

#include "distft/errors.hpp"

namespace distft::dist {

DistExpr DistExpr::single(Side side, Coeff c, const DistTerm& t) {
  DistExpr e(side);
  e.append(std::move(c), t);
  return e;
}

void DistExpr::insert_merged(const Coeff& c, const DistTerm& t) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), t,
      [](const auto& entry, const DistTerm& key) { return entry.second < key; });
  if (it != terms_.end() && it->second == t) {
    Coeff sum = it->first + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->first = std::move(sum);
  } else {
    terms_.insert(it, {c, t});
  }
}

void DistExpr::append(const Coeff& c, const DistTerm& t) {
  if (c.is_zero()) return;
  const Rational half(1, 2);
  switch (t.kind) {
    case TermKind::Monomial:
      if (t.order == 0) return insert_merged(c, DistTerm::constant());
      break;
    case TermKind::SgnPower:
      if (t.order == 0) return insert_merged(c, DistTerm::sgn());
      break;
    case TermKind::ExpLine:
      if (t.param.is_zero()) return insert_merged(c, DistTerm::constant());
      break;
    case TermKind::OneSided:
      // x^n Theta(+-x) = x^n/2 +- x^n sgn(x)/2 for integer n >= 0
      if (t.param.is_integer() && t.param.sign() >= 0) {
        const long n = t.param.to_long();
        const Coeff h = c.scaled(half);
        const Coeff hs = t.side > 0 ? h : -h;
        append(h, n == 0 ? DistTerm::constant() : DistTerm::monomial(n));
        append(hs, n == 0 ? DistTerm::sgn() : DistTerm::sgn_power(n));
        return;
      }
      break;
    case TermKind::IkPower: {
      if (t.param.is_zero()) return insert_merged(c, DistTerm::constant());
      if (t.param.is_integer()) {
        const long m = t.param.to_long();
        if (m > 0)  // (ik)^m = i^m k^m
          return insert_merged(c.times_i_pow(m), DistTerm::monomial(m));
        // Negative integer powers stay (ik)^-m on the k side (the table's
        // image form); on the x side the canonical object is x^-m.
        if (side_ == Side::X)
          return insert_merged(c.times_i_pow(m), DistTerm::neg_power(-m));
      }
      break;
    }
    default:
      break;
  }
  insert_merged(c, t);
}

DistExpr DistExpr::scaled(const Coeff& c) const {
  DistExpr out(side_);
  if (c.is_zero()) return out;
  for (const auto& [k, t] : terms_) out.insert_merged(k * c, t);
  return out;
}

DistExpr operator+(const DistExpr& a, const DistExpr& b) {
  if (a.side_ != b.side_)
    throw DomainError("cannot add expressions from different sides");
  DistExpr out = a;
  for (const auto& [c, t] : b.terms_) out.insert_merged(c, t);
  return out;
}

DistExpr operator-(const DistExpr& a, const DistExpr& b) {
  return a + b.scaled(Coeff(-1L));
}

std::complex<double> DistExpr::eval(double t, bool exclude_singular) const {
  std::complex<long double> acc{0.0L, 0.0L};
  for (const auto& [c, term] : terms_) {
    if (term.kind == TermKind::Delta) {
      if (t == term.param.to_double()) {
        if (exclude_singular) continue;
        throw SingularPointError("delta evaluated at its support point");
      }
      continue;
    }
    const auto tv = term.eval(t);
    const auto cv = c.to_complex();
    acc += std::complex<long double>(cv.real(), cv.imag()) * tv;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string gaussian_string(const Rational& re, const Rational& im) {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) {
    if (im.is_one()) return "i";
    if (im == Rational(-1)) return "-i";
    return im.to_string() + "i";
  }
  const bool im_neg = im.sign() < 0;
  const Rational im_mag = im_neg ? -im : im;
  return "(" + re.to_string() + (im_neg ? "-" : "+") + im_mag.to_string() +
         "i)";
}

}  // namespace

// Renders a coefficient; with_star appends "*" unless the result is empty
// (coefficient one) or the sign-only "-".
std::string render_coeff(const Coeff& c, bool with_star) {
  std::string out;
  const bool plus_one = c.im().is_zero() && c.re().is_one();
  const bool minus_one = c.im().is_zero() && c.re() == Rational(-1);
  if (minus_one)
    out = "-";
  else if (!plus_one)
    out = gaussian_string(c.re(), c.im());
  auto separate = [&out] {
    if (!out.empty() && out != "-") out += "*";
  };
  if (c.pi_half_power() != 0) {
    separate();
    if (c.pi_half_power() == 2)
      out += "pi";
    else
      out += "pi^(" + Rational(c.pi_half_power(), 2).to_string() + ")";
  }
  if (c.root() != 1) {
    separate();
    out += "sqrt(" + std::to_string(c.root()) + ")";
  }
  if (out == "-") out = with_star ? "-" : "-1";
  else if (with_star && !out.empty()) out += "*";
  return out;
}

std::string DistExpr::render() const {
  if (terms_.empty()) return "0";

  // Pieces in canonical term order; matched {even, odd} pairs recombine to
  // theta forms at the even member's position.
  struct Piece {
    Coeff coeff;
    std::string prim;  // empty for the bare-constant piece
  };
  std::vector<Piece> pieces;
  std::vector<bool> used(terms_.size(), false);

  auto find_odd = [this, &used](TermKind k, long order) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!used[i] && terms_[i].second.kind == k &&
          terms_[i].second.order == order)
        return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };

  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (used[i]) continue;
    const auto& [c, t] = terms_[i];
    if (side_ == Side::X &&
        (t.kind == TermKind::Const || t.kind == TermKind::Monomial)) {
      const bool is_const = t.kind == TermKind::Const;
      const auto j =
          find_odd(is_const ? TermKind::Sgn : TermKind::SgnPower, t.order);
      if (j >= 0) {
        const Coeff& oc = terms_[static_cast<std::size_t>(j)].first;
        const bool plus = c == oc;
        const bool minus = !plus && c == -oc;
        if (plus || minus) {
          used[static_cast<std::size_t>(j)] = true;
          const std::string base =
              is_const ? "" : "x^" + std::to_string(t.order) + "*";
          pieces.push_back(
              {c + c, base + (plus ? "theta" : "theta(-x)")});
          continue;
        }
      }
    }
    if (t.kind == TermKind::Const)
      pieces.push_back({c, ""});
    else
      pieces.push_back({c, t.render(side_)});
  }

  std::string out;
  bool first = true;
  for (const auto& piece : pieces) {
    Coeff c = piece.coeff;
    const bool neg =
        c.re().is_zero() ? c.im().sign() < 0 : c.re().sign() < 0;
    if (first) {
      first = false;
    } else {
      out += neg ? " - " : " + ";
      if (neg) c = -c;
    }
    if (piece.prim.empty()) {
      std::string cs = render_coeff(c, false);
      out += cs.empty() ? "1" : (cs == "-" ? "-1" : cs);
    } else {
      out += render_coeff(c, true) + piece.prim;
    }
  }
  return out;
}

}  // namespace distft::dist
