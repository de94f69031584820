#include "dtknot/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dtknot {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_.emplace(ExpPair{0, 0}, std::move(constant));
}

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly LaurentPoly::monomial(BigInt c, int eq, int ea) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(ExpPair{ea, eq}, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
         terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(int eq, int ea) const {
  auto it = terms_.find(ExpPair{ea, eq});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::depends_on_a() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.ea != 0; });
}

void LaurentPoly::add_term(ExpPair e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Outer loop over the smaller operand; for each of its terms the shifted
  // copy of the other operand arrives in sorted order, so the insertion hint
  // keeps the map walk mostly linear.
  const LaurentPoly& small = lhs.term_count() <= rhs.term_count() ? lhs : rhs;
  const LaurentPoly& large = (&small == &lhs) ? rhs : lhs;
  LaurentPoly out;
  for (const auto& [es, cs] : small.terms_) {
    auto hint = out.terms_.begin();
    for (const auto& [el, cl] : large.terms_) {
      ExpPair e{es.ea + el.ea, es.eq + el.eq};
      hint = out.terms_.lower_bound(e);
      if (hint != out.terms_.end() && hint->first == e) {
        hint->second += cs * cl;
        if (hint->second == 0) hint = out.terms_.erase(hint);
      } else {
        out.terms_.emplace_hint(hint, e, cs * cl);
      }
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(ExpPair{-e.ea, -e.eq}, c);
  return out;
}

LaurentPoly LaurentPoly::specialize_a(int n) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(ExpPair{0, e.eq + n * e.ea}, c);
  return out;
}

namespace {

BigRational rational_pow(const BigRational& base, int e) {
  if (e == 0) return BigRational(1);
  BigRational b = base;
  if (e < 0) {
    b = BigRational(1) / b;
    e = -e;
  }
  BigRational result(1);
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace

BigRational LaurentPoly::evaluate(const BigRational& q0, const BigRational& a0) const {
  if (q0 == 0 || a0 == 0) throw ZeroDenominatorError("evaluation point must be nonzero");
  BigRational sum(0);
  for (const auto& [e, c] : terms_)
    sum += BigRational(c) * rational_pow(a0, e.ea) * rational_pow(q0, e.eq);
  return sum;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    BigInt mag = negative ? BigInt(-c) : c;
    std::string vars;
    if (e.ea != 0) {
      vars += 'a';
      if (e.ea != 1) vars += '^' + std::to_string(e.ea);
    }
    if (e.eq != 0) {
      if (!vars.empty()) vars += '*';
      vars += 'q';
      if (e.eq != 1) vars += '^' + std::to_string(e.eq);
    }
    if (vars.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << '*';
      os << vars;
    }
  }
  return os.str();
}

InexactDivisionError::InexactDivisionError(LaurentPoly remainder)
    : std::runtime_error("inexact division, residue " + remainder.to_text()),
      remainder_(std::move(remainder)) {}

namespace {

struct Shift {
  int ea = 0;
  int eq = 0;
};

Shift min_exponents(const LaurentPoly& p) {
  Shift s{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (const auto& [e, c] : p.terms()) {
    s.ea = std::min(s.ea, e.ea);
    s.eq = std::min(s.eq, e.eq);
  }
  return s;
}

LaurentPoly shifted(const LaurentPoly& p, int dea, int deq) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out += LaurentPoly::monomial(c, e.eq + deq, e.ea + dea);
  return out;
}

}  // namespace

DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDenominatorError("division by the zero polynomial");
  if (num.is_zero()) return {};

  // Multiply both operands by monomial units so all exponents are >= 0.
  const Shift ns = min_exponents(num);
  const Shift ds = min_exponents(den);
  LaurentPoly r = shifted(num, -ns.ea, -ns.eq);
  const LaurentPoly d = shifted(den, -ds.ea, -ds.eq);

  const auto& dlead = *d.terms().rbegin();
  LaurentPoly q;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    // For an exact quotient the divisor's leading term must divide the
    // running leading term at every step, in monomial and in coefficient.
    if (rlead.first.ea < dlead.first.ea || rlead.first.eq < dlead.first.eq ||
        rlead.second % dlead.second != 0)
      break;
    LaurentPoly t = LaurentPoly::monomial(rlead.second / dlead.second,
                                          rlead.first.eq - dlead.first.eq,
                                          rlead.first.ea - dlead.first.ea);
    q += t;
    r -= t * d;
  }

  // Undo the unit shifts: num = q*den + r with the original exponents.
  return {shifted(q, ns.ea - ds.ea, ns.eq - ds.eq), shifted(r, ns.ea, ns.eq)};
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  DivisionResult d = divide(num, den);
  if (!d.remainder.is_zero()) throw InexactDivisionError(std::move(d.remainder));
  return std::move(d.quotient);
}

}  // namespace dtknot
