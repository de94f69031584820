#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "dtknot/bigint.hpp"
#include "dtknot/errors.hpp"

namespace dtknot {

/// Exponent pair of a monomial a^ea * q^eq.  Comparison is a-major,
/// q-minor; this single ordering serves both as the canonical output order
/// and as the term order of the division algorithm.
struct ExpPair {
  int ea = 0;
  int eq = 0;
  friend constexpr auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

/// Sparse bivariate Laurent polynomial in q and a with BigInt coefficients,
/// i.e. an element of Z[q^{1}, q^{-1}, a^{1}, a^{-1}].
///
/// The representation is always canonical: no stored coefficient is zero and
/// the zero polynomial is the empty map, so structural equality (operator==)
/// is ring equality.  All operations return new values; nothing is mutated
/// behind the caller's back, which makes the type safe to share across
/// threads.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpPair, BigInt>;

  LaurentPoly() = default;  // the zero polynomial
  explicit LaurentPoly(BigInt constant);
  explicit LaurentPoly(long long constant);

  static LaurentPoly zero() { return LaurentPoly{}; }
  static LaurentPoly one() { return LaurentPoly{1}; }
  /// c * q^eq * a^ea
  static LaurentPoly monomial(BigInt c, int eq, int ea);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Coefficient of q^eq a^ea; zero if the monomial is absent.
  BigInt coeff(int eq, int ea) const;
  /// True if any monomial carries a nonzero power of a.
  bool depends_on_a() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  LaurentPoly pow(unsigned e) const;

  /// Bar involution q -> q^{-1}, a -> a^{-1}.
  LaurentPoly bar() const;

  /// Substitute a -> q^n; every monomial of the result has ea == 0.
  LaurentPoly specialize_a(int n) const;

  /// Exact evaluation at a rational point; q0 and a0 must be nonzero
  /// because of the negative exponents.
  BigRational evaluate(const BigRational& q0, const BigRational& a0) const;

  /// ASCII rendering in canonical order, e.g. "a^2*q^-2 + a^2*q^2 - a^4".
  std::string to_text() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_text();
  }

 private:
  void add_term(ExpPair e, const BigInt& c);

  TermMap terms_;
};

/// num = quotient * den + remainder; the division was exact iff remainder is
/// zero.  When den does not divide num, remainder is the first residue the
/// reduction cannot cancel (nonzero by construction).
struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Division in Z[q^{±1}, a^{±1}].  Operands are first shifted by monomial
/// units so that both are ordinary polynomials, then reduced term by term in
/// the a-major/q-minor order; monomial units are restored on the way out.
/// Throws ZeroDenominatorError when den is zero.
DivisionResult divide(const LaurentPoly& num, const LaurentPoly& den);

/// Exact division failed; carries the nonzero residue as evidence.
class InexactDivisionError : public std::runtime_error {
 public:
  explicit InexactDivisionError(LaurentPoly remainder);
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// Quotient num/den when it exists in the ring; otherwise throws
/// InexactDivisionError carrying the residue.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace dtknot
