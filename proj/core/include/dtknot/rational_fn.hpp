#pragma once

#include <utility>

#include "dtknot/laurent.hpp"

namespace dtknot {

/// Element of the fraction field of Z[q^{±1}, a^{±1}], stored as an
/// unreduced numerator/denominator pair.  Fractions are never brought to
/// lowest terms; equality is cross-multiplication.  The denominator is
/// nonzero by construction.
class RationalFn {
 public:
  RationalFn() : num_(), den_(LaurentPoly::one()) {}
  RationalFn(LaurentPoly numerator)  // NOLINT: polynomials embed implicitly
      : num_(std::move(numerator)), den_(LaurentPoly::one()) {}
  RationalFn(LaurentPoly numerator, LaurentPoly denominator);

  static RationalFn zero() { return RationalFn{}; }
  static RationalFn one() { return RationalFn{LaurentPoly::one()}; }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn operator-() const;

  friend RationalFn operator+(RationalFn lhs, const RationalFn& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend RationalFn operator-(RationalFn lhs, const RationalFn& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend RationalFn operator*(RationalFn lhs, const RationalFn& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// x == y  iff  x.num * y.den == y.num * x.den.
  friend bool operator==(const RationalFn& lhs, const RationalFn& rhs) {
    return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace dtknot
