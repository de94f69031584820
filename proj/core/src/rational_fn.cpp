#include "dtknot/rational_fn.hpp"

namespace dtknot {

RationalFn::RationalFn(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ZeroDenominatorError("zero denominator");
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

}  // namespace dtknot
