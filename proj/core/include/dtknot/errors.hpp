#pragma once

#include <stdexcept>
#include <string>

namespace dtknot {

/// A fraction was constructed or used with a zero denominator.
class ZeroDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index falls outside the range on which a coefficient formula is defined.
class IndexOutOfRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition parts do not add up to the stated total.
class SumMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtknot
