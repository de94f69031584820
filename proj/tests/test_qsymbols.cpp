#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtknot/qsymbols.hpp"

using namespace dtknot;

namespace {

LaurentPoly mono(long long c, int eq, int ea) {
  return LaurentPoly::monomial(BigInt(c), eq, ea);
}

// Independent construction of the balanced q-binomial via the Pascal
// recursion; used as the oracle for the division-based implementation.
LaurentPoly pascal_qbinom(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentPoly::one();
  return mono(1, k, 0) * pascal_qbinom(n - 1, k) +
         mono(1, k - n, 0) * pascal_qbinom(n - 1, k - 1);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2) == mono(1, 1, 0) + mono(1, -1, 0));
  for (int n = -8; n <= 8; ++n) CHECK(qint(-n) == -qint(n));
}

TEST_CASE("brace symbols") {
  CHECK(brace(0).is_zero());
  CHECK(brace(3) == mono(1, 3, 0) - mono(1, -3, 0));
  CHECK(brace_a(-1) == mono(1, -1, 1) - mono(1, 1, -1));
  CHECK(brace_a(0) == mono(1, 0, 1) - mono(1, 0, -1));
}

TEST_CASE("falling products") {
  for (int n : {-3, 0, 2, 7}) CHECK(brace_ff(n, 0).is_one());
  CHECK(brace_a_ff(-1, 1) == brace_a(-1));
  CHECK(brace_a_ff(0, 2) == brace_a(0) * brace_a(-1));
  CHECK(qint_ff(4, 2) == qint(4) * qint(3));
  CHECK(brace_ff(3, 5).is_zero());  // runs through {0}
  CHECK_THROWS_AS(brace_ff(3, -1), IndexOutOfRangeError);
}

TEST_CASE("ascending two-variable products") {
  CHECK(brace_a_rising(1, 0).is_one());
  CHECK(brace_a_rising(1, 1) == brace_a(-1));
  CHECK(brace_a_rising(2, 3) == brace_a(-2) * brace_a(-1) * brace_a(0));
}

TEST_CASE("factorials") {
  CHECK(qfact(0).is_one());
  CHECK(qfact(2) == brace(2) * brace(1));
  CHECK(qint_fact(3) == qint(3) * qint(2) * qint(1));
  CHECK_THROWS_AS(qfact(-1), IndexOutOfRangeError);
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(2, 1) == mono(1, 1, 0) + mono(1, -1, 0));
  CHECK(qbinom(4, 2) ==
        mono(1, 4, 0) + mono(1, 2, 0) + mono(2, 0, 0) + mono(1, -2, 0) + mono(1, -4, 0));
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(3, 4).is_zero());
}

TEST_CASE("q-binomials match the Pascal oracle") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(qbinom(n, k) == pascal_qbinom(n, k));
}

TEST_CASE("q-binomial symmetry and bar-invariance") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinom(n, k) == qbinom(n, n - k));
      CHECK(qbinom(n, k).bar() == qbinom(n, k));
    }
}

TEST_CASE("brace and quantum integer are proportional") {
  for (int n = -20; n <= 20; ++n) CHECK(brace(n) == brace(1) * qint(n));
}

TEST_CASE("two-variable products specialize to one-variable products") {
  for (int m = -5; m <= 5; ++m)
    for (int i = 0; i <= 4; ++i)
      for (int n = -3; n <= 3; ++n)
        CHECK(brace_a_ff(m, i).specialize_a(n) == brace_ff(m + n, i));
}

TEST_CASE("q-multinomials") {
  CHECK(qmultinom(3, Composition{3}).is_one());
  CHECK(qmultinom(2, Composition{1, 1}) == qint(2));
  CHECK(qmultinom(1, Composition{1, 0}).is_one());
  CHECK(qmultinom(0, Composition{}).is_one());
  CHECK(qmultinom(4, Composition{2, 2}) == qbinom(4, 2));
  CHECK_THROWS_AS(qmultinom(3, Composition{1, 1}), SumMismatchError);
}

TEST_CASE("multinomial equals factorial quotient") {
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2)
      for (int l3 = 0; l3 <= 2; ++l3) {
        const int n = l1 + l2 + l3;
        const LaurentPoly expected =
            exact_div(qint_fact(n), qint_fact(l1) * qint_fact(l2) * qint_fact(l3));
        CHECK(qmultinom(n, Composition{l1, l2, l3}) == expected);
      }
}
