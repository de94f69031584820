#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtknot/invariant.hpp"

using namespace dtknot;

namespace {

LaurentPoly mono(long long c, int eq, int ea) {
  return LaurentPoly::monomial(BigInt(c), eq, ea);
}

}  // namespace

TEST_CASE("parameter normalization") {
  CHECK(normalize_params(0, 7) == NormalizedKnot{KnotForm::Unknot, 0, 0});
  CHECK(normalize_params(3, 0) == NormalizedKnot{KnotForm::Unknot, 0, 0});
  CHECK(normalize_params(-1, 1) == NormalizedKnot{KnotForm::Standard, -1, 1});
  CHECK(normalize_params(2, 5) == NormalizedKnot{KnotForm::Standard, 2, 5});
  CHECK(normalize_params(1, -1) == NormalizedKnot{KnotForm::Standard, -1, 1});
  CHECK(normalize_params(3, -2) == NormalizedKnot{KnotForm::Standard, -2, 3});
  CHECK(normalize_params(-1, -1) == NormalizedKnot{KnotForm::Mirror, 1, 1});
  CHECK(normalize_params(-2, -3) == NormalizedKnot{KnotForm::Mirror, 2, 3});
}

TEST_CASE("frozen invariant values") {
  for (int p = -2; p <= 2; ++p)
    for (int s = -2; s <= 2; ++s) CHECK(homfly_double_twist({p, s, 0}).is_one());

  // trefoil, N = 1: a^2 q^2 + a^2 q^{-2} - a^4
  CHECK(homfly_double_twist({1, 1, 1}) == mono(1, 2, 2) + mono(1, -2, 2) + mono(-1, 0, 4));
  // figure-eight, N = 1: 1 + a^2 + a^{-2} - q^2 - q^{-2}
  CHECK(homfly_double_twist({-1, 1, 1}) ==
        LaurentPoly::one() + mono(1, 0, 2) + mono(1, 0, -2) + mono(-1, 2, 0) +
            mono(-1, -2, 0));
  CHECK_THROWS_AS(homfly_double_twist({1, 1, -1}), IndexOutOfRangeError);
}

TEST_CASE("closed-form specials match the general evaluator") {
  CHECK(homfly_special(SpecialKnot::Trefoil31, 1) ==
        mono(1, 2, 2) + mono(1, -2, 2) + mono(-1, 0, 4));
  CHECK(homfly_special(SpecialKnot::FigureEight41, 0).is_one());

  for (int N = 0; N <= 4; ++N) {
    CHECK(homfly_special(SpecialKnot::Trefoil31, N) == homfly_double_twist({1, 1, N}));
    CHECK(homfly_special(SpecialKnot::FigureEight41, N) ==
          homfly_double_twist({-1, 1, N}));
    CHECK(homfly_special(SpecialKnot::FiveTwo52, N) == homfly_double_twist({2, 1, N}));
    CHECK(homfly_special(SpecialKnot::SixOne61, N) == homfly_double_twist({-2, 1, N}));
  }
}

TEST_CASE("symmetry in the twist parameters") {
  for (int p = -2; p <= 2; ++p)
    for (int s = -2; s <= 2; ++s)
      for (int N = 0; N <= 3; ++N)
        CHECK(homfly_double_twist({p, s, N}) == homfly_double_twist({s, p, N}));
}

TEST_CASE("mirror image is the bar image") {
  for (int p = -2; p <= 2; ++p)
    for (int s = -2; s <= 2; ++s)
      for (int N = 0; N <= 3; ++N)
        CHECK(homfly_double_twist({-p, -s, N}) ==
              homfly_double_twist({p, s, N}).bar());
}

TEST_CASE("figure-eight is amphichiral") {
  for (int N = 0; N <= 5; ++N) {
    const LaurentPoly h = homfly_double_twist({-1, 1, N});
    CHECK(h.bar() == h);
  }
}

TEST_CASE("trefoil prefactor collapses to a monomial") {
  for (int k = 0; k <= 6; ++k) {
    const BigInt sign = (k % 2 == 0) ? 1 : -1;
    CHECK(LaurentPoly::monomial(sign, 4 * k * (k - 1), 4 * k) * c_tilde(k, 1) *
              c_tilde(k, 1) ==
          LaurentPoly::monomial(sign, k * (k - 1), 2 * k));
  }
}

TEST_CASE("SU(n) specialization") {
  CHECK(su_n_invariant({1, 1, 1}, 2) == mono(-1, 8, 0) + mono(1, 6, 0) + mono(1, 2, 0));
  for (int N = 0; N <= 4; ++N) {
    CHECK(su_n_invariant({1, 1, N}, 1).is_one());
    CHECK(su_n_invariant({-2, 1, N}, 1).is_one());
    CHECK(su_n_invariant({2, 2, N}, 1).is_one());
  }
  CHECK(su_n_invariant({3, -2, 0}, 4).is_one());
  CHECK(!su_n_invariant({1, 1, 2}, 3).depends_on_a());
  CHECK_THROWS_AS(su_n_invariant({1, 1, 1}, 0), IndexOutOfRangeError);
}

TEST_CASE("printed a = q^2 forms") {
  CHECK(jones_a_q2_printed(2, 0).is_one());
  for (int N = 0; N <= 6; ++N) {
    CHECK(jones_a_q2_printed(2, N) == su_n_invariant({2, 1, N}, 2));
    CHECK(jones_a_q2_printed(-2, N) == su_n_invariant({-2, 1, N}, 2));
  }
  CHECK_THROWS_AS(jones_a_q2_printed(1, 2), IndexOutOfRangeError);
}

TEST_CASE("memoized twist coefficients match the direct computation") {
  for (int k = 0; k <= 6; ++k)
    for (int p = -3; p <= 3; ++p) {
      CHECK(c_tilde_cached(k, p) == c_tilde(k, p));
      CHECK(c_tilde_cached(k, p) == c_tilde_cached(k, p));  // stable on re-read
    }
}
