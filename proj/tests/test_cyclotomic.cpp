#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtknot/cyclotomic.hpp"

using namespace dtknot;

namespace {

LaurentPoly mono(long long c, int eq, int ea) {
  return LaurentPoly::monomial(BigInt(c), eq, ea);
}

}  // namespace

TEST_CASE("basis coefficients") {
  for (int N = 0; N <= 5; ++N)
    for (int n = 1; n <= 4; ++n) CHECK(basis_coeff(N, 0, n).is_one());
  CHECK(basis_coeff(1, 1, 2) == brace(1) * brace(3));
  CHECK(basis_coeff(2, 2, 2) == brace(1) * brace(2) * brace(4) * brace(5));
  CHECK(basis_coeff(3, 2, 3) == brace(2) * brace(3) * brace(6) * brace(7));
  for (int N = 0; N <= 6; ++N)
    for (int k = 0; k <= N; ++k)
      for (int n = 1; n <= 4; ++n) CHECK(!basis_coeff(N, k, n).depends_on_a());
}

TEST_CASE("ladder factor identity behind the closed form") {
  // [N over k] {N+k-1; a}_k at a = q^n times {k}! equals the basis coefficient.
  for (int N = 0; N <= 6; ++N)
    for (int k = 0; k <= N; ++k)
      for (int n = 1; n <= 4; ++n)
        CHECK((qbinom(N, k) * brace_a_ff(N + k - 1, k)).specialize_a(n) * qfact(k) ==
              basis_coeff(N, k, n));
}

TEST_CASE("extraction on the trefoil at n = 2") {
  const CyclotomicData data = extract_cyclotomic(1, 1, 2, 3);
  REQUIRE(data.status.ok());
  REQUIRE(data.coefficients.size() == 4);
  CHECK(data.coefficients[0].is_one());
  CHECK(data.coefficients[1] == mono(-1, 4, 0));  // H_1 = -q^4
  CHECK(data.checked_colors == std::vector<int>{0, 1, 2, 3});
  for (const LaurentPoly& h : data.coefficients) CHECK(!h.depends_on_a());
}

TEST_CASE("unknot extraction is trivial") {
  const CyclotomicData data = extract_cyclotomic(0, 1, 3, 4);
  REQUIRE(data.status.ok());
  CHECK(data.coefficients[0].is_one());
  for (std::size_t k = 1; k < data.coefficients.size(); ++k)
    CHECK(data.coefficients[k].is_zero());
}

TEST_CASE("n = 1 extraction degenerates to zero coefficients") {
  const CyclotomicData data = verify_conjecture(2, 1, 1, 3, 2);
  CHECK(data.status.ok());
  for (std::size_t k = 1; k < data.coefficients.size(); ++k)
    CHECK(data.coefficients[k].is_zero());
}

TEST_CASE("closed form coefficients") {
  CHECK(hk_closed_form(1, 1, 2, 0).is_one());
  CHECK(hk_closed_form(1, 1, 2, 1) == mono(-1, 4, 0));
  for (int k = 0; k <= 4; ++k) CHECK(!hk_closed_form(-1, 1, 3, k).depends_on_a());
}

TEST_CASE("closed form agrees with extraction") {
  const std::pair<int, int> pairs[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {2, 2}};
  for (auto [p, s] : pairs)
    for (int n = 2; n <= 3; ++n) {
      const CyclotomicData data = extract_cyclotomic(p, s, n, 3);
      REQUIRE(data.status.ok());
      for (int k = 0; k <= 3; ++k)
        CHECK(data.coefficients[static_cast<std::size_t>(k)] ==
              hk_closed_form(p, s, n, k));
    }
}

TEST_CASE("mirror extraction is bar-dual") {
  for (auto [p, s] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
    for (int n = 2; n <= 3; ++n) {
      const CyclotomicData knot = extract_cyclotomic(p, s, n, 3);
      const CyclotomicData mirror = extract_cyclotomic(-p, -s, n, 3);
      REQUIRE(knot.status.ok());
      REQUIRE(mirror.status.ok());
      for (int k = 0; k <= 3; ++k)
        CHECK(mirror.coefficients[static_cast<std::size_t>(k)] ==
              knot.coefficients[static_cast<std::size_t>(k)].bar());
    }
}

TEST_CASE("full verification on a spot of the grid") {
  const CyclotomicData data = verify_conjecture(1, 1, 2, 4, 2);
  CHECK(data.status.ok());
  CHECK(data.checked_colors == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const CyclotomicData fig8 = verify_conjecture(-1, 1, 3, 3, 2);
  CHECK(fig8.status.ok());
}

TEST_CASE("tampered coefficients are caught at a fresh color") {
  CyclotomicData data = extract_cyclotomic(1, 1, 2, 3);
  REQUIRE(data.status.ok());
  data.coefficients[1] += LaurentPoly::one();  // perturb H_1 by +1
  const VerificationStatus status =
      recheck_expansion(1, 1, 2, data.coefficients, {4, 5});
  CHECK(!status.ok());
  CHECK(status.kind == VerificationStatus::Kind::MismatchAt);
  CHECK(status.index == 4);
}

TEST_CASE("honest recheck passes") {
  const CyclotomicData data = extract_cyclotomic(2, 1, 2, 3);
  REQUIRE(data.status.ok());
  CHECK(recheck_expansion(2, 1, 2, data.coefficients, {4, 5}).ok());
}
