#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dtknot/invariant.hpp"
#include "dtknot/output.hpp"
#include "dtknot/version.hpp"

using namespace dtknot;

namespace {

LaurentPoly mono(long long c, int eq, int ea) {
  return LaurentPoly::monomial(BigInt(c), eq, ea);
}

OutputRecord random_record(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> n_terms(0, 6);
  std::uniform_int_distribution<int> pick(0, 3);
  OutputRecord rec;
  rec.p = small(rng);
  rec.s = small(rng);
  rec.N = std::abs(small(rng));
  if (pick(rng) == 0) rec.sun = 1 + std::abs(small(rng));
  const int t = n_terms(rng);
  for (int i = 0; i < t; ++i)
    rec.polynomial += mono(small(rng), small(rng), small(rng));
  rec.formula = pick(rng) < 2 ? "theorem-1.2" : "special-4_1";
  return rec;
}

}  // namespace

TEST_CASE("text and latex formats") {
  OutputRecord rec;
  SUBCASE("zero polynomial") {
    CHECK(format_output(rec, OutputFormat::Text) == "0");
    CHECK(format_output(rec, OutputFormat::Latex) == "0");
  }
  SUBCASE("single negative monomial") {
    rec.polynomial = mono(-1, 0, -1);
    CHECK(format_output(rec, OutputFormat::Text) == "-a^-1");
    CHECK(format_output(rec, OutputFormat::Latex) == "-a^{-1}");
  }
  SUBCASE("trefoil at N = 1") {
    rec.polynomial = mono(1, -2, 2) + mono(1, 2, 2) + mono(-1, 0, 4);
    CHECK(format_output(rec, OutputFormat::Text) == "a^2*q^-2 + a^2*q^2 - a^4");
    CHECK(format_output(rec, OutputFormat::Latex) ==
          "a^{2}q^{-2} + a^{2}q^{2} - a^{4}");
  }
  SUBCASE("exponent one renders bare") {
    rec.polynomial = mono(2, 1, 1);
    CHECK(format_output(rec, OutputFormat::Text) == "2*a*q");
    CHECK(format_output(rec, OutputFormat::Latex) == "2aq");
  }
}

TEST_CASE("json schema line") {
  OutputRecord rec;
  rec.p = 1;
  rec.s = 1;
  rec.N = 1;
  rec.polynomial = homfly_double_twist({1, 1, 1});
  const std::string line = format_output(rec, OutputFormat::Json);
  CHECK(line ==
        std::string("{\"knot\":{\"p\":1,\"s\":1},\"N\":1,\"variable_spec\":"
                    "\"generic_a\",\"polynomial\":[{\"ea\":2,\"eq\":-2,\"c\":\"1\"},"
                    "{\"ea\":2,\"eq\":2,\"c\":\"1\"},{\"ea\":4,\"eq\":0,\"c\":\"-1\"}],"
                    "\"meta\":{\"version\":\"") +
            kVersion + "\",\"formula\":\"theorem-1.2\"}}");
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("specialized records carry the exponent") {
  OutputRecord rec;
  rec.p = 2;
  rec.s = 1;
  rec.N = 0;
  rec.sun = 3;
  rec.polynomial = LaurentPoly::one();
  const std::string line = format_output(rec, OutputFormat::Json);
  CHECK(line.find("\"variable_spec\":{\"a_eq_qn\":3}") != std::string::npos);
  CHECK(parse_json_record(line) == rec);
}

TEST_CASE("huge coefficients survive the round trip") {
  OutputRecord rec;
  rec.polynomial = LaurentPoly::monomial(BigInt("12345678901234567890"), 1, 0) +
                   LaurentPoly::monomial(BigInt("-98765432109876543210987654321"), -2, 3);
  const std::string line = format_output(rec, OutputFormat::Json);
  CHECK(line.find("\"12345678901234567890\"") != std::string::npos);
  CHECK(parse_json_record(line) == rec);
}

TEST_CASE("json round-trip on random canonical records") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const OutputRecord rec = random_record(rng);
    CHECK(parse_json_record(format_output(rec, OutputFormat::Json)) == rec);
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(parse_json_record("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_record("{\"knot\":{}}"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_json_record("{\"knot\":{\"p\":1,\"s\":1},\"N\":0,\"variable_spec\":"
                        "\"weird\",\"polynomial\":[],\"meta\":{\"version\":\"0\","
                        "\"formula\":\"f\"}}"),
      std::invalid_argument);
}

TEST_CASE("distinct polynomials render distinctly") {
  // spot checks for injectivity hazards: coefficient vs exponent collisions
  const LaurentPoly two_a = mono(2, 0, 1);
  const LaurentPoly a_sq = mono(1, 0, 2);
  CHECK(two_a.to_text() != a_sq.to_text());
  CHECK(latex_polynomial(two_a) != latex_polynomial(a_sq));
  const LaurentPoly q12 = mono(1, 12, 0);
  const LaurentPoly twelve_q = mono(12, 1, 0);
  CHECK(q12.to_text() != twelve_q.to_text());
  CHECK(latex_polynomial(q12) != latex_polynomial(twelve_q));
}
