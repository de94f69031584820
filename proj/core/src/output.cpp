#include "dtknot/output.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dtknot/version.hpp"

namespace dtknot {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_term(const BigInt& mag, int ea, int eq) {
  std::string vars;
  const auto append_var = [&vars](char v, int e) {
    if (e == 0) return;
    vars += v;
    if (e != 1) vars += "^{" + std::to_string(e) + "}";
  };
  append_var('a', ea);
  append_var('q', eq);
  if (vars.empty()) return mag.str();
  return (mag == 1 ? std::string{} : mag.str()) + vars;
}

}  // namespace

std::string latex_polynomial(const LaurentPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += latex_term(negative ? BigInt(-c) : c, e.ea, e.eq);
  }
  return out;
}

std::string format_output(const OutputRecord& rec, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      return rec.polynomial.to_text();
    case OutputFormat::Latex:
      return latex_polynomial(rec.polynomial);
    case OutputFormat::Json:
      break;
  }

  ordered_json j;
  j["knot"] = {{"p", rec.p}, {"s", rec.s}};
  j["N"] = rec.N;
  if (rec.sun)
    j["variable_spec"] = ordered_json{{"a_eq_qn", *rec.sun}};
  else
    j["variable_spec"] = "generic_a";
  ordered_json monomials = ordered_json::array();
  for (const auto& [e, c] : rec.polynomial.terms())
    monomials.push_back({{"ea", e.ea}, {"eq", e.eq}, {"c", c.str()}});
  j["polynomial"] = std::move(monomials);
  j["meta"] = {{"version", kVersion}, {"formula", rec.formula}};
  return j.dump();
}

OutputRecord parse_json_record(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
  try {
    OutputRecord rec;
    rec.p = j.at("knot").at("p").get<int>();
    rec.s = j.at("knot").at("s").get<int>();
    rec.N = j.at("N").get<int>();
    const auto& spec = j.at("variable_spec");
    if (spec.is_string()) {
      if (spec.get<std::string>() != "generic_a")
        throw std::invalid_argument("unknown variable_spec");
    } else {
      rec.sun = spec.at("a_eq_qn").get<int>();
    }
    for (const auto& m : j.at("polynomial")) {
      const std::string c = m.at("c").get<std::string>();
      rec.polynomial += LaurentPoly::monomial(BigInt(c), m.at("eq").get<int>(),
                                              m.at("ea").get<int>());
    }
    rec.formula = j.at("meta").at("formula").get<std::string>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

}  // namespace dtknot
