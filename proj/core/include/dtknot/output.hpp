#pragma once

#include <optional>
#include <string>

#include "dtknot/laurent.hpp"

namespace dtknot {

enum class OutputFormat { Json, Latex, Text };

/// One computed invariant, ready for serialization.  The polynomial is kept
/// canonical (sorted a-major/q-minor ascending, no zero coefficients) by the
/// LaurentPoly representation itself; coefficients are serialized as decimal
/// strings so that exactness survives any JSON reader.
struct OutputRecord {
  int p = 0;
  int s = 0;
  int N = 0;
  /// Engaged: the a = q^n specialization was applied; empty: generic a.
  std::optional<int> sun;
  LaurentPoly polynomial;
  /// Which formula produced the value: "theorem-1.2", "special-3_1",
  /// "special-4_1", "special-5_2", "special-6_1" or "printed-a-q2".
  std::string formula = "theorem-1.2";
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Renders a record.  Json is the single-line schema object; Latex and Text
/// render the polynomial alone, in canonical monomial order.  All three are
/// injective on canonical records.
std::string format_output(const OutputRecord& rec, OutputFormat fmt);

/// Inverse of the Json rendering (meta.version is accepted but not stored).
/// Throws std::invalid_argument on malformed input.
OutputRecord parse_json_record(const std::string& line);

/// LaTeX rendering of a polynomial, e.g. "a^{2}q^{-2} + a^{2}q^{2} - a^{4}".
std::string latex_polynomial(const LaurentPoly& poly);

}  // namespace dtknot
