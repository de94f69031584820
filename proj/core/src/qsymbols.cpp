#include "dtknot/qsymbols.hpp"

namespace dtknot {

LaurentPoly qint(int n) {
  LaurentPoly p;
  if (n == 0) return p;
  const int m = n > 0 ? n : -n;
  const BigInt sign = n > 0 ? 1 : -1;
  for (int j = 0; j < m; ++j) p += LaurentPoly::monomial(sign, m - 1 - 2 * j, 0);
  return p;
}

LaurentPoly brace(int n) {
  if (n == 0) return {};
  return LaurentPoly::monomial(1, n, 0) - LaurentPoly::monomial(1, -n, 0);
}

LaurentPoly brace_a(int m) {
  return LaurentPoly::monomial(1, m, 1) - LaurentPoly::monomial(1, -m, -1);
}

namespace {

void require_count(int i) {
  if (i < 0) throw IndexOutOfRangeError("product length must be non-negative");
}

}  // namespace

LaurentPoly qint_ff(int n, int i) {
  require_count(i);
  LaurentPoly p = LaurentPoly::one();
  for (int j = 0; j < i; ++j) p *= qint(n - j);
  return p;
}

LaurentPoly brace_ff(int n, int i) {
  require_count(i);
  LaurentPoly p = LaurentPoly::one();
  for (int j = 0; j < i; ++j) p *= brace(n - j);
  return p;
}

LaurentPoly brace_a_ff(int m, int i) {
  require_count(i);
  LaurentPoly p = LaurentPoly::one();
  for (int j = 0; j < i; ++j) p *= brace_a(m - j);
  return p;
}

LaurentPoly brace_a_rising(int m, int i) {
  require_count(i);
  LaurentPoly p = LaurentPoly::one();
  for (int j = 0; j < i; ++j) p *= brace_a(-m + j);
  return p;
}

LaurentPoly qfact(int n) {
  if (n < 0) throw IndexOutOfRangeError("factorial of a negative integer");
  return brace_ff(n, n);
}

LaurentPoly qint_fact(int n) {
  if (n < 0) throw IndexOutOfRangeError("factorial of a negative integer");
  return qint_ff(n, n);
}

LaurentPoly qbinom(int n, int k) {
  if (n < 0) throw IndexOutOfRangeError("q-binomial needs n >= 0");
  if (k < 0 || k > n) return {};
  return exact_div(brace_ff(n, k), qfact(k));
}

LaurentPoly qmultinom(int n, const Composition& l) {
  if (l.total() != n) throw SumMismatchError("multinomial parts do not sum to n");
  LaurentPoly p = LaurentPoly::one();
  for (int i = 0; i < l.num_parts(); ++i) p *= qbinom(l.partial_sum(i), l.part(i));
  return p;
}

}  // namespace dtknot
