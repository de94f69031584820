#include "dtknot/cyclotomic.hpp"

#include <utility>

namespace dtknot {

LaurentPoly basis_coeff(int N, int k, int n) {
  if (k < 0) throw IndexOutOfRangeError("basis coefficient needs k >= 0");
  LaurentPoly prod = LaurentPoly::one();
  for (int j = 0; j < k; ++j) prod *= brace(N - j);
  for (int j = 0; j < k; ++j) prod *= brace(N + n + j);
  return prod;
}

CyclotomicData extract_cyclotomic(int p, int s, int n, int kmax) {
  if (n < 1) throw IndexOutOfRangeError("SU(n) extraction needs n >= 1");
  if (kmax < 0) throw IndexOutOfRangeError("kmax must be non-negative");

  CyclotomicData data;
  data.p = p;
  data.s = s;
  data.n = n;
  data.coefficients.push_back(LaurentPoly::one());  // H_0 = J_0 = 1
  data.checked_colors.push_back(0);

  for (int k = 1; k <= kmax; ++k) {
    LaurentPoly rhs = su_n_invariant({p, s, k}, n);
    for (int j = 0; j < k; ++j) rhs -= basis_coeff(k, j, n) * data.coefficients[j];
    DivisionResult div = divide(rhs, basis_coeff(k, k, n));
    if (!div.remainder.is_zero()) {
      data.status = {VerificationStatus::Kind::DivisionFailed, k,
                     "residue " + div.remainder.to_text() + " at ladder index " +
                         std::to_string(k)};
      return data;
    }
    data.coefficients.push_back(std::move(div.quotient));
    data.checked_colors.push_back(k);
  }
  return data;
}

LaurentPoly hk_closed_form(int p, int s, int n, int k) {
  if (n < 1) throw IndexOutOfRangeError("SU(n) specialization needs n >= 1");
  if (k < 0) throw IndexOutOfRangeError("coefficient index must be non-negative");
  const long long eq = 2LL * (p + s) * k * (n + k - 1);
  const BigInt sign = (k % 2 == 0) ? 1 : -1;
  LaurentPoly twist = (c_tilde(k, p) * c_tilde(k, s)).specialize_a(n);
  LaurentPoly ladder = exact_div(brace_a_ff(k - 2, k).specialize_a(n), qfact(k));
  return LaurentPoly::monomial(sign, static_cast<int>(eq), 0) * twist * ladder;
}

VerificationStatus recheck_expansion(int p, int s, int n,
                                     const std::vector<LaurentPoly>& coeffs,
                                     const std::vector<int>& colors) {
  for (int N : colors) {
    LaurentPoly expansion;
    for (int k = 0; k <= N; ++k) {
      const LaurentPoly& hk = k < static_cast<int>(coeffs.size())
                                  ? coeffs[static_cast<std::size_t>(k)]
                                  : hk_closed_form(p, s, n, k);
      expansion += basis_coeff(N, k, n) * hk;
    }
    if (expansion != su_n_invariant({p, s, N}, n))
      return {VerificationStatus::Kind::MismatchAt, N,
              "expansion disagrees with the invariant at color " + std::to_string(N)};
  }
  return {};
}

CyclotomicData verify_conjecture(int p, int s, int n, int kmax, int extra_colors) {
  CyclotomicData data = extract_cyclotomic(p, s, n, kmax);
  if (!data.status.ok()) return data;

  std::vector<int> fresh;
  for (int N = kmax + 1; N <= kmax + extra_colors; ++N) fresh.push_back(N);
  data.status = recheck_expansion(p, s, n, data.coefficients, fresh);
  if (!data.status.ok()) return data;
  data.checked_colors.insert(data.checked_colors.end(), fresh.begin(), fresh.end());

  for (int k = 0; k <= kmax; ++k) {
    if (data.coefficients[static_cast<std::size_t>(k)] != hk_closed_form(p, s, n, k)) {
      data.status = {VerificationStatus::Kind::MismatchAt, k,
                     "extracted H_" + std::to_string(k) +
                         " differs from its closed form"};
      return data;
    }
  }
  return data;
}

}  // namespace dtknot
