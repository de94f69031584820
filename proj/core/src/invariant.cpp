#include "dtknot/invariant.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace dtknot {

NormalizedKnot normalize_params(int p, int s) {
  if (p == 0 || s == 0) return {KnotForm::Unknot, 0, 0};
  if (s >= 1) return {KnotForm::Standard, p, s};
  if (p >= 1) return {KnotForm::Standard, s, p};
  return {KnotForm::Mirror, -p, -s};
}

const LaurentPoly& c_tilde_cached(int k, int p) {
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  static std::mutex mutex;
  const std::pair<int, int> key{k, p};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly value = c_tilde(k, p);
  std::lock_guard<std::mutex> lock(mutex);
  // Concurrent computations of the same key insert identical values, so the
  // first insert wins and the rest are no-ops.
  return cache.try_emplace(key, std::move(value)).first->second;
}

namespace {

// The k-th summand of the main formula, for parameters already in standard
// form (s >= 1).
LaurentPoly standard_summand(int p, int s, int N, int k) {
  const long long twists = 2LL * (p + s);
  const long long ea = twists * k;
  const long long eq = twists * k * (k - 1);
  const BigInt sign = (k % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, static_cast<int>(eq), static_cast<int>(ea)) *
         c_tilde_cached(k, p) * c_tilde_cached(k, s) * qbinom(N, k) *
         brace_a_ff(N + k - 1, k) * brace_a_ff(k - 2, k);
}

LaurentPoly standard_invariant(int p, int s, int N) {
  LaurentPoly sum;
  for (int k = 0; k <= N; ++k) sum += standard_summand(p, s, N, k);
  return sum;
}

}  // namespace

LaurentPoly homfly_double_twist(const KnotParams& kp) {
  if (kp.N < 0) throw IndexOutOfRangeError("color N must be non-negative");
  const NormalizedKnot nk = normalize_params(kp.p, kp.s);
  switch (nk.form) {
    case KnotForm::Unknot:
      return LaurentPoly::one();
    case KnotForm::Standard:
      return standard_invariant(nk.p, nk.s, kp.N);
    case KnotForm::Mirror:
      return standard_invariant(nk.p, nk.s, kp.N).bar();
  }
  return LaurentPoly::one();
}

LaurentPoly homfly_special(SpecialKnot knot, int N) {
  if (N < 0) throw IndexOutOfRangeError("color N must be non-negative");
  LaurentPoly sum;
  for (int k = 0; k <= N; ++k) {
    LaurentPoly prefactor;
    switch (knot) {
      case SpecialKnot::Trefoil31:
        prefactor = LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, k * (k - 1), 2 * k);
        break;
      case SpecialKnot::FigureEight41:
        prefactor = LaurentPoly::one();
        break;
      case SpecialKnot::FiveTwo52: {
        LaurentPoly inner;
        for (int l = 0; l <= k; ++l)
          inner += LaurentPoly::monomial(1, -3 * k * l + l * (l + 2), -2 * l) * qbinom(k, l);
        prefactor =
            LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, 3 * k * (k - 1), 4 * k) * inner;
        break;
      }
      case SpecialKnot::SixOne61: {
        LaurentPoly inner;
        for (int l = 0; l <= k; ++l)
          inner += LaurentPoly::monomial(1, 3 * k * l - l * (l + 2), 2 * l) * qbinom(k, l);
        prefactor = LaurentPoly::monomial(1, -2 * k * (k - 1), -2 * k) * inner;
        break;
      }
    }
    sum += prefactor * qbinom(N, k) * brace_a_ff(N + k - 1, k) * brace_a_ff(k - 2, k);
  }
  return sum;
}

LaurentPoly su_n_invariant(const KnotParams& kp, int n) {
  if (n < 1) throw IndexOutOfRangeError("SU(n) specialization needs n >= 1");
  return homfly_double_twist(kp).specialize_a(n);
}

LaurentPoly jones_a_q2_printed(int p, int N) {
  if (p != 2 && p != -2)
    throw IndexOutOfRangeError("printed a=q^2 form exists for p = 2 or p = -2 only");
  if (N < 0) throw IndexOutOfRangeError("color N must be non-negative");
  LaurentPoly sum;
  for (int k = 0; k <= N; ++k) {
    LaurentPoly inner;
    for (int l = 0; l <= k; ++l) {
      const int eq = (p == 2) ? -3 * k * l + l * (l - 2) : 3 * k * l - l * (l - 2);
      inner += LaurentPoly::monomial(1, eq, 0) * qbinom(k, l);
    }
    LaurentPoly prefactor =
        (p == 2) ? LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, 3 * k * k + 5 * k, 0)
                 : LaurentPoly::monomial(1, -2 * k * (k + 1), 0);
    // {N+k+1}{N+k}...{N-k+1} / {N+1}: the divisor is one of the 2k+1 factors.
    LaurentPoly ladder = exact_div(brace_ff(N + k + 1, 2 * k + 1), brace(N + 1));
    sum += prefactor * inner * ladder;
  }
  return sum;
}

}  // namespace dtknot
