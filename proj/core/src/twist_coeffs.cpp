#include "dtknot/twist_coeffs.hpp"

namespace dtknot {

namespace {

// alpha without the range check: [m over i] vanishes for i > m, so the
// composition sums can evaluate over-large parts to zero uniformly.
LaurentPoly alpha_term(int m, int n, int i) {
  const long long eq = -static_cast<long long>(i) * (m + n) +
                       static_cast<long long>(i) * (i + 3) / 2;
  const BigInt sign = (i % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, static_cast<int>(eq), -i) * qbinom(m, i) *
         brace_ff(n, i);
}

}  // namespace

LaurentPoly alpha(int m, int n, int i) {
  if (i < 0 || i > m || i > n)
    throw IndexOutOfRangeError("alpha requires 0 <= i <= min(m, n)");
  return alpha_term(m, n, i);
}

RationalFn x_coeff(int m, int n, int i) {
  if (i < 0 || i > m || i > n)
    throw IndexOutOfRangeError("x coefficient requires 0 <= i <= min(m, n)");
  const BigInt sign = (i % 2 == 0) ? 1 : -1;
  LaurentPoly num = LaurentPoly(sign) * qbinom(m, i) * qbinom(n, i) * qfact(i);
  return RationalFn(std::move(num), brace_a_ff(m + n - 2, i));
}

RationalFn y_coeff(int m, int n, int i) {
  if (i < 0 || i > m || i > n)
    throw IndexOutOfRangeError("y coefficient requires 0 <= i <= min(m, n)");
  return RationalFn(brace_ff(m, i) * brace_ff(n, i),
                    qfact(i) * brace_a_ff(m + n - i - 1, i));
}

RationalFn d_closure(int m, int n) {
  if (m < n) std::swap(m, n);
  if (n < 1) throw IndexOutOfRangeError("cable closure needs m, n >= 1");
  LaurentPoly num = brace_a(m + n - 1) * brace_a_ff(m - 2, m - 1) *
                    brace_a_ff(n - 2, n - 1) * brace_a(-1);
  return RationalFn(std::move(num), qfact(m) * qfact(n));
}

LaurentPoly c_general(int n, int k, int p) {
  if (n < 0 || k < 0 || k > n)
    throw IndexOutOfRangeError("twist expansion requires 0 <= k <= n");
  if (p == 0) return k == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (p < 0) return c_general(n, k, -p).bar();

  LaurentPoly sum;
  for (const Composition& l : compositions(k, p)) {
    long long wa = 0, wq = 0;
    for (int i = 0; i + 1 < p; ++i) {
      const long long s = l.partial_sum(i);
      wa -= 2 * s;
      wq += 2 * s * (s - 2 * n + 1);
    }
    LaurentPoly term = LaurentPoly::monomial(1, static_cast<int>(wq), static_cast<int>(wa));
    for (int i = 0; i < p; ++i) {
      const int rem = n - (i == 0 ? 0 : l.partial_sum(i - 1));
      term *= alpha_term(rem, rem, l.part(i));
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

LaurentPoly c_tilde(int k, int p) {
  if (k < 0) throw IndexOutOfRangeError("twist expansion requires k >= 0");
  if (p == 0) return k == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (p < 0) {
    // C(k,k,p) itself is the plain bar image, but the normalization {k}!
    // is bar-odd, so the quotient picks up (-1)^k.
    const LaurentPoly barred = c_tilde(k, -p).bar();
    return (k % 2 == 0) ? barred : -barred;
  }

  LaurentPoly sum;
  for (const Composition& l : compositions(k, p)) {
    long long wa = 0;
    for (int i = 0; i + 1 < p; ++i)
      wa -= 2 * static_cast<long long>(p - 1 - i) * l.part(i);
    sum += LaurentPoly::monomial(1, static_cast<int>(phi(l, k)), static_cast<int>(wa)) *
           qmultinom(k, l);
  }
  const BigInt sign = (k % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, -2 * k * k, -k) * sum;
}

RationalFn t_twist(int k, int p) {
  if (k < 0) throw IndexOutOfRangeError("twist coefficient requires k >= 0");
  RationalFn sum;
  for (int i = 0; i <= k; ++i) {
    const long long ea = 2LL * p * i;
    const long long eq = 2LL * p * i * (i - 1);
    const BigInt sign = (i % 2 == 0) ? 1 : -1;
    LaurentPoly num = LaurentPoly::monomial(sign, static_cast<int>(eq),
                                            static_cast<int>(ea)) *
                      brace_a(2 * i - 1);
    LaurentPoly den = qfact(i) * qfact(k - i) * brace_a_ff(k + i - 1, k + 1);
    sum += RationalFn(std::move(num), std::move(den));
  }
  const BigInt outer = (k % 2 == 0) ? 1 : -1;
  return RationalFn(LaurentPoly(outer)) * sum;
}

RationalFn T_twist(int n, int p) {
  if (n < 0) throw IndexOutOfRangeError("full-twist scalar requires n >= 0");
  if (p < 1) throw IndexOutOfRangeError("full-twist scalar requires p >= 1");
  RationalFn sum;
  for (int i = 0; i <= n; ++i) {
    const long long ea = 2LL * p * i;
    const long long eq = 2LL * p * i * (i - 1);
    const BigInt sign = (i % 2 == 0) ? 1 : -1;
    LaurentPoly num = LaurentPoly::monomial(sign, static_cast<int>(eq),
                                            static_cast<int>(ea)) *
                      brace_ff(n, n - i) * brace_a(2 * i - 1);
    LaurentPoly den = qfact(n - i) * brace_a_ff(n + i - 1, n + 1);
    sum += RationalFn(std::move(num), std::move(den));
  }
  const long long pa = -2LL * p * n;
  const long long pq = -2LL * p * n * (n - 1);
  LaurentPoly prefactor =
      LaurentPoly::monomial(1, static_cast<int>(pq), static_cast<int>(pa)) * qfact(n);
  return RationalFn(std::move(prefactor)) * sum;
}

BasisMatrices basis_matrices(int size) {
  if (size < 1) throw IndexOutOfRangeError("basis matrices need size >= 1");
  const auto entry = [](int i, int j) {
    return RationalFn(brace_a_ff(i - 1 + j, i - j), qfact(i - j));
  };

  BasisMatrices m;
  m.h_in_r.assign(size, std::vector<RationalFn>(size));
  m.r_in_h.assign(size, std::vector<RationalFn>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j) m.h_in_r[i][j] = entry(i, j);

  // R_n = H_n - sum_{i<n} entry(n, i) R_i, unfolded onto the H basis.
  for (int i = 0; i < size; ++i) {
    m.r_in_h[i][i] = RationalFn::one();
    for (int j = 0; j < i; ++j) {
      const RationalFn c = entry(i, j);
      for (int col = 0; col <= j; ++col) m.r_in_h[i][col] -= c * m.r_in_h[j][col];
    }
  }
  return m;
}

}  // namespace dtknot
