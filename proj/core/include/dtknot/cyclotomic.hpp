#pragma once

#include <string>
#include <vector>

#include "dtknot/invariant.hpp"

namespace dtknot {

/// Outcome of a cyclotomic extraction or verification run.  Failure is data,
/// not an exception: a residue in the triangular solve or a mismatch at a
/// fresh color is evidence about the expansion, and the caller decides what
/// to report.
struct VerificationStatus {
  enum class Kind { Verified, DivisionFailed, MismatchAt };
  Kind kind = Kind::Verified;
  /// The failing ladder index k (DivisionFailed) or color N (MismatchAt).
  int index = -1;
  std::string detail;
  bool ok() const { return kind == Kind::Verified; }
};

/// Extracted cyclotomic data for one (p, s, n): the coefficients H_0..H_kmax
/// (each a one-variable Laurent polynomial in q), the colors at which the
/// expansion has been checked, and the status.
struct CyclotomicData {
  int p = 0;
  int s = 0;
  int n = 0;
  std::vector<LaurentPoly> coefficients;
  std::vector<int> checked_colors;
  VerificationStatus status;
};

/// Basis coefficient of the cyclotomic expansion:
///   C(N+1, k, n) = {N-(k-1)} ... {N-1} {N} {N+n} {N+n+1} ... {N+n+(k-1)},
/// a product of 2k one-variable braces; 1 when k = 0.
LaurentPoly basis_coeff(int N, int k, int n);

/// Triangular extraction of H_0..H_kmax from the color ladder
/// J_k = su_n_invariant((p, s, k), n):
///   H_0 = 1,   H_k = (J_k - sum_{j<k} C(k+1, j, n) H_j) / C(k+1, k, n),
/// every step an exact division.  An inexact step is reported as
/// DivisionFailed at its ladder index, with the coefficients extracted so
/// far retained.
CyclotomicData extract_cyclotomic(int p, int s, int n, int kmax);

/// N-free closed form of H_k read off the k-th summand of the main theorem
/// at a = q^n:
///   (-1)^k q^{2(p+s) k (n+k-1)} (C~(k,p) C~(k,s))|_{a=q^n}
///     * ({k-2; a}_k)|_{a=q^n} / {k}!.
LaurentPoly hk_closed_form(int p, int s, int n, int k);

/// Checks J_N = sum_{k=0}^{N} C(N+1, k, n) H_k exactly at each given color,
/// taking H_k from coeffs while available and from hk_closed_form beyond.
VerificationStatus recheck_expansion(int p, int s, int n,
                                     const std::vector<LaurentPoly>& coeffs,
                                     const std::vector<int>& colors);

/// Full desk-scale verification: extract H_0..H_kmax, re-verify the
/// expansion at the fresh colors kmax+1 .. kmax+extra_colors, then compare
/// every extracted H_k against its closed form.  The returned status
/// reflects the first failure.
CyclotomicData verify_conjecture(int p, int s, int n, int kmax, int extra_colors);

}  // namespace dtknot
