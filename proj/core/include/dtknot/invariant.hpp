#pragma once

#include "dtknot/twist_coeffs.hpp"

namespace dtknot {

/// Twist parameters (p, s) of a double twist knot plus the color N of the
/// symmetric representation (N).
struct KnotParams {
  int p = 0;
  int s = 0;
  int N = 0;
  friend bool operator==(const KnotParams&, const KnotParams&) = default;
};

enum class KnotForm { Unknot, Standard, Mirror };

/// Normal form of a (p, s) pair: the unknot when either twist region is
/// empty, otherwise parameters with s >= 1, possibly after swapping the two
/// regions and/or passing to the mirror (whose invariant is the bar image).
struct NormalizedKnot {
  KnotForm form = KnotForm::Unknot;
  int p = 0;
  int s = 0;
  friend bool operator==(const NormalizedKnot&, const NormalizedKnot&) = default;
};

NormalizedKnot normalize_params(int p, int s);

/// Colored invariant of the double twist knot, normalized to 1 on the
/// unknot, at framing zero:
///   sum_{k=0}^{N} (-1)^k (a^k q^{k(k-1)})^{2(p+s)} C~(k,p) C~(k,s)
///     [N over k] {N+k-1; a}_k {k-2; a}_k.
LaurentPoly homfly_double_twist(const KnotParams& kp);

/// The four twist knots with printed closed forms.  Evaluated verbatim from
/// those forms, on a code path independent of homfly_double_twist.
enum class SpecialKnot { Trefoil31, FigureEight41, FiveTwo52, SixOne61 };

LaurentPoly homfly_special(SpecialKnot knot, int N);

/// a = q^n specialization of the colored invariant (n >= 1); the result
/// involves q only.
LaurentPoly su_n_invariant(const KnotParams& kp, int n);

/// The printed a = q^2 single-sum forms for p = 2 and p = -2 (s = 1),
/// including the exact division by {N+1}.  Throws IndexOutOfRangeError for
/// other p.
LaurentPoly jones_a_q2_printed(int p, int N);

/// Memoized C~(k, p), shared across evaluations.  The cache is a write-once
/// map guarded by a mutex; values are structurally identical to c_tilde(k, p).
const LaurentPoly& c_tilde_cached(int k, int p);

}  // namespace dtknot
