#pragma once

#include <vector>

#include "dtknot/composition.hpp"
#include "dtknot/qsymbols.hpp"
#include "dtknot/rational_fn.hpp"

namespace dtknot {

/// Crossing-resolution coefficient
///   alpha(m, n, i) = (-1)^i a^{-i} q^{-i(m+n) + i(i+3)/2} [m over i] {n}_i,
/// a Laurent polynomial (the [m over i] {n}_i form absorbs the {i}!
/// denominator).  Throws IndexOutOfRangeError when i > min(m, n).
LaurentPoly alpha(int m, int n, int i);

/// Symmetrizer-merge coefficient
///   x(m, n, i) = (-1)^i [m over i] [n over i] {i}! / {m+n-2; a}_i.
RationalFn x_coeff(int m, int n, int i);

/// Strand-reconnection coefficient
///   y(m, n, i) = {m}_i {n}_i / ({i}! {m+n-i-1; a}_i).
RationalFn y_coeff(int m, int n, int i);

/// Evaluation of the closed (m, n)-cable in the sphere:
///   {m+n-1; a} {m-2; a}_{m-1} {n-2; a}_{n-1} {-1; a} / ({m}! {n}!)
/// for m >= n >= 1, extended symmetrically.  Throws IndexOutOfRangeError
/// when either argument is < 1.
RationalFn d_closure(int m, int n);

/// Expansion coefficient C(n, k, p) of p full twists on 2n strands over the
/// (n-k, n-k)-symmetrizer basis: the composition sum
///   sum over (l_1..l_p), sum l_i = k, of
///     prod_{i<p} a^{-2 s_i} q^{2 s_i (s_i - 2n + 1)}
///     * prod_i alpha(n - s_{i-1}, n - s_{i-1}, l_i),   s_0 = 0.
/// Over-large parts contribute zero through the [m over i] = 0 guard.
/// For p <= -1 this is the bar image of C(n, k, -p); p = 0 gives the
/// Kronecker delta at k = 0.  Throws IndexOutOfRangeError when k > n.
LaurentPoly c_general(int n, int k, int p);

/// Normalized top coefficient C~(k, p) = C(k, k, p) / {k}!, computed from
/// the closed multi-index form
///   (-1)^k a^{-k} q^{-2k^2} sum_l a^{-2 sum (p-i) l_i} q^{phi(l)} [k over l];
/// always a Laurent polynomial.  Sign conventions for p <= 0 as c_general.
LaurentPoly c_tilde(int k, int p);

/// Twist eigen-coefficient in the R basis:
///   t(k, p) = (-1)^k sum_{i=0}^{k} (-1)^i (a^i q^{i(i-1)})^{2p}
///             / ({i}! {k-i}!) * {2i-1; a} / {k+i-1; a}_{k+1}.
RationalFn t_twist(int k, int p);

/// Full-twist scalar on the (n, n)-cable:
///   T(n, p) = (a^{-n} q^{-n(n-1)})^{2p} {n}! sum_{i=0}^{n} (-1)^i
///             (a^i q^{i(i-1)})^{2p} {n}_{n-i} / {n-i}!
///             * {2i-1; a} / {n+i-1; a}_{n+1},   for p >= 1.
RationalFn T_twist(int n, int p);

/// Triangular change of basis between the H_i and R_i families:
///   h_in_r[i][j] = {i-1+j; a}_{i-j} / {i-j}!   (H_i = sum_j ... R_j),
/// and r_in_h built from the inverse recursion; both size x size, mutually
/// inverse, unit diagonal.
struct BasisMatrices {
  std::vector<std::vector<RationalFn>> h_in_r;
  std::vector<std::vector<RationalFn>> r_in_h;
};

BasisMatrices basis_matrices(int size);

}  // namespace dtknot
