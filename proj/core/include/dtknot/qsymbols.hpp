#pragma once

#include "dtknot/composition.hpp"
#include "dtknot/laurent.hpp"

namespace dtknot {

// Quantum symbols.  Throughout, [n] = (q^n - q^{-n}) / (q - q^{-1}),
// {n} = q^n - q^{-n} and {m; a} = a q^m - a^{-1} q^{-m}.

/// Quantum integer [n]; defined for every integer, [0] = 0, [-n] = -[n].
LaurentPoly qint(int n);
/// {n} = q^n - q^{-n}.
LaurentPoly brace(int n);
/// {m; a} = a q^m - a^{-1} q^{-m}.
LaurentPoly brace_a(int m);

/// Falling products of i factors, [n][n-1]...[n-i+1] and friends; all three
/// are 1 when i = 0.  brace_a_ff uses the descending convention uniformly,
/// for any starting index m (also negative), so e.g. brace_a_ff(-1, 1) is
/// {-1; a} and brace_a_ff(k-2, k) ends at {-1; a}.
LaurentPoly qint_ff(int n, int i);
LaurentPoly brace_ff(int n, int i);
LaurentPoly brace_a_ff(int m, int i);

/// Ascending product {-m; a} {-m+1; a} ... {-m+i-1; a} for m >= 1.
LaurentPoly brace_a_rising(int m, int i);

/// {n}! = {n}{n-1}...{1}.
LaurentPoly qfact(int n);
/// [n]! = [n][n-1]...[1].
LaurentPoly qint_fact(int n);

/// Balanced q-binomial [n over k] = [n]! / ([k]! [n-k]!); zero when k < 0 or
/// k > n.  Computed as the exact quotient {n}_k / {k}!, so a division residue
/// here would indicate a kernel bug.
LaurentPoly qbinom(int n, int k);

/// q-multinomial [n over (l_1,...,l_p)] = [n]! / ([l_1]! ... [l_p]!),
/// computed as a telescoping product of binomials over the partial sums.
/// Throws SumMismatchError unless the parts sum to n.
LaurentPoly qmultinom(int n, const Composition& l);

}  // namespace dtknot
