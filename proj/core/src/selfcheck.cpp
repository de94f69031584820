#include "dtknot/selfcheck.hpp"

#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <utility>

#include "dtknot/cyclotomic.hpp"

namespace dtknot::checks {

namespace {

CheckResult run(std::string name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    const bool passed = detail.empty();
    return {std::move(name), passed, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 5);
  std::uniform_int_distribution<int> expo(-6, 6);
  std::uniform_int_distribution<int> coef(-9, 9);
  LaurentPoly p;
  const int t = n_terms(rng);
  for (int i = 0; i < t; ++i)
    p += LaurentPoly::monomial(coef(rng), expo(rng), expo(rng));
  return p;
}

LaurentPoly random_nonzero_poly(std::mt19937_64& rng) {
  for (;;) {
    LaurentPoly p = random_poly(rng);
    if (!p.is_zero()) return p;
  }
}

std::string describe(const std::string& label, const LaurentPoly& got,
                     const LaurentPoly& want) {
  std::ostringstream os;
  os << label << ": got " << got << ", want " << want;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_core_checks(std::uint64_t seed, int cases) {
  std::vector<CheckResult> out;

  out.push_back(run("ring axioms on random polynomials", [=] {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      if ((a + b) + c != a + (b + c)) return std::string("addition associativity");
      if (a + b != b + a) return std::string("addition commutativity");
      if ((a * b) * c != a * (b * c)) return std::string("multiplication associativity");
      if (a * b != b * a) return std::string("multiplication commutativity");
      if (a * (b + c) != a * b + a * c) return std::string("distributivity");
    }
    return std::string{};
  }));

  out.push_back(run("bar involution is a ring homomorphism", [=] {
    std::mt19937_64 rng(seed ^ 0x1);
    for (int i = 0; i < cases; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng);
      if ((a * b).bar() != a.bar() * b.bar()) return std::string("bar of a product");
      if ((a + b).bar() != a.bar() + b.bar()) return std::string("bar of a sum");
      if (a.bar().bar() != a) return std::string("bar is not an involution");
    }
    return std::string{};
  }));

  out.push_back(run("exact division round-trip (P*D)/D = P", [=] {
    std::mt19937_64 rng(seed ^ 0x2);
    for (int i = 0; i < cases; ++i) {
      const LaurentPoly p = random_poly(rng);
      const LaurentPoly d = random_nonzero_poly(rng);
      if (exact_div(p * d, d) != p) return describe("round-trip", exact_div(p * d, d), p);
    }
    return std::string{};
  }));

  out.push_back(run("a = q^n substitution commutes with ring operations", [=] {
    std::mt19937_64 rng(seed ^ 0x3);
    std::uniform_int_distribution<int> npow(-3, 3);
    for (int i = 0; i < cases; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng);
      const int n = npow(rng);
      if ((a + b).specialize_a(n) != a.specialize_a(n) + b.specialize_a(n))
        return std::string("substitution vs addition");
      if ((a * b).specialize_a(n) != a.specialize_a(n) * b.specialize_a(n))
        return std::string("substitution vs multiplication");
    }
    return std::string{};
  }));

  out.push_back(run("evaluation at rational points is a homomorphism", [=] {
    std::mt19937_64 rng(seed ^ 0x4);
    const BigRational q0(3, 2), a0(-5, 7);
    for (int i = 0; i < cases; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng);
      if ((a + b).evaluate(q0, a0) != a.evaluate(q0, a0) + b.evaluate(q0, a0))
        return std::string("evaluation vs addition");
      if ((a * b).evaluate(q0, a0) != a.evaluate(q0, a0) * b.evaluate(q0, a0))
        return std::string("evaluation vs multiplication");
    }
    return std::string{};
  }));

  out.push_back(run("{n} = (q - q^{-1}) [n] for |n| <= 20", [] {
    const LaurentPoly unit = brace(1);
    for (int n = -20; n <= 20; ++n)
      if (brace(n) != unit * qint(n))
        return describe("n = " + std::to_string(n), brace(n), unit * qint(n));
    return std::string{};
  }));

  out.push_back(run("q-binomial symmetry [n k] = [n n-k], n <= 12", [] {
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k)
        if (qbinom(n, k) != qbinom(n, n - k))
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
    return std::string{};
  }));

  out.push_back(run("q-binomials are bar-invariant, n <= 12", [] {
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k)
        if (qbinom(n, k).bar() != qbinom(n, k))
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
    return std::string{};
  }));

  out.push_back(run("q-binomial Pascal identity, n <= 12", [] {
    for (int n = 1; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) {
        const LaurentPoly rhs =
            LaurentPoly::monomial(1, k, 0) * qbinom(n - 1, k) +
            LaurentPoly::monomial(1, k - n, 0) * qbinom(n - 1, k - 1);
        if (qbinom(n, k) != rhs)
          return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
      }
    return std::string{};
  }));

  out.push_back(run("{m; a}_i at a = q^n equals {m+n}_i", [] {
    for (int m = -5; m <= 5; ++m)
      for (int i = 0; i <= 4; ++i)
        for (int n = -3; n <= 3; ++n)
          if (brace_a_ff(m, i).specialize_a(n) != brace_ff(m + n, i))
            return "m = " + std::to_string(m) + ", i = " + std::to_string(i) +
                   ", n = " + std::to_string(n);
    return std::string{};
  }));

  return out;
}

std::vector<CheckResult> run_coefficient_checks() {
  std::vector<CheckResult> out;

  out.push_back(run("{n}_k divides the twist expansion coefficient C(n,k,p)", [] {
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k)
        for (int p = 1; p <= 3; ++p)
          if (!divide(c_general(n, k, p), brace_ff(n, k)).remainder.is_zero())
            return "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                   ", p = " + std::to_string(p);
    return std::string{};
  }));

  out.push_back(run("composition sum and normalized form agree: C(n,n,p) = {n}! C~(n,p)", [] {
    for (int n = 0; n <= 4; ++n)
      for (int p = -3; p <= 3; ++p)
        if (c_general(n, n, p) != qfact(n) * c_tilde(n, p))
          return "n = " + std::to_string(n) + ", p = " + std::to_string(p);
    return std::string{};
  }));

  out.push_back(run("full-twist scalar equals the top expansion coefficient: T(n,p) = C(n,n,p)", [] {
    for (int n = 0; n <= 4; ++n)
      for (int p = 1; p <= 3; ++p)
        if (T_twist(n, p) != RationalFn(c_general(n, n, p)))
          return "n = " + std::to_string(n) + ", p = " + std::to_string(p);
    return std::string{};
  }));

  out.push_back(run("T(n,p) = (-1)^n (a^n q^{n(n-1)})^{-2p} ({n}!)^2 t(n,p)", [] {
    for (int n = 0; n <= 4; ++n)
      for (int p = 1; p <= 3; ++p) {
        const LaurentPoly mono = LaurentPoly::monomial(
            (n % 2 == 0) ? 1 : -1, -2 * p * n * (n - 1), -2 * p * n);
        const RationalFn rhs = RationalFn(mono * qfact(n) * qfact(n)) * t_twist(n, p);
        if (T_twist(n, p) != rhs)
          return "n = " + std::to_string(n) + ", p = " + std::to_string(p);
      }
    return std::string{};
  }));

  out.push_back(run("t(k,p) = (-1)^k (a^k q^{k(k-1)})^{2p} C~(k,p) / {k}!", [] {
    for (int k = 0; k <= 4; ++k)
      for (int p = 1; p <= 3; ++p) {
        const LaurentPoly mono = LaurentPoly::monomial(
            (k % 2 == 0) ? 1 : -1, 2 * p * k * (k - 1), 2 * p * k);
        if (t_twist(k, p) != RationalFn(mono * c_tilde(k, p), qfact(k)))
          return "k = " + std::to_string(k) + ", p = " + std::to_string(p);
      }
    return std::string{};
  }));

  out.push_back(run("bar duality C~(k,-p) = (-1)^k bar C~(k,p), k <= 6", [] {
    for (int k = 0; k <= 6; ++k)
      for (int p = 1; p <= 3; ++p) {
        LaurentPoly want = c_tilde(k, p).bar();
        if (k % 2 == 1) want = -want;
        if (c_tilde(k, -p) != want)
          return "k = " + std::to_string(k) + ", p = " + std::to_string(p);
      }
    return std::string{};
  }));

  out.push_back(run("C~(k,±1) monomial closed forms, k <= 8", [] {
    for (int k = 0; k <= 8; ++k) {
      const int e = 3 * k * (k - 1) / 2;
      if (c_tilde(k, 1) != LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, -e, -k))
        return describe("p = 1, k = " + std::to_string(k), c_tilde(k, 1),
                        LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, -e, -k));
      if (c_tilde(k, -1) != LaurentPoly::monomial(1, e, k))
        return describe("p = -1, k = " + std::to_string(k), c_tilde(k, -1),
                        LaurentPoly::monomial(1, e, k));
    }
    return std::string{};
  }));

  out.push_back(run("C~(k,±2) single-sum closed forms, k <= 6", [] {
    for (int k = 0; k <= 6; ++k) {
      LaurentPoly plus, minus;
      for (int l = 0; l <= k; ++l) {
        plus += LaurentPoly::monomial(1, -3 * k * l + l * (l + 2), -2 * l) * qbinom(k, l);
        minus += LaurentPoly::monomial(1, 3 * k * l - l * (l + 2), 2 * l) * qbinom(k, l);
      }
      const int e = 3 * k * (k - 1) / 2;
      plus = LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, -e, -k) * plus;
      minus = LaurentPoly::monomial(1, e, k) * minus;
      if (c_tilde(k, 2) != plus)
        return describe("p = 2, k = " + std::to_string(k), c_tilde(k, 2), plus);
      if (c_tilde(k, -2) != minus)
        return describe("p = -2, k = " + std::to_string(k), c_tilde(k, -2), minus);
    }
    return std::string{};
  }));

  out.push_back(run("basis-change matrices are mutually inverse, size <= 5", [] {
    for (int size = 1; size <= 5; ++size) {
      const BasisMatrices m = basis_matrices(size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          RationalFn hr, rh;
          for (int l = 0; l < size; ++l) {
            hr += m.h_in_r[i][l] * m.r_in_h[l][j];
            rh += m.r_in_h[i][l] * m.h_in_r[l][j];
          }
          const RationalFn want = i == j ? RationalFn::one() : RationalFn::zero();
          if (hr != want || rh != want)
            return "size = " + std::to_string(size) + ", entry (" +
                   std::to_string(i) + ", " + std::to_string(j) + ")";
        }
    }
    return std::string{};
  }));

  return out;
}

std::vector<CheckResult> run_cyclotomic_checks() {
  std::vector<CheckResult> out;

  out.push_back(run("twist parameters commute: H(p,s) = H(s,p)", [] {
    for (int p = -2; p <= 3; ++p)
      for (int s = -2; s <= 3; ++s)
        for (int N = 0; N <= 4; ++N)
          if (homfly_double_twist({p, s, N}) != homfly_double_twist({s, p, N}))
            return "p = " + std::to_string(p) + ", s = " + std::to_string(s) +
                   ", N = " + std::to_string(N);
    return std::string{};
  }));

  out.push_back(run("mirror knot gives the bar image", [] {
    for (int p = -2; p <= 3; ++p)
      for (int s = -2; s <= 3; ++s)
        for (int N = 0; N <= 4; ++N)
          if (homfly_double_twist({-p, -s, N}) != homfly_double_twist({p, s, N}).bar())
            return "p = " + std::to_string(p) + ", s = " + std::to_string(s) +
                   ", N = " + std::to_string(N);
    return std::string{};
  }));

  out.push_back(run("figure-eight invariant is bar-invariant, N <= 5", [] {
    for (int N = 0; N <= 5; ++N) {
      const LaurentPoly h = homfly_double_twist({-1, 1, N});
      if (h.bar() != h) return "N = " + std::to_string(N);
    }
    return std::string{};
  }));

  out.push_back(run("printed closed forms agree with the general evaluator, N <= 6", [] {
    const std::pair<SpecialKnot, KnotParams> table[] = {
        {SpecialKnot::Trefoil31, {1, 1, 0}},
        {SpecialKnot::FigureEight41, {-1, 1, 0}},
        {SpecialKnot::FiveTwo52, {2, 1, 0}},
        {SpecialKnot::SixOne61, {-2, 1, 0}},
    };
    for (auto [knot, kp] : table)
      for (int N = 0; N <= 6; ++N) {
        kp.N = N;
        if (homfly_special(knot, N) != homfly_double_twist(kp))
          return "knot (" + std::to_string(kp.p) + ", " + std::to_string(kp.s) +
                 "), N = " + std::to_string(N);
      }
    return std::string{};
  }));

  out.push_back(run("trefoil prefactor collapses to (-1)^k a^{2k} q^{k(k-1)}, k <= 6", [] {
    for (int k = 0; k <= 6; ++k) {
      const BigInt sign = (k % 2 == 0) ? 1 : -1;
      const LaurentPoly lhs =
          LaurentPoly::monomial(sign, 4 * k * (k - 1), 4 * k) * c_tilde(k, 1) * c_tilde(k, 1);
      const LaurentPoly rhs = LaurentPoly::monomial(sign, k * (k - 1), 2 * k);
      if (lhs != rhs) return describe("k = " + std::to_string(k), lhs, rhs);
    }
    return std::string{};
  }));

  out.push_back(run("SU(1) specialization is identically 1, N <= 5", [] {
    const KnotParams grid[] = {{1, 1, 0}, {-1, 1, 0}, {2, 1, 0}, {-2, 1, 0}, {2, 2, 0}};
    for (KnotParams kp : grid)
      for (int N = 0; N <= 5; ++N) {
        kp.N = N;
        if (!su_n_invariant(kp, 1).is_one())
          return "(p, s) = (" + std::to_string(kp.p) + ", " + std::to_string(kp.s) +
                 "), N = " + std::to_string(N);
      }
    return std::string{};
  }));

  out.push_back(run("trivial cases: N = 0, and empty twist regions, give 1", [] {
    for (int p = -2; p <= 3; ++p)
      for (int s = -2; s <= 3; ++s)
        if (!homfly_double_twist({p, s, 0}).is_one())
          return "N = 0 at (p, s) = (" + std::to_string(p) + ", " + std::to_string(s) + ")";
    for (int N = 0; N <= 5; ++N)
      for (int other = -3; other <= 3; ++other) {
        if (!homfly_double_twist({0, other, N}).is_one())
          return "p = 0, s = " + std::to_string(other) + ", N = " + std::to_string(N);
        if (!homfly_double_twist({other, 0, N}).is_one())
          return "s = 0, p = " + std::to_string(other) + ", N = " + std::to_string(N);
      }
    return std::string{};
  }));

  out.push_back(run("printed a = q^2 forms match the specialized evaluator, N <= 6", [] {
    for (int p : {2, -2})
      for (int N = 0; N <= 6; ++N)
        if (jones_a_q2_printed(p, N) != su_n_invariant({p, 1, N}, 2))
          return "p = " + std::to_string(p) + ", N = " + std::to_string(N);
    return std::string{};
  }));

  out.push_back(run("cyclotomic expansion verified on the (p,s,n) grid, kmax = 4", [] {
    const std::pair<int, int> pairs[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {2, 2}};
    for (auto [p, s] : pairs)
      for (int n = 2; n <= 4; ++n) {
        const CyclotomicData data = verify_conjecture(p, s, n, 4, 2);
        if (!data.status.ok())
          return "(p, s, n) = (" + std::to_string(p) + ", " + std::to_string(s) +
                 ", " + std::to_string(n) + "): " + data.status.detail;
        for (const LaurentPoly& h : data.coefficients)
          if (h.depends_on_a()) return std::string("coefficient depends on a");
      }
    const CyclotomicData spot = extract_cyclotomic(1, 1, 2, 1);
    if (spot.coefficients.at(1) != LaurentPoly::monomial(-1, 4, 0))
      return describe("H_1 for the (1,1) knot at n = 2", spot.coefficients.at(1),
                      LaurentPoly::monomial(-1, 4, 0));
    return std::string{};
  }));

  out.push_back(run("ladder extraction matches the closed-form coefficients", [] {
    const std::pair<int, int> pairs[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {2, 2}};
    for (auto [p, s] : pairs)
      for (int n = 2; n <= 3; ++n) {
        const CyclotomicData data = extract_cyclotomic(p, s, n, 3);
        if (!data.status.ok()) return data.status.detail;
        for (int k = 0; k <= 3; ++k)
          if (data.coefficients[static_cast<std::size_t>(k)] != hk_closed_form(p, s, n, k))
            return "(p, s, n, k) = (" + std::to_string(p) + ", " + std::to_string(s) +
                   ", " + std::to_string(n) + ", " + std::to_string(k) + ")";
      }
    return std::string{};
  }));

  out.push_back(run("mirror pair extraction is bar-dual, n in {2, 3}", [] {
    const std::pair<int, int> pairs[] = {{1, 1}, {2, 1}, {2, 2}};
    for (auto [p, s] : pairs)
      for (int n = 2; n <= 3; ++n) {
        const CyclotomicData knot = extract_cyclotomic(p, s, n, 3);
        const CyclotomicData mirror = extract_cyclotomic(-p, -s, n, 3);
        if (!knot.status.ok() || !mirror.status.ok())
          return std::string("extraction failed");
        for (int k = 0; k <= 3; ++k)
          if (mirror.coefficients[static_cast<std::size_t>(k)] !=
              knot.coefficients[static_cast<std::size_t>(k)].bar())
            return "(p, s, n, k) = (" + std::to_string(p) + ", " + std::to_string(s) +
                   ", " + std::to_string(n) + ", " + std::to_string(k) + ")";
      }
    return std::string{};
  }));

  out.push_back(run("basis coefficients involve q only", [] {
    for (int N = 0; N <= 6; ++N)
      for (int k = 0; k <= N; ++k)
        for (int n = 1; n <= 4; ++n)
          if (basis_coeff(N, k, n).depends_on_a())
            return "(N, k, n) = (" + std::to_string(N) + ", " + std::to_string(k) +
                   ", " + std::to_string(n) + ")";
    return std::string{};
  }));

  return out;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int cases) {
  std::vector<CheckResult> all = run_core_checks(seed, cases);
  std::vector<CheckResult> coeff = run_coefficient_checks();
  std::vector<CheckResult> cyc = run_cyclotomic_checks();
  all.insert(all.end(), std::make_move_iterator(coeff.begin()),
             std::make_move_iterator(coeff.end()));
  all.insert(all.end(), std::make_move_iterator(cyc.begin()),
             std::make_move_iterator(cyc.end()));
  return all;
}

}  // namespace dtknot::checks
