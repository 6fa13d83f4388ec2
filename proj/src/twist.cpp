#include "twistlab/twist.hpp"

#include <numeric>
#include <stdexcept>

#include "twistlab/errors.hpp"

namespace twistlab {

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::NontrivialIndexNegative:
      return "NontrivialIndexNegative";
    case VerdictStatus::NontrivialChiMismatch:
      return "NontrivialChiMismatch";
    case VerdictStatus::ConsistentCase1:
      return "ConsistentCase1";
    case VerdictStatus::ConsistentCase2:
      return "ConsistentCase2";
    case VerdictStatus::ConsistentCase3:
      return "ConsistentCase3";
  }
  return "?";
}

std::pair<BigInt, BigInt> theorem_equation(const BWData& d, long m) {
  const BigInt Nm = BigInt(d.N) * m;
  const BigInt g = std::gcd(d.N * m, d.k);
  const BigInt kck = BigInt(d.k) * (d.c - d.k);
  BigInt lhs = ((kck + 1) * Nm + BigInt(d.k) * d.k - g * g) * d.chi_H;
  BigInt rhs = (kck * Nm + BigInt(d.k) * d.k - g * g) * d.chi_M;
  return {lhs, rhs};
}

Verdict decide_triviality(const BWData& d) {
  if (d.n < 4)
    throw InvalidDimension("the obstruction needs base dimension >= 6");
  d.validate();

  Verdict v;
  v.data = d;
  v.k_divides_N = d.N % d.k == 0;
  v.gcd_N_k = d.ell();
  v.mu_P = d.mu_P();
  v.assumptions = {"[omega] primitive", "adapted Donaldson hypersurface",
                   "M and H simply connected"};

  if (d.c < d.k) {
    v.status = VerdictStatus::NontrivialIndexNegative;
    v.condition = "c < k";
    v.lhs = d.c;
    v.rhs = d.k;
    return v;
  }

  if (!v.k_divides_N) {
    // Two covers with the same gcd(Nm, k): the equation is affine in m, so
    // holding at both forces chi(H) = chi(M) = 0.
    auto [l1, r1] = theorem_equation(d, 1);
    auto [l2, r2] = theorem_equation(d, 1 + d.k);
    if (l1 == r1 && l2 == r2) {
      v.status = VerdictStatus::ConsistentCase1;
      v.condition = "chi(H) = chi(M) = 0";
      v.lhs = d.chi_H;
      v.rhs = d.chi_M;
    } else {
      v.status = VerdictStatus::NontrivialChiMismatch;
      v.condition = l1 == r1 ? "comparison equation at m = 1 + k"
                             : "comparison equation at m = 1";
      v.lhs = l1 == r1 ? l2 : l1;
      v.rhs = l1 == r1 ? r2 : r1;
    }
    return v;
  }

  if (d.c == d.k) {
    v.condition = "chi(H) = 0";
    v.lhs = d.chi_H;
    v.rhs = 0;
    v.status = d.chi_H == 0 ? VerdictStatus::ConsistentCase2
                            : VerdictStatus::NontrivialChiMismatch;
    return v;
  }

  // c > k, k | N
  v.condition = "((c-k)k+1) chi(H) = (c-k)k chi(M)";
  BigInt factor = BigInt(d.c - d.k) * d.k;
  v.lhs = (factor + 1) * d.chi_H;
  v.rhs = factor * d.chi_M;
  v.status = v.lhs == v.rhs ? VerdictStatus::ConsistentCase3
                            : VerdictStatus::NontrivialChiMismatch;
  return v;
}

PowersReport distinct_powers(const BWData& base, long N_max) {
  if (N_max < 1) throw std::invalid_argument("N_max must be >= 1");
  PowersReport report;
  report.base = base;
  report.all_nontrivial = true;
  for (long N = 1; N <= N_max; ++N) {
    BWData d = base;
    d.N = N;
    Verdict v = decide_triviality(d);
    if (!v.nontrivial()) {
      report.all_nontrivial = false;
      report.consistent_powers.push_back(N);
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

CrossCheck subcritical_crosscheck(const BWData& d) {
  CrossCheck check;
  check.lhs = chi_m_subcritical(d.n, BigInt(d.k) * (d.chi_M - d.chi_H));
  check.rhs = chi_m_cover(d, d.k);
  check.equal = check.lhs == check.rhs;
  return check;
}

}  // namespace twistlab
