// Decision procedure for powers of fibered Dehn twists. The verdicts are
// one-directional: "Consistent" means the necessary conditions for a trivial
// power hold, never that the power is trivial.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistlab/mec.hpp"
#include "twistlab/rational.hpp"

namespace twistlab {

enum class VerdictStatus {
  NontrivialIndexNegative,  // c < k: covers eventually have negative index
  NontrivialChiMismatch,    // the Euler-characteristic equation fails
  ConsistentCase1,          // c >= k, k does not divide N, chi(H)=chi(M)=0
  ConsistentCase2,          // c = k, k divides N, chi(H)=0
  ConsistentCase3,          // c > k, k divides N, ((c-k)k+1)chi(H)=(c-k)k chi(M)
};

const char* to_string(VerdictStatus status);

struct Verdict {
  VerdictStatus status;
  BWData data;
  bool k_divides_N = false;
  BigInt lhs = 0;             // evaluated sides of the decisive condition
  BigInt rhs = 0;
  std::string condition;      // the condition those sides instantiate
  BigInt mu_P = 0;
  long gcd_N_k = 1;
  // Unverifiable geometric hypotheses assumed on behalf of the caller.
  std::vector<std::string> assumptions;

  bool nontrivial() const {
    return status == VerdictStatus::NontrivialIndexNegative ||
           status == VerdictStatus::NontrivialChiMismatch;
  }
};

// Applies the case split: c < k is always an obstruction; otherwise exactly
// one of the three consistency conditions is tested, chosen by c vs k and
// k | N. For the k-does-not-divide-N case the test evaluates the comparison
// equation at the two covers m = 1 and m = 1 + k (equal gcd(Nm, k)), which
// pins chi(H) = chi(M) = 0. Throws InvalidDimension for n < 4.
Verdict decide_triviality(const BWData& d);

// Both sides of the comparison equation at cover m:
// lhs = ((k(c-k)+1)Nm + k^2 - gcd(Nm,k)^2) chi(H)
// rhs = (k(c-k)Nm + k^2 - gcd(Nm,k)^2) chi(M).
std::pair<BigInt, BigInt> theorem_equation(const BWData& d, long m);

struct PowersReport {
  BWData base;                    // verdicts vary N over this data
  std::vector<Verdict> verdicts;  // verdict for tau^N, N = 1 .. N_max
  bool all_nontrivial = false;    // then all powers are pairwise distinct
  // N for which tau^N passed the consistency test (no obstruction found)
  std::vector<long> consistent_powers;
};

PowersReport distinct_powers(const BWData& base, long N_max);

struct CrossCheck {
  Rational lhs;  // chi_m of the subcritical model, W~ x D^2
  Rational rhs;  // chi_m of the k-fold cover
  bool equal = false;
};

// The two mean-Euler-characteristic routes a trivial power would have to
// reconcile: chi_m_subcritical(n, k (chi_M - chi_H)) against
// chi_m_cover(d, k).
CrossCheck subcritical_crosscheck(const BWData& d);

}  // namespace twistlab
