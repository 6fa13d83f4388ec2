// Mean Euler characteristic formulas for circle-orbibundle contact manifolds
// and their fillings, the Morse-Bott first-page generator that cross-checks
// them, and the bad-orbit parity test. Everything here is exact rational
// arithmetic except the windowed estimator in graded.hpp.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistlab/graded.hpp"
#include "twistlab/half_integer.hpp"
#include "twistlab/rational.hpp"

namespace twistlab {

// The integer data of the setup: a filling of half-dimension n (the base has
// dimension 2n-2), Euler characteristics of the base M and the hypersurface
// H, Chern factor c, hypersurface degree k, twist power N.
struct BWData {
  int n = 4;
  BigInt chi_M = 0;
  BigInt chi_H = 0;
  long c = 0;
  long k = 1;
  long N = 1;

  long ell() const;           // gcd(N, k)
  BigInt mu_P() const;        // 2(N(c-k)+k)/ell, always an integer
  void validate() const;      // field invariants
};

// chi_m of the filling: (-1)^{n+1} ((N-ell) chi_H + ell chi_M)
//                       / (2 |N(c-k)+k|).
Rational chi_m_bw(const BWData& d);

// chi_m of a subcritical filling with Euler characteristic chi_W:
// (-1)^{n+1} chi_W / 2.
Rational chi_m_subcritical(int n, const BigInt& chi_W);

// Mean Euler characteristic forced by a Gysin-style exact sequence:
// +chi_B/2 for index-positive equivariant homology, -chi_B/2 otherwise.
Rational gysin_chi_m(const BigInt& chi_B, bool index_positive);

// Contact-level definition from orbit data:
// (-1)^{n+1} ((N/ell - 1) chi_s1_T1 + chi_s1_T2) / |mu_P|.
Rational chi_m_contact(int n, long N, long ell, const BigInt& chi_s1_T1,
                       const BigInt& chi_s1_T2, const BigInt& mu_P);

// chi_m of a connected m-fold cover:
// (-1)^{n+1} ((N/ell - gcd(N,m)) chi_H + gcd(N,m) chi_M) / |mu_P|.
Rational chi_m_cover(const BWData& d, long m);

// chi_m of the Brieskorn sphere Sigma(N, 2, ..., 2) of dimension 2n+1:
// (nN+1) / (2((n-1)N+2)); requires n even, N odd.
Rational chi_m_brieskorn(long n, long N);

// Parity test for even covers: true iff
// mu_T - dimq_T/2 - mu_half + dimq_half/2 is odd.
bool is_bad_orbit(const HalfInteger& mu_T, long dimq_T,
                  const HalfInteger& mu_half, long dimq_half);

// One orbit-space stratum feeding the first page.
struct Stratum {
  std::string label;
  long multiplicity = 1;       // cover multiplicity m
  bool principal = false;
  HalfInteger index;           // Maslov index mu(N_T)
  long dim_quotient = 0;       // dim(N_T / S^1), even
  std::vector<long> betti;     // equivariant Betti numbers in degrees 0,1,...
  BigInt chi_s1() const;       // alternating sum of betti
};

// Strata for covers m = 1 .. periods*N when k = 1: exceptional covers
// (m not a multiple of N) carry index 2(c-1)m + 2 floor(m/N) + 1 and the
// Betti data of H; principal covers m = m'N carry index m' mu_P and the
// Betti data of M. With validate_indices set, every exceptional index is
// recomputed through the path-index engine on bw_exceptional_model.
// Throws UnsupportedK for k > 1.
std::vector<Stratum> build_e1_strata_bw(const BWData& d,
                                        const std::vector<long>& betti_H,
                                        const std::vector<long>& betti_M,
                                        long periods,
                                        bool validate_indices = true);

struct E1Page {
  // (p, q) -> dimension with p = index - dim_quotient/2
  std::vector<std::pair<std::pair<long, long>, long>> entries;
  long p_min = 0;
  long p_max = 0;
  long q_max = 0;
};

E1Page e1_page(const std::vector<Stratum>& strata);

// Signed count over one degree period of width |mu_P| divided by |mu_P|.
// Throws IncompletePeriod on an empty page or when repeated periods in the
// page fail to match.
Rational chi_m_from_e1(const E1Page& page, const BigInt& mu_P);

// The total-degree dimension sequence generated by repeating the page with
// period |mu_P|; feeds the windowed estimator.
GradedDims graded_dims_from_e1(const E1Page& page, const BigInt& mu_P);

// Euler characteristic of the inertia space, (N-1) chi_H + chi_M, and the
// orbifold Chern pairing c - 1 + 1/N; both only for k = 1.
BigInt inertia_chi(const BWData& d);
Rational c1_orb_pairing(const BWData& d);

}  // namespace twistlab
