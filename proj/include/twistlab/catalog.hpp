// Generators for the worked example families: hypersurfaces in complex
// projective space and pairs of Fermat hypersurfaces, plus the polynomial
// f_n(d) whose nonvanishing distinguishes all twist powers in the second
// family.
#pragma once

#include <string>
#include <vector>

#include "twistlab/mec.hpp"
#include "twistlab/rational.hpp"

namespace twistlab {

struct ExampleRecord {
  std::string name;
  BWData data;
  std::string provenance;
};

// M = CP^{n-1}, H a degree-k hypersurface: chi(M) = n,
// chi(H) = ((1-k)^n - 1)/k + n, c = n. The twist power N defaults to 1.
ExampleRecord cp_hypersurface(int n, long k);

// M = H_d^{n-1} (degree-d hypersurface in CP^n), H = H_d^{n-2} its
// hyperplane section, a degree-1 hypersurface in M; c = n + 1 - d.
ExampleRecord fermat_pair(int n, long d);

// f_n(d) = (1-d)^n (1 + nd - d^2) - (1 - d^2), exactly.
BigInt f_poly(long n, long d);

// f_n'(d) = (1-d)^{n-1} d ((n+2)d - (n^2+n+2)) + 2d, as a real number.
double f_poly_deriv(long n, double d);

// Same derivative evaluated exactly at an integer point.
BigInt f_poly_deriv_exact(long n, long d);

struct ScanRow {
  long n = 0;
  std::vector<BigInt> values;     // f_n(d) for d = 2..n
  bool nonvanishing = false;      // all values != 0
  bool endpoints_ok = false;      // three closed forms reproduced exactly
  bool signs_ok = false;          // sign pattern of f_n(2) and f_n' by parity
};

struct ScanReport {
  long n_max = 0;
  std::vector<ScanRow> rows;
  bool all_pass = false;
};

// For every 4 <= n <= n_max checks that f_n(d) != 0 on 2 <= d <= n, that the
// endpoint identities f_n(2) = 3 + (-1)^n (2n-3),
// f_n(n-1) = ((2-n)^{n-1} - 1)(2-n) n and f_n(n) = (1-n)^n - 1 + n^2 hold
// exactly, and that f_n(2) and f_n' on the integer points of [2, n-2] have
// the sign dictated by the parity of n. A counterexample raises ScanFailure.
ScanReport fermat_nonvanishing_scan(long n_max);

// Canned records for the command-line catalog.
std::vector<ExampleRecord> catalog_entries();

}  // namespace twistlab
