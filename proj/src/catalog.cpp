#include "twistlab/catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

BigInt ipow(BigInt base, long exp) {
  BigInt result = 1;
  for (long i = 0; i < exp; ++i) result *= base;
  return result;
}

// ((1-k)^e - 1)/k + add; the numerator is divisible by k because
// (1-k)^e = 1 (mod k).
BigInt hypersurface_chi(long k, long e, long add) {
  BigInt numerator = ipow(BigInt(1) - k, e) - 1;
  if (numerator % k != 0)
    throw std::logic_error("hypersurface Euler characteristic not integral");
  return numerator / k + add;
}

}  // namespace

ExampleRecord cp_hypersurface(int n, long k) {
  if (n < 4) throw InvalidDimension("cp_hypersurface needs n >= 4");
  if (k < 1) throw std::invalid_argument("degree k must be >= 1");
  ExampleRecord rec;
  rec.name = "cp-hypersurface";
  rec.data.n = n;
  rec.data.chi_M = n;
  rec.data.chi_H = hypersurface_chi(k, n, n);
  rec.data.c = n;
  rec.data.k = k;
  rec.data.N = 1;
  rec.provenance =
      "CP^" + std::to_string(n - 1) + " with a degree-" + std::to_string(k) +
      " hypersurface; chi(CP^{n-1}) = n, chi(H) = ((1-k)^n - 1)/k + n, "
      "c_1 = n [omega]";
  rec.data.validate();
  return rec;
}

ExampleRecord fermat_pair(int n, long d) {
  if (n < 4) throw InvalidDimension("fermat_pair needs n >= 4");
  if (d < 1) throw std::invalid_argument("degree d must be >= 1");
  ExampleRecord rec;
  rec.name = "fermat-pair";
  rec.data.n = n;
  rec.data.chi_M = hypersurface_chi(d, n + 1, n + 1);
  rec.data.chi_H = hypersurface_chi(d, n, n);
  rec.data.c = n + 1 - d;
  rec.data.k = 1;
  rec.data.N = 1;
  rec.provenance =
      "degree-" + std::to_string(d) + " hypersurface in CP^" +
      std::to_string(n) + " with its hyperplane section; "
      "chi(H_d^{m}) = ((1-d)^{m+2} - 1)/d + m + 2, c = n + 1 - d, k = 1";
  rec.data.validate();
  return rec;
}

BigInt f_poly(long n, long d) {
  BigInt one_minus_d = BigInt(1) - d;
  return ipow(one_minus_d, n) * (1 + BigInt(n) * d - BigInt(d) * d) -
         (1 - BigInt(d) * d);
}

double f_poly_deriv(long n, double d) {
  double p = std::pow(1.0 - d, static_cast<double>(n - 1));
  double nn = static_cast<double>(n);
  return p * (d * ((nn + 2.0) * d - (nn * nn + nn + 2.0))) + 2.0 * d;
}

BigInt f_poly_deriv_exact(long n, long d) {
  BigInt p = ipow(BigInt(1) - d, n - 1);
  return p * (BigInt(d) * ((n + 2) * BigInt(d) - (BigInt(n) * n + n + 2))) +
         2 * BigInt(d);
}

ScanReport fermat_nonvanishing_scan(long n_max) {
  if (n_max < 4) throw std::invalid_argument("scan needs n_max >= 4");
  ScanReport report;
  report.n_max = n_max;
  report.all_pass = true;
  for (long n = 4; n <= n_max; ++n) {
    ScanRow row;
    row.n = n;
    row.nonvanishing = true;
    for (long d = 2; d <= n; ++d) {
      BigInt value = f_poly(n, d);
      if (value == 0) row.nonvanishing = false;
      row.values.push_back(std::move(value));
    }

    // Endpoint closed forms, exactly.
    const bool n_even = n % 2 == 0;
    BigInt f2 = BigInt(3) + (n_even ? 1 : -1) * (2 * BigInt(n) - 3);
    BigInt fn1 =
        (ipow(BigInt(2) - n, n - 1) - 1) * (BigInt(2) - n) * n;
    BigInt fn = ipow(BigInt(1) - n, n) - 1 + BigInt(n) * n;
    row.endpoints_ok = f_poly(n, 2) == f2 && f_poly(n, n - 1) == fn1 &&
                       f_poly(n, n) == fn;

    // f_n(2) positive iff n even; f_n' keeps the matching sign on the
    // integer points of [2, n-2].
    row.signs_ok = (f_poly(n, 2) > 0) == n_even;
    for (long d = 2; d <= n - 2 && row.signs_ok; ++d) {
      BigInt deriv = f_poly_deriv_exact(n, d);
      row.signs_ok = n_even ? deriv > 0 : deriv < 0;
    }

    if (!(row.nonvanishing && row.endpoints_ok && row.signs_ok)) {
      report.all_pass = false;
      report.rows.push_back(std::move(row));
      throw ScanFailure("scan failed at n = " + std::to_string(n));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<ExampleRecord> catalog_entries() {
  std::vector<ExampleRecord> entries;
  for (long k = 1; k <= 4; ++k) entries.push_back(cp_hypersurface(4, k));
  entries.push_back(cp_hypersurface(5, 2));
  for (long d = 1; d <= 4; ++d) entries.push_back(fermat_pair(4, d));
  entries.push_back(fermat_pair(5, 3));
  return entries;
}

}  // namespace twistlab
