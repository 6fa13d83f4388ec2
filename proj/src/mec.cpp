#include "twistlab/mec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twistlab/errors.hpp"
#include "twistlab/rs_index.hpp"

namespace twistlab {

long BWData::ell() const { return std::gcd(N, k); }

BigInt BWData::mu_P() const {
  BigInt numerator = 2 * (BigInt(N) * (c - k) + k);
  return numerator / ell();  // ell divides N and k, hence the numerator
}

void BWData::validate() const {
  if (n < 2) throw InvalidDimension("filling half-dimension must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (N < 1) throw std::invalid_argument("N must be a positive integer");
  const long l = ell();
  if (N % l != 0 || k % l != 0)
    throw std::logic_error("gcd invariant violated");
  if (l == 1 && mu_P() % 2 != 0)
    throw std::logic_error("mu_P must be even when gcd(N,k) = 1");
}

Rational chi_m_bw(const BWData& d) {
  BigInt denom_core = BigInt(d.N) * (d.c - d.k) + d.k;
  if (denom_core == 0)
    throw ZeroDenominator("N(c-k)+k = 0: mean index vanishes");
  const long l = d.ell();
  BigInt numerator = (BigInt(d.N) - l) * d.chi_H + l * d.chi_M;
  if (d.n % 2 == 0) numerator = -numerator;  // (-1)^{n+1}
  BigInt denom = 2 * (denom_core > 0 ? denom_core : -denom_core);
  return Rational(numerator, denom);
}

Rational chi_m_subcritical(int n, const BigInt& chi_W) {
  BigInt numerator = n % 2 == 0 ? -chi_W : chi_W;
  return Rational(numerator, 2);
}

Rational gysin_chi_m(const BigInt& chi_B, bool index_positive) {
  return Rational(index_positive ? chi_B : -chi_B, 2);
}

Rational chi_m_contact(int n, long N, long ell, const BigInt& chi_s1_T1,
                       const BigInt& chi_s1_T2, const BigInt& mu_P) {
  if (mu_P == 0) throw ZeroDenominator("mu_P = 0");
  if (ell <= 0 || N % ell != 0)
    throw std::invalid_argument("ell must divide N");
  BigInt numerator = BigInt(N / ell - 1) * chi_s1_T1 + chi_s1_T2;
  if (n % 2 == 0) numerator = -numerator;
  return Rational(numerator, mu_P > 0 ? mu_P : -mu_P);
}

Rational chi_m_cover(const BWData& d, long m) {
  if (m < 1) throw std::invalid_argument("cover multiplicity must be >= 1");
  BigInt mu = d.mu_P();
  if (mu == 0) throw ZeroDenominator("mu_P = 0");
  const long g = std::gcd(d.N, m);
  BigInt numerator =
      (BigInt(d.N / d.ell()) - g) * d.chi_H + BigInt(g) * d.chi_M;
  if (d.n % 2 == 0) numerator = -numerator;
  return Rational(numerator, mu > 0 ? mu : -mu);
}

Rational chi_m_brieskorn(long n, long N) {
  if (n % 2 != 0 || N % 2 == 0)
    throw ParityViolation("chi_m_brieskorn requires n even and N odd");
  if (n < 2 || N < 1) throw std::invalid_argument("need n >= 2, N >= 1");
  return Rational(BigInt(n) * N + 1, 2 * (BigInt(n - 1) * N + 2));
}

bool is_bad_orbit(const HalfInteger& mu_T, long dimq_T,
                  const HalfInteger& mu_half, long dimq_half) {
  if (dimq_T % 2 != 0 || dimq_half % 2 != 0)
    throw std::invalid_argument("quotient dimensions must be even");
  // mu_T - dimq_T/2 - mu_half + dimq_half/2, tracked as twice the value
  BigInt twice = mu_T.twice() - dimq_T - mu_half.twice() + dimq_half;
  if (twice % 2 != 0)
    throw NonIntegerCombination(
        "index/dimension combination is not an integer");
  BigInt value = twice / 2;
  return value % 2 != 0;
}

BigInt Stratum::chi_s1() const {
  BigInt total = 0;
  for (size_t q = 0; q < betti.size(); ++q)
    total += (q % 2 == 0) ? betti[q] : -betti[q];
  return total;
}

std::vector<Stratum> build_e1_strata_bw(const BWData& d,
                                        const std::vector<long>& betti_H,
                                        const std::vector<long>& betti_M,
                                        long periods,
                                        bool validate_indices) {
  if (d.k != 1)
    throw UnsupportedK(
        "no closed index formula for exceptional covers when k > 1");
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  d.validate();
  const BigInt mu = d.mu_P();

  std::vector<Stratum> strata;
  for (long m = 1; m <= periods * d.N; ++m) {
    Stratum s;
    s.multiplicity = m;
    if (m % d.N == 0) {
      const long mp = m / d.N;
      s.label = "principal x" + std::to_string(mp);
      s.principal = true;
      s.index = HalfInteger::from_twice(2 * mp * mu);
      s.dim_quotient = 2 * d.n - 2;
      s.betti = betti_M;
    } else {
      s.label = "exceptional x" + std::to_string(m);
      s.principal = false;
      BigInt idx = 2 * BigInt(d.c - 1) * m + 2 * (m / d.N) + 1;
      s.index = HalfInteger::whole(idx);
      s.dim_quotient = 2 * d.n - 4;
      s.betti = betti_H;
      if (validate_indices) {
        HalfInteger oracle = rs_index(
            bw_exceptional_model(d.n, d.c, d.N, m, 256));
        if (oracle != s.index)
          throw std::logic_error(
              "exceptional index formula disagrees with the path-index "
              "engine at cover " + std::to_string(m) + ": formula " +
              s.index.str() + ", engine " + oracle.str());
      }
    }
    strata.push_back(std::move(s));
  }
  return strata;
}

E1Page e1_page(const std::vector<Stratum>& strata) {
  E1Page page;
  std::map<std::pair<long, long>, long> cells;
  bool first = true;
  for (const Stratum& s : strata) {
    if (s.dim_quotient % 2 != 0)
      throw std::invalid_argument("quotient dimension must be even");
    BigInt twice_p = s.index.twice() - s.dim_quotient;
    if (twice_p % 2 != 0)
      throw NonIntegerCombination(
          "stratum " + s.label + " has non-integer page degree");
    long p = static_cast<long>(twice_p / 2);
    for (size_t q = 0; q < s.betti.size(); ++q) {
      if (s.betti[q] == 0) continue;
      cells[{p, static_cast<long>(q)}] += s.betti[q];
      page.q_max = std::max(page.q_max, static_cast<long>(q));
    }
    if (first) {
      page.p_min = page.p_max = p;
      first = false;
    } else {
      page.p_min = std::min(page.p_min, p);
      page.p_max = std::max(page.p_max, p);
    }
  }
  page.entries.assign(cells.begin(), cells.end());
  return page;
}

Rational chi_m_from_e1(const E1Page& page, const BigInt& mu_P) {
  if (page.entries.empty())
    throw IncompletePeriod("empty first page");
  if (mu_P == 0) throw ZeroDenominator("mu_P = 0");
  BigInt width = mu_P > 0 ? mu_P : -mu_P;
  long w = static_cast<long>(width);
  // One period is the window [p_min, p_min + |mu_P|). Entries beyond it must
  // repeat the window or the strata did not cover whole periods.
  std::map<std::pair<long, long>, long> window;
  for (const auto& [pq, dim] : page.entries) {
    long p = pq.first, q = pq.second;
    if (p < page.p_min + w) {
      window[{p, q}] += dim;
    } else {
      long folded = page.p_min + ((p - page.p_min) % w);
      auto it = window.find({folded, q});
      if (it == window.end() || it->second != dim)
        throw IncompletePeriod(
            "page entries do not repeat with the expected period");
    }
  }
  BigInt signed_sum = 0;
  for (const auto& [pq, dim] : window) {
    long parity = ((pq.first + pq.second) % 2 + 2) % 2;
    signed_sum += parity == 0 ? dim : -dim;
  }
  return Rational(signed_sum, width);
}

GradedDims graded_dims_from_e1(const E1Page& page, const BigInt& mu_P) {
  if (page.entries.empty()) throw IncompletePeriod("empty first page");
  BigInt width_big = mu_P > 0 ? mu_P : -mu_P;
  long w = static_cast<long>(width_big);
  // Keep one period of cells; each cell contributes at total degrees
  // p+q, p+q+w, p+q+2w, ...
  std::vector<std::pair<long, long>> rays;  // (total degree, dim)
  long max_total = 0;
  long min_total = 0;
  bool first = true;
  for (const auto& [pq, dim] : page.entries) {
    if (pq.first >= page.p_min + w) continue;
    long total = pq.first + pq.second;
    rays.emplace_back(total, dim);
    if (first) {
      max_total = min_total = total;
      first = false;
    } else {
      max_total = std::max(max_total, total);
      min_total = std::min(min_total, total);
    }
  }
  auto dim_at = [&](long i) {
    long total = 0;
    for (const auto& [t, dim] : rays)
      if (i >= t && (i - t) % w == 0) total += dim;
    return total;
  };
  std::map<long, long> head;
  for (long i = min_total; i < max_total; ++i) {
    long v = dim_at(i);
    if (v != 0) head[i] = v;
  }
  GradedTail tail;
  tail.start_degree = max_total;
  tail.period = w;
  tail.pattern.resize(static_cast<size_t>(w));
  for (long j = 0; j < w; ++j)
    tail.pattern[static_cast<size_t>(j)] = dim_at(max_total + j);
  return GradedDims::periodic(std::move(head), std::move(tail));
}

BigInt inertia_chi(const BWData& d) {
  if (d.k != 1) throw UnsupportedK("inertia count needs k = 1");
  return BigInt(d.N - 1) * d.chi_H + d.chi_M;
}

Rational c1_orb_pairing(const BWData& d) {
  if (d.k != 1) throw UnsupportedK("orbifold Chern pairing needs k = 1");
  return Rational(d.c - 1) + Rational(1, d.N);
}

}  // namespace twistlab
