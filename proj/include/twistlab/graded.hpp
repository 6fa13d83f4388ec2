// Graded dimension sequences: a finitely supported part plus an optional
// eventually periodic tail in increasing degree. Carrier for Euler and mean
// Euler characteristic computations.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

struct GradedTail {
  long start_degree = 0;
  long period = 2;                // positive and even
  std::vector<long> pattern;      // one dimension per degree, size == period
};

class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::map<long, long> finite_part, std::optional<GradedTail> tail);

  static GradedDims finite(std::map<long, long> dims) {
    return GradedDims(std::move(dims), std::nullopt);
  }
  static GradedDims periodic(std::map<long, long> finite_part,
                             GradedTail tail) {
    return GradedDims(std::move(finite_part), std::move(tail));
  }

  const std::map<long, long>& finite_part() const { return finite_part_; }
  const std::optional<GradedTail>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }

  long dim_at(long degree) const;

 private:
  std::map<long, long> finite_part_;  // degree -> dimension, zeros dropped
  std::optional<GradedTail> tail_;
};

// Euler characteristic of a finite graded space; InfiniteSupport on tails.
BigInt chi(const GradedDims& g);

// Exact mean Euler characteristic of an eventually periodic sequence:
// signed sum over one tail period divided by the period. The finite part
// averages away, and liminf = limsup because the tail repeats.
Rational chi_m_periodic(const GradedDims& g);

// Floating-point liminf/limsup estimator over the partial averages
// (1/N) sum_{i=-N}^{N} (-1)^i dim_i. The proxies are the extrema over the
// last quarter of N <= window.
double chi_m_window(const GradedDims& g, long window);

// Tensors a finite module with the homology of CP^infinity after shifting
// it down by `shift` degrees: dim_i = sum of finite_j over j <= i - shift
// with i - j - shift even. Result has a period-2 tail.
GradedDims tensor_cp_infinity(const GradedDims& finite, long shift);

}  // namespace twistlab
