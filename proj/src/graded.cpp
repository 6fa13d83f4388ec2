#include "twistlab/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "twistlab/errors.hpp"

namespace twistlab {

GradedDims::GradedDims(std::map<long, long> finite_part,
                       std::optional<GradedTail> tail)
    : finite_part_(std::move(finite_part)), tail_(std::move(tail)) {
  for (auto it = finite_part_.begin(); it != finite_part_.end();) {
    if (it->second < 0)
      throw std::invalid_argument("graded dimension must be >= 0");
    it = it->second == 0 ? finite_part_.erase(it) : std::next(it);
  }
  if (tail_) {
    if (tail_->period <= 0 || tail_->period % 2 != 0)
      throw std::invalid_argument("tail period must be positive and even");
    if (static_cast<long>(tail_->pattern.size()) != tail_->period)
      throw std::invalid_argument("tail pattern length must equal period");
    for (long d : tail_->pattern)
      if (d < 0) throw std::invalid_argument("graded dimension must be >= 0");
    if (!finite_part_.empty() &&
        finite_part_.rbegin()->first >= tail_->start_degree)
      throw std::invalid_argument(
          "finite part must be supported below the tail start");
  }
}

long GradedDims::dim_at(long degree) const {
  if (tail_ && degree >= tail_->start_degree) {
    long offset = (degree - tail_->start_degree) % tail_->period;
    return tail_->pattern[static_cast<size_t>(offset)];
  }
  auto it = finite_part_.find(degree);
  return it == finite_part_.end() ? 0 : it->second;
}

BigInt chi(const GradedDims& g) {
  if (g.has_tail())
    throw InfiniteSupport("chi requires a finite graded space");
  BigInt total = 0;
  for (const auto& [degree, dim] : g.finite_part())
    total += (degree % 2 == 0) ? dim : -dim;
  return total;
}

Rational chi_m_periodic(const GradedDims& g) {
  if (!g.has_tail())
    throw InfiniteSupport("chi_m_periodic requires an eventually periodic tail");
  const GradedTail& tail = *g.tail();
  BigInt signed_sum = 0;
  for (long j = 0; j < tail.period; ++j) {
    long degree = tail.start_degree + j;
    long dim = tail.pattern[static_cast<size_t>(j)];
    bool even = ((degree % 2) + 2) % 2 == 0;
    signed_sum += even ? dim : -dim;
  }
  return Rational(signed_sum, tail.period);
}

double chi_m_window(const GradedDims& g, long window) {
  if (window < 10)
    throw std::invalid_argument("window must be at least 10");
  double signed_sum = 0.0;
  // partial averages A_N = S_N / N with S_N the signed sum over [-N, N]
  signed_sum += g.dim_at(0);
  double lo = 0.0, hi = 0.0;
  bool seeded = false;
  long quarter_start = window - window / 4 + 1;
  for (long N = 1; N <= window; ++N) {
    double contrib = (N % 2 == 0 ? 1.0 : -1.0) *
                     (g.dim_at(N) + g.dim_at(-N));
    signed_sum += contrib;
    if (N >= quarter_start || N == window) {
      double avg = signed_sum / static_cast<double>(N);
      if (!seeded) {
        lo = hi = avg;
        seeded = true;
      } else {
        lo = std::min(lo, avg);
        hi = std::max(hi, avg);
      }
    }
  }
  return 0.5 * (lo + hi);
}

GradedDims tensor_cp_infinity(const GradedDims& finite, long shift) {
  if (finite.has_tail())
    throw InfiniteSupport("tensor_cp_infinity requires a finite module");
  const auto& F = finite.finite_part();
  if (F.empty()) {
    GradedTail tail{0, 2, {0, 0}};
    return GradedDims::periodic({}, tail);
  }
  long min_deg = F.begin()->first;
  long max_deg = F.rbegin()->first;
  // From degree max_deg + shift on, every generator contributes and the
  // dimensions only depend on parity.
  long tail_start = max_deg + shift;
  auto dim_at = [&](long i) {
    long total = 0;
    for (const auto& [j, dim] : F)
      if (j <= i - shift && ((i - j - shift) % 2 + 2) % 2 == 0) total += dim;
    return total;
  };
  std::map<long, long> head;
  for (long i = min_deg + shift; i < tail_start; ++i) {
    long d = dim_at(i);
    if (d != 0) head[i] = d;
  }
  GradedTail tail;
  tail.start_degree = tail_start;
  tail.period = 2;
  tail.pattern = {dim_at(tail_start), dim_at(tail_start + 1)};
  return GradedDims::periodic(std::move(head), std::move(tail));
}

}  // namespace twistlab
