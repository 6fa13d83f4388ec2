#include "twistlab/rs_index.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

double det_minus_id(const SymplecticPath& path, double t) {
  Mat a = path.value(t);
  a.diagonal().array() -= 1.0;
  return a.determinant();
}

double bisect_root(const SymplecticPath& path, double a, double b, double fa,
                   int iters) {
  for (int i = 0; i < iters; ++i) {
    double m = 0.5 * (a + b);
    double fm = det_minus_id(path, m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section on |det| followed by a parabola-vertex polish. The polish
// matters: golden section alone stalls in the roundoff plateau of a
// quadratic dip and leaves t* accurate only to ~sqrt(eps).
double refine_minimum(const SymplecticPath& path, double a, double b,
                      int iters) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = std::abs(det_minus_id(path, x1));
  double f2 = std::abs(det_minus_id(path, x2));
  for (int i = 0; i < iters && (b - a) > 1e-13 * (1.0 + std::abs(b)); ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(det_minus_id(path, x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(det_minus_id(path, x2));
    }
  }
  double t = 0.5 * (a + b);
  double span = path.duration();
  for (int round = 0; round < 2; ++round) {
    double h = std::max(1e-5 * span, 1e-9);
    double fm = det_minus_id(path, t - h);
    double f0 = det_minus_id(path, t);
    double fp = det_minus_id(path, t + h);
    double denom = fm - 2.0 * f0 + fp;
    if (denom == 0.0) break;
    double step = 0.5 * h * (fm - fp) / denom;
    if (std::abs(step) > h) break;
    t += step;
  }
  return t;
}

struct Candidate {
  double t;
  bool at_endpoint;
};

std::vector<Candidate> detect(const SymplecticPath& path, double det_tol,
                              int refine_iters) {
  const auto& grid = path.grid;
  const size_t k = grid.size();
  std::vector<double> d(k);
  for (size_t i = 0; i < k; ++i) d[i] = det_minus_id(path, grid[i]);

  std::vector<bool> zero(k);
  for (size_t i = 0; i < k; ++i) zero[i] = std::abs(d[i]) <= det_tol;

  // A run of near-zero nodes longer than one node means the determinant
  // vanishes across whole grid intervals; individual crossings cannot be
  // separated at this resolution.
  for (size_t i = 0; i + 1 < k; ++i) {
    if (zero[i] && zero[i + 1])
      throw UnresolvedCrossingCluster(
          "det(psi(t)-Id) vanishes on an interval near t = " +
          std::to_string(grid[i]) + "; refine the grid or split the path");
  }

  std::vector<Candidate> out;
  for (size_t i = 0; i < k; ++i)
    if (zero[i]) out.push_back({grid[i], i == 0 || i == k - 1});

  // transversal crossings
  for (size_t i = 0; i + 1 < k; ++i) {
    if (zero[i] || zero[i + 1]) continue;
    if (d[i] * d[i + 1] < 0.0)
      out.push_back(
          {bisect_root(path, grid[i], grid[i + 1], d[i], refine_iters),
           false});
  }

  // tangential crossings: interior local minima of |det| that refine to
  // (numerically) zero
  for (size_t i = 1; i + 1 < k; ++i) {
    if (zero[i - 1] || zero[i] || zero[i + 1]) continue;
    if (d[i - 1] * d[i] < 0.0 || d[i] * d[i + 1] < 0.0) continue;
    if (std::abs(d[i]) <= std::abs(d[i - 1]) &&
        std::abs(d[i]) <= std::abs(d[i + 1])) {
      double t = refine_minimum(path, grid[i - 1], grid[i + 1], refine_iters);
      if (std::abs(det_minus_id(path, t)) <= det_tol)
        out.push_back({t, false});
    }
  }

  // endpoints are always tested explicitly
  if (!zero.front() && std::abs(det_minus_id(path, grid.front())) <= det_tol)
    out.push_back({grid.front(), true});
  if (!zero.back() && std::abs(det_minus_id(path, grid.back())) <= det_tol)
    out.push_back({grid.back(), true});

  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.t < b.t; });

  // Merge refinements of the same crossing (adjacent searches converge to
  // the same point); genuinely distinct crossings closer than half a grid
  // step cannot be trusted.
  double span = path.duration();
  double merge_tol = 1e-7 * span;
  double min_step = span;
  for (size_t i = 0; i + 1 < k; ++i)
    min_step = std::min(min_step, grid[i + 1] - grid[i]);
  std::vector<Candidate> merged;
  for (const Candidate& c : out) {
    if (!merged.empty() && c.t - merged.back().t <= merge_tol) {
      merged.back().at_endpoint = merged.back().at_endpoint || c.at_endpoint;
      continue;
    }
    if (!merged.empty() && c.t - merged.back().t < 0.5 * min_step)
      throw UnresolvedCrossingCluster(
          "two crossings near t = " + std::to_string(c.t) +
          " cannot be separated at grid resolution");
    merged.push_back(c);
  }
  // clamp near-endpoint refinements onto the endpoints
  if (!merged.empty()) {
    if (merged.front().t <= merge_tol) {
      merged.front().t = grid.front();
      merged.front().at_endpoint = true;
    }
    if (span - merged.back().t <= merge_tol) {
      merged.back().t = grid.back();
      merged.back().at_endpoint = true;
    }
  }
  return merged;
}

void check_samples_symplectic(const SymplecticPath& path, double tol) {
  for (size_t i = 0; i < path.samples.size(); ++i) {
    double defect = symplectic_defect(path.samples[i]);
    if (defect > tol)
      throw NonSymplecticSample(
          "sample at t = " + std::to_string(path.grid[i]) +
          " has symplectic defect " + std::to_string(defect));
  }
}

HalfInteger rs_index_single(const SymplecticPath& path,
                            const IndexOptions& options) {
  if (path.is_constant_identity()) return HalfInteger();
  BigInt twice = 0;
  for (const Candidate& c :
       detect(path, options.det_tol, options.refine_iters)) {
    CrossingRecord rec = crossing_signature(path, c.t, options.kernel_tol);
    rec.at_endpoint = c.at_endpoint;
    if (rec.degenerate) {
      throw DegenerateCrossing(
          rec.t, rec.kernel_spectrum,
          "degenerate crossing at t = " + std::to_string(rec.t) +
              "; perturb the path (e.g. block with a tiny rotation) or "
              "refine the grid");
    }
    twice += rec.at_endpoint ? rec.signature : 2 * rec.signature;
  }
  return HalfInteger::from_twice(twice);
}

}  // namespace

CrossingRecord crossing_signature(const SymplecticPath& path, double t,
                                  double kernel_tol) {
  Mat a = path.value(t);
  a.diagonal().array() -= 1.0;

  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int kernel_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= kernel_tol) ++kernel_dim;

  CrossingRecord rec;
  rec.t = t;
  rec.kernel_dim = kernel_dim;
  const double span = path.duration();
  rec.at_endpoint = t <= 1e-12 * span || t >= span * (1.0 - 1e-12);
  if (kernel_dim == 0) return rec;

  Mat basis = svd.matrixV().rightCols(kernel_dim);
  Mat vel = path.velocity(t);
  Mat q(kernel_dim, kernel_dim);
  for (int i = 0; i < kernel_dim; ++i)
    for (int j = 0; j < kernel_dim; ++j)
      q(i, j) = omega0(basis.col(i), vel * basis.col(j));
  Mat qs = 0.5 * (q + q.transpose());

  Eigen::SelfAdjointEigenSolver<Mat> eig(qs);
  int pos = 0, neg = 0;
  rec.kernel_spectrum.reserve(static_cast<size_t>(kernel_dim));
  for (int i = 0; i < kernel_dim; ++i) {
    double lambda = eig.eigenvalues()(i);
    rec.kernel_spectrum.push_back(lambda);
    if (lambda > kernel_tol)
      ++pos;
    else if (lambda < -kernel_tol)
      ++neg;
    else
      rec.degenerate = true;
  }
  rec.signature = pos - neg;
  return rec;
}

std::vector<CrossingRecord> find_crossings(const SymplecticPath& path,
                                           double det_tol, int refine_iters) {
  if (!(det_tol > 0)) throw std::invalid_argument("det_tol must be > 0");
  std::vector<CrossingRecord> records;
  if (path.is_constant_identity()) {
    records.push_back(crossing_signature(path, path.grid.front()));
    records.push_back(crossing_signature(path, path.grid.back()));
    return records;
  }
  std::vector<Candidate> times;
  if (path.has_blocks()) {
    // Detect per block (a block that stays at the identity would otherwise
    // force det == 0 everywhere), then analyse the full matrix at the
    // union of the detected times.
    for (size_t b = 0; b < path.block_dims.size(); ++b) {
      SymplecticPath sub = path.block(static_cast<int>(b));
      if (sub.is_constant_identity()) continue;
      for (const Candidate& c : detect(sub, det_tol, refine_iters))
        times.push_back(c);
    }
    std::sort(times.begin(), times.end(),
              [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
    std::vector<Candidate> merged;
    double merge_tol = 1e-7 * path.duration();
    for (const Candidate& c : times) {
      if (!merged.empty() && c.t - merged.back().t <= merge_tol) {
        merged.back().at_endpoint = merged.back().at_endpoint || c.at_endpoint;
        continue;
      }
      merged.push_back(c);
    }
    times = std::move(merged);
  } else {
    times = detect(path, det_tol, refine_iters);
  }
  records.reserve(times.size());
  for (const Candidate& c : times) {
    CrossingRecord rec = crossing_signature(path, c.t);
    rec.at_endpoint = c.at_endpoint;
    records.push_back(std::move(rec));
  }
  return records;
}

HalfInteger rs_index(const SymplecticPath& path, const IndexOptions& options) {
  check_samples_symplectic(path, options.symp_tol);
  if (path.is_constant_identity()) return HalfInteger();
  if (path.has_blocks()) {
    // The index is additive under direct sums, and the blockwise route is
    // what makes paths with constant identity factors computable at all
    // (their full-matrix determinant vanishes identically).
    HalfInteger total;
    for (size_t b = 0; b < path.block_dims.size(); ++b)
      total += rs_index_single(path.block(static_cast<int>(b)), options);
    return total;
  }
  return rs_index_single(path, options);
}

Rational mean_index(const SymplecticPath& loop, int max_covers,
                    const IndexOptions& options) {
  if (max_covers < 4)
    throw std::invalid_argument("mean_index needs max_covers >= 4");
  if (!loop.is_loop(options.symp_tol))
    throw NotALoop("mean_index requires a loop");
  Rational estimate =
      rs_index(iterate(loop, max_covers), options).to_rational() /
      Rational(max_covers);
  const Rational bound(loop.n - 1);
  for (int m = 1; m <= max_covers; ++m) {
    Rational mu = rs_index(iterate(loop, m), options).to_rational();
    Rational gap = (mu - Rational(m) * estimate).abs();
    if (gap > bound)
      throw std::logic_error("iteration bound exceeded at cover " +
                             std::to_string(m) + ": |" + mu.str() + " - " +
                             std::to_string(m) + " * " + estimate.str() +
                             "| > " + bound.str());
  }
  return estimate;
}

}  // namespace twistlab
