#include "twistlab/symplectic_path.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_grid(double duration, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(duration > 0)) throw std::invalid_argument("duration must be > 0");
  std::vector<double> grid(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    grid[static_cast<size_t>(i)] =
        duration * static_cast<double>(i) / static_cast<double>(samples - 1);
  grid.back() = duration;
  return grid;
}

// Raise the sample count so every full turn of the fastest block sees at
// least 24 nodes; tangential det zeros need a node near each dip.
int samples_for_rate(int requested, double max_rate, double duration) {
  double turns = std::abs(max_rate) * duration / (2.0 * kPi);
  int needed = static_cast<int>(std::ceil(24.0 * turns)) + 1;
  return std::max(requested, needed);
}

}  // namespace

Mat standard_j(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(n + i, i) = 1.0;   // x_i -> y_i
    j(i, n + i) = -1.0;  // y_i -> -x_i
  }
  return j;
}

double omega0(const Vec& u, const Vec& v) {
  const int n = static_cast<int>(u.size()) / 2;
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    total += u(i) * v(n + i) - u(n + i) * v(i);
  return total;
}

double symplectic_defect(const Mat& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  Mat j = standard_j(n);
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

bool is_symplectic(const Mat& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be > 0");
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  return symplectic_defect(m) <= tol;
}

Mat SymplecticPath::value(double t) const {
  if (value_fn) return value_fn(t);
  if (t <= grid.front()) return samples.front();
  if (t >= grid.back()) return samples.back();
  auto hi = std::upper_bound(grid.begin(), grid.end(), t);
  size_t i = static_cast<size_t>(hi - grid.begin());
  double t0 = grid[i - 1], t1 = grid[i];
  double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * samples[i - 1] + w * samples[i];
}

Mat SymplecticPath::velocity(double t) const {
  if (velocity_fn) return velocity_fn(t);
  // nearest node
  auto hi = std::lower_bound(grid.begin(), grid.end(), t);
  size_t i = static_cast<size_t>(hi - grid.begin());
  if (i >= grid.size()) i = grid.size() - 1;
  if (i > 0 && t - grid[i - 1] < grid[i] - t) --i;
  size_t last = grid.size() - 1;
  if (i == 0)
    return (samples[1] - samples[0]) / (grid[1] - grid[0]);
  if (i == last)
    return (samples[last] - samples[last - 1]) /
           (grid[last] - grid[last - 1]);
  return (samples[i + 1] - samples[i - 1]) / (grid[i + 1] - grid[i - 1]);
}

bool SymplecticPath::is_constant_identity(double tol) const {
  for (const Mat& s : samples) {
    if ((s - Mat::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff() > tol)
      return false;
  }
  return true;
}

bool SymplecticPath::is_loop(double tol) const {
  return (end() - start()).cwiseAbs().maxCoeff() <= tol;
}

SymplecticPath SymplecticPath::block(int index) const {
  if (!has_blocks() || index < 0 ||
      index >= static_cast<int>(block_dims.size()))
    throw std::invalid_argument("no such block");
  int offset = std::accumulate(block_dims.begin(),
                               block_dims.begin() + index, 0);
  int nb = block_dims[static_cast<size_t>(index)];
  const int N = n;
  auto slice = [offset, nb, N](const Mat& m) {
    Mat out(2 * nb, 2 * nb);
    out.topLeftCorner(nb, nb) = m.block(offset, offset, nb, nb);
    out.topRightCorner(nb, nb) = m.block(offset, N + offset, nb, nb);
    out.bottomLeftCorner(nb, nb) = m.block(N + offset, offset, nb, nb);
    out.bottomRightCorner(nb, nb) = m.block(N + offset, N + offset, nb, nb);
    return out;
  };
  SymplecticPath sub;
  sub.n = nb;
  sub.grid = grid;
  sub.samples.reserve(samples.size());
  for (const Mat& s : samples) sub.samples.push_back(slice(s));
  if (value_fn) {
    auto fn = value_fn;
    sub.value_fn = [fn, slice](double t) { return slice(fn(t)); };
  }
  if (velocity_fn) {
    auto fn = velocity_fn;
    sub.velocity_fn = [fn, slice](double t) { return slice(fn(t)); };
  }
  return sub;
}

SymplecticPath make_analytic_path(int n, double duration, int samples,
                                  std::function<Mat(double)> value_fn,
                                  std::function<Mat(double)> velocity_fn) {
  SymplecticPath p;
  p.n = n;
  p.grid = uniform_grid(duration, samples);
  p.samples.reserve(p.grid.size());
  for (double t : p.grid) p.samples.push_back(value_fn(t));
  p.value_fn = std::move(value_fn);
  p.velocity_fn = std::move(velocity_fn);
  return p;
}

SymplecticPath make_sampled_path(int n, std::vector<double> grid,
                                 std::vector<Mat> samples) {
  if (grid.size() != samples.size() || grid.size() < 2)
    throw std::invalid_argument("grid/sample size mismatch");
  if (grid.front() != 0.0)
    throw std::invalid_argument("grid must start at t = 0");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("grid must be strictly increasing");
  for (const Mat& s : samples)
    if (s.rows() != 2 * n || s.cols() != 2 * n)
      throw std::invalid_argument("sample dimension mismatch");
  SymplecticPath p;
  p.n = n;
  p.grid = std::move(grid);
  p.samples = std::move(samples);
  return p;
}

SymplecticPath rotation_path(const Rational& winding_rate, double duration,
                             int samples) {
  if (samples < 8) throw std::invalid_argument("rotation_path needs >= 8 samples");
  const double w = winding_rate.to_double();
  auto value = [w](double t) {
    double a = w * t;
    Mat m(2, 2);
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return m;
  };
  auto velocity = [w](double t) {
    double a = w * t;
    Mat m(2, 2);
    m << -std::sin(a), -std::cos(a), std::cos(a), -std::sin(a);
    return Mat(w * m);
  };
  int k = samples_for_rate(samples, w, duration);
  SymplecticPath p = make_analytic_path(1, duration, k, value, velocity);
  p.block_dims = {1};
  return p;
}

SymplecticPath constant_identity_path(int n, double duration, int samples) {
  auto value = [n](double) { return Mat(Mat::Identity(2 * n, 2 * n)); };
  auto velocity = [n](double) { return Mat(Mat::Zero(2 * n, 2 * n)); };
  SymplecticPath p = make_analytic_path(n, duration, std::max(samples, 8),
                                        value, velocity);
  p.block_dims = {n};
  return p;
}

SymplecticPath block_diag_path(const std::vector<SymplecticPath>& parts,
                               bool allow_resample) {
  if (parts.empty()) throw EmptyInput("block_diag_path of no parts");
  if (parts.size() == 1) return parts.front();

  std::vector<double> grid = parts.front().grid;
  bool same = true;
  for (const auto& p : parts)
    if (p.grid != grid) same = false;
  std::vector<SymplecticPath> resampled;
  const std::vector<SymplecticPath>* use = &parts;
  if (!same) {
    if (!allow_resample)
      throw IncompatibleGrids("parts do not share a grid");
    // Common span check, then resample everything onto the finest grid.
    double t_end = grid.back();
    size_t finest = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (std::abs(parts[i].grid.back() - t_end) > 1e-12 * (1.0 + t_end))
        throw IncompatibleGrids("parts cover different time spans");
      if (parts[i].grid.size() > parts[finest].grid.size()) finest = i;
    }
    grid = parts[finest].grid;
    for (const auto& p : parts) {
      SymplecticPath r = p;
      r.grid = grid;
      r.samples.clear();
      r.samples.reserve(grid.size());
      for (double t : grid) r.samples.push_back(p.value(t));
      resampled.push_back(std::move(r));
    }
    use = &resampled;
  }

  int total = 0;
  for (const auto& p : *use) total += p.n;
  auto assemble = [total](const std::vector<Mat>& blocks) {
    Mat out = Mat::Zero(2 * total, 2 * total);
    int off = 0;
    for (const Mat& b : blocks) {
      int nb = static_cast<int>(b.rows()) / 2;
      out.block(off, off, nb, nb) = b.topLeftCorner(nb, nb);
      out.block(off, total + off, nb, nb) = b.topRightCorner(nb, nb);
      out.block(total + off, off, nb, nb) = b.bottomLeftCorner(nb, nb);
      out.block(total + off, total + off, nb, nb) =
          b.bottomRightCorner(nb, nb);
      off += nb;
    }
    return out;
  };

  SymplecticPath out;
  out.n = total;
  out.grid = grid;
  out.samples.reserve(grid.size());
  std::vector<Mat> blocks(use->size());
  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = 0; j < use->size(); ++j) blocks[j] = (*use)[j].samples[i];
    out.samples.push_back(assemble(blocks));
  }
  bool all_analytic = true;
  for (const auto& p : *use)
    if (!p.value_fn || !p.velocity_fn) all_analytic = false;
  if (all_analytic) {
    auto copies = std::make_shared<std::vector<SymplecticPath>>(*use);
    out.value_fn = [copies, assemble](double t) {
      std::vector<Mat> bs;
      bs.reserve(copies->size());
      for (const auto& p : *copies) bs.push_back(p.value_fn(t));
      return assemble(bs);
    };
    out.velocity_fn = [copies, assemble](double t) {
      std::vector<Mat> bs;
      bs.reserve(copies->size());
      for (const auto& p : *copies) bs.push_back(p.velocity_fn(t));
      return assemble(bs);
    };
  }
  for (const auto& p : *use) {
    if (p.block_dims.empty()) {
      out.block_dims.push_back(p.n);
    } else {
      out.block_dims.insert(out.block_dims.end(), p.block_dims.begin(),
                            p.block_dims.end());
    }
  }
  return out;
}

SymplecticPath bw_principal_model(int n, long c, long k, long N,
                                  int samples) {
  if (n < 3) throw std::invalid_argument("bw_principal_model needs n >= 3");
  if (k < 1 || N < 1)
    throw std::invalid_argument("bw_principal_model needs k >= 1, N >= 1");
  if (samples < 64)
    throw std::invalid_argument("bw_principal_model needs >= 64 samples");
  const double duration = 2.0 * kPi;
  std::vector<SymplecticPath> parts;
  parts.push_back(rotation_path(Rational((c - k) * N), duration, samples));
  parts.push_back(rotation_path(Rational(k), duration, samples));
  if (n > 3)
    parts.push_back(constant_identity_path(n - 3, duration, samples));
  return block_diag_path(parts);
}

SymplecticPath bw_exceptional_model(int n, long c, long N, long m,
                                    int samples) {
  if (n < 3) throw std::invalid_argument("bw_exceptional_model needs n >= 3");
  if (N < 2 || m < 1)
    throw std::invalid_argument("bw_exceptional_model needs N >= 2, m >= 1");
  if (samples < 64)
    throw std::invalid_argument("bw_exceptional_model needs >= 64 samples");
  if (m % N == 0)
    throw PrincipalNotExceptional(
        "m is a multiple of N: the cover is a principal orbit");
  const double duration =
      2.0 * kPi * static_cast<double>(m) / static_cast<double>(N);
  std::vector<SymplecticPath> parts;
  parts.push_back(rotation_path(Rational((c - 1) * N), duration, samples));
  parts.push_back(rotation_path(Rational(1), duration, samples));
  if (n > 3)
    parts.push_back(constant_identity_path(n - 3, duration, samples));
  return block_diag_path(parts);
}

SymplecticPath catenate(const SymplecticPath& p1, const SymplecticPath& p2,
                        double match_tol) {
  if (p1.n != p2.n)
    throw EndpointMismatch("catenation of paths of different dimension");
  double defect = (p1.end() - p2.start()).cwiseAbs().maxCoeff();
  if (defect > match_tol)
    throw EndpointMismatch("endpoint mismatch of size " +
                           std::to_string(defect));
  const double t1 = p1.duration();
  SymplecticPath out;
  out.n = p1.n;
  out.grid = p1.grid;
  out.samples = p1.samples;
  for (size_t i = 1; i < p2.grid.size(); ++i) {
    out.grid.push_back(t1 + p2.grid[i]);
    out.samples.push_back(p2.samples[i]);
  }
  if (p1.value_fn && p2.value_fn) {
    auto a = std::make_shared<SymplecticPath>(p1);
    auto b = std::make_shared<SymplecticPath>(p2);
    out.value_fn = [a, b, t1](double t) {
      return t <= t1 ? a->value_fn(t) : b->value_fn(t - t1);
    };
    if (p1.velocity_fn && p2.velocity_fn)
      out.velocity_fn = [a, b, t1](double t) {
        return t < t1 ? a->velocity_fn(t) : b->velocity_fn(t - t1);
      };
  }
  if (p1.block_dims == p2.block_dims) out.block_dims = p1.block_dims;
  return out;
}

SymplecticPath iterate(const SymplecticPath& loop, int m, double match_tol) {
  if (m < 1) throw std::invalid_argument("iterate needs m >= 1");
  if (!loop.is_loop(match_tol))
    throw NotALoop("path endpoint differs from its start");
  if (m == 1) return loop;
  const double period = loop.duration();
  SymplecticPath out;
  out.n = loop.n;
  out.grid = loop.grid;
  out.samples = loop.samples;
  for (int r = 1; r < m; ++r) {
    for (size_t i = 1; i < loop.grid.size(); ++i) {
      out.grid.push_back(period * r + loop.grid[i]);
      out.samples.push_back(loop.samples[i]);
    }
  }
  if (loop.value_fn) {
    auto base = std::make_shared<SymplecticPath>(loop);
    double total = period * m;
    out.value_fn = [base, period, total](double t) {
      double s = std::fmod(std::min(t, total), period);
      if (t >= total) s = period;
      return base->value_fn(s);
    };
    if (loop.velocity_fn)
      out.velocity_fn = [base, period, total](double t) {
        double s = std::fmod(std::min(t, total), period);
        if (t >= total) s = period;
        return base->velocity_fn(s);
      };
  }
  out.block_dims = loop.block_dims;
  return out;
}

}  // namespace twistlab
