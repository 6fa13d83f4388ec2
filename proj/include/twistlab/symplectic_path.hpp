// Discretized paths of symplectic matrices with optional analytic evaluators
// and optional block-diagonal structure, plus the model-path constructors for
// circle-bundle Reeb orbits.
#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Standard complex structure J0 on R^{2n} in coordinates (x_1..x_n, y_1..y_n):
// J0 x_i = y_i, J0 y_i = -x_i. The symplectic form is omega0 = dx ^ dy,
// i.e. omega0(u, v) = u^T J0^T v, and a full counterclockwise rotation has
// index +2.
Mat standard_j(int n);

double omega0(const Vec& u, const Vec& v);

// max-norm of M^T J0 M - J0.
double symplectic_defect(const Mat& m);

bool is_symplectic(const Mat& m, double tol);

struct SymplecticPath {
  int n = 0;                          // half-dimension
  std::vector<double> grid;           // strictly increasing, grid[0] == 0
  std::vector<Mat> samples;           // one 2n x 2n matrix per grid node
  std::function<Mat(double)> value_fn;     // analytic value, optional
  std::function<Mat(double)> velocity_fn;  // analytic slope, optional
  std::vector<int> block_dims;        // half-dims of diagonal blocks, optional

  double duration() const { return grid.back(); }
  bool analytic() const { return static_cast<bool>(value_fn); }
  bool has_blocks() const { return block_dims.size() > 1; }

  // psi(t): analytic when tagged, otherwise linear interpolation between
  // samples.
  Mat value(double t) const;

  // psi'(t): analytic when tagged; otherwise central differences at interior
  // nodes and one-sided differences at the endpoints, evaluated at the node
  // nearest to t.
  Mat velocity(double t) const;

  Mat start() const { return samples.front(); }
  Mat end() const { return samples.back(); }

  bool is_constant_identity(double tol = 1e-12) const;
  bool is_loop(double tol = 1e-9) const;

  // Extracts diagonal block `index` as a standalone path (shared grid).
  SymplecticPath block(int index) const;
};

// Generic analytic path constructor; samples the value function on a uniform
// grid over [0, duration].
SymplecticPath make_analytic_path(int n, double duration, int samples,
                                  std::function<Mat(double)> value_fn,
                                  std::function<Mat(double)> velocity_fn);

// Path sampled from external data; no analytic tag, no block structure.
SymplecticPath make_sampled_path(int n, std::vector<double> grid,
                                 std::vector<Mat> samples);

// Planar rotation by angle winding_rate * t. winding_rate is exact so model
// loops land exactly on identity.
SymplecticPath rotation_path(const Rational& winding_rate, double duration,
                             int samples);

SymplecticPath constant_identity_path(int n, double duration, int samples);

// Block-diagonal assembly. Parts must share a grid; when allow_resample is
// set, parts are resampled onto the finest common span (analytic parts
// exactly, sampled parts by linear interpolation).
SymplecticPath block_diag_path(const std::vector<SymplecticPath>& parts,
                               bool allow_resample = true);

// Model for the linearized flow along the smallest contractible cover of a
// principal fiber: one planar block winding (c-k)N (the base contribution),
// one winding k (the normal direction), and n-3 constant blocks. Duration
// 2*pi. The index of such a loop is 2(N(c-k)+k).
SymplecticPath bw_principal_model(int n, long c, long k, long N, int samples);

// Model for an m-fold cover of a binding fiber when the hypersurface degree
// is 1 and m is not a multiple of N: base block winding (c-1)N over duration
// 2*pi*m/N (so (c-1)m full turns) and a normal block of rate 1 that stops
// short of closing. Throws PrincipalNotExceptional when N divides m.
SymplecticPath bw_exceptional_model(int n, long c, long N, long m,
                                    int samples);

// Concatenation in time; p2 must start where p1 ends. Matching block layouts
// are preserved.
SymplecticPath catenate(const SymplecticPath& p1, const SymplecticPath& p2,
                        double match_tol = 1e-9);

// m-fold catenation of a loop (psi(T) == psi(0)).
SymplecticPath iterate(const SymplecticPath& loop, int m,
                       double match_tol = 1e-9);

}  // namespace twistlab
