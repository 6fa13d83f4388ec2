// Robbin-Salamon index of symplectic paths via crossing forms: dimension and
// signature of the form Q_t(v) = omega0(v, psi'(t) v) on ker(psi(t) - Id) at
// every time where det(psi(t) - Id) vanishes, with half weights at the
// endpoints.
#pragma once

#include <vector>

#include "twistlab/half_integer.hpp"
#include "twistlab/symplectic_path.hpp"

namespace twistlab {

struct CrossingRecord {
  double t = 0.0;
  int kernel_dim = 0;
  int signature = 0;
  bool degenerate = false;
  bool at_endpoint = false;
  std::vector<double> kernel_spectrum;  // eigenvalues of Q on the kernel
};

struct IndexOptions {
  double det_tol = 1e-10;    // |det(psi(t)-Id)| threshold for a crossing
  double kernel_tol = 1e-8;  // singular-value / eigenvalue rank threshold
  double symp_tol = 1e-9;    // per-sample symplecticity check
  int refine_iters = 60;     // bisection / golden-section refinement steps
};

// All crossings of det(psi(t) - Id) on [0, T]: grid sign changes refined by
// bisection, tangential zeros found as local minima of |det| and refined by
// golden section plus a parabola fit, endpoints always tested. Plateaus
// (det below tolerance across whole grid intervals) and crossings the grid
// cannot separate raise UnresolvedCrossingCluster. A constant identity path
// reports its two endpoints. Records come back sorted, kernel data filled.
std::vector<CrossingRecord> find_crossings(const SymplecticPath& path,
                                           double det_tol = 1e-10,
                                           int refine_iters = 60);

// Kernel basis of psi(t) - Id by singular-value thresholding, crossing form
// on the basis (symmetrized), signature and degeneracy by eigenvalue
// thresholding. Degeneracy is reported in the record, never thrown.
CrossingRecord crossing_signature(const SymplecticPath& path, double t,
                                  double kernel_tol = 1e-8);

// The index 1/2 sgn(Q_0) + sum over interior crossings of sgn(Q_t)
// + 1/2 sgn(Q_T), as an exact half-integer. Constant identity paths (and
// constant identity diagonal blocks) contribute 0; the index of a
// block-diagonal path is the sum over its blocks. Degenerate crossings
// raise DegenerateCrossing; composing with a small rotation block
// (rotation_path with a tiny rate) is the documented way out.
HalfInteger rs_index(const SymplecticPath& path,
                     const IndexOptions& options = {});

// Index of the max_covers-fold iterate divided by max_covers, exact. Also
// checks the iteration bound |mu(psi^m) - m * estimate| <= n - 1 for every
// m <= max_covers.
Rational mean_index(const SymplecticPath& loop, int max_covers,
                    const IndexOptions& options = {});

}  // namespace twistlab
