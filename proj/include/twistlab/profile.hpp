// Numerical verifier for the collar gluing data: the interpolation function
// rho, the twisting profile f = 2 pi (rho - rho')/rho^2, the mapping-torus
// shift h, the exactness identity behind the twist being a symplectomorphism,
// and the sign conditions of the binding interpolation. All checks report
// residuals; tolerances are applied by the caller.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace twistlab {

struct FunctionTable {
  double t0 = 0.0;
  double t1 = 1.0;
  std::vector<double> values;
  std::function<double(double)> analytic_deriv;  // optional

  size_t size() const { return values.size(); }
  double step() const {
    return (t1 - t0) / static_cast<double>(values.size() - 1);
  }
  double t_at(size_t i) const {
    return t0 + step() * static_cast<double>(i);
  }
  // Central differences at interior nodes, second-order one-sided at the
  // ends, unless an analytic derivative is attached.
  double deriv_at(size_t i) const;
};

struct ProfileConfig {
  double C = 1.0;        // collar constant, > 0
  double eta = 0.5;      // 0 < eta < min(C, 1)
  int grid_size = 10001; // forced odd so t = 0 is a node

  void validate() const;
};

// Closed forms for the interpolation function and its derivative:
// e^{t-C} for t <= 0.25, t(2-t) for t >= 0.75, quintic-smoothstep blend
// in between. Positive for C <= 3 (guarded anyway).
double rho_value(double t, double C);
double rho_derivative(double t, double C);

// rho tabulated on [-0.99, 0.99] with its analytic derivative attached.
// Throws NonPositiveRho if the table is not strictly positive.
FunctionTable build_rho(const ProfileConfig& cfg);

// f = 2 pi (rho - rho')/rho^2 on rho's grid. Uses rho's analytic derivative
// when present, central differences otherwise.
FunctionTable twisting_profile(const FunctionTable& rho);

// max_t | rho(t) (2 pi + int_0^t e^{s-C} f(s) ds) - 2 pi e^{t-C} |,
// integrals by composite Simpson. Grids must match and contain t = 0.
double verify_profile(const FunctionTable& rho, const FunctionTable& f,
                      double C);

// h(t) = A - e^{t-C} f(t) + int_0^t e^{s-C} f(s) ds. Throws NonPositiveShift
// when min h <= 0.
FunctionTable mapping_torus_shift(const FunctionTable& f, double C,
                                  double A);

// Residual of d/dt [A - e^t f + int_0^t e^s f] + e^t f' = 0 for a table on
// [0, 1]; derivative by differencing, integral by Simpson. The identity holds
// for any smooth f, so the residual is pure discretization error.
double exactness_check(const FunctionTable& f);

// One boundary pair (h1, h2) with derivatives, as functions of the radius.
struct BindingPair {
  std::function<double(double)> h1, dh1, h2, dh2;
};

// The two endpoint pairs of the interpolation: the open-book side (exponential
// collar matched to 1-r^2 / r^2 near the binding by a smoothstep extension)
// and the circle-bundle side (rho(1-r), 1-rho(1-r)).
BindingPair binding_pair_open_book(const ProfileConfig& cfg);
BindingPair binding_pair_bundle(const ProfileConfig& cfg);

// Checks h1 > 0, h1' < 0, h2 > 0, h2' >= 0 on a radius grid in (0, 1] for
// every convex combination (1-s) pair0 + s pair1 with s on an s_samples
// grid in [0, 1]. Throws ConditionViolated with the failing (s, r,
// condition).
bool verify_binding_conditions(const BindingPair& pair0,
                               const BindingPair& pair1, int s_samples,
                               int r_samples);

// Convenience wrapper building both pairs from the configuration.
bool binding_interpolation_check(const ProfileConfig& cfg, int s_samples);

// Composite-Simpson prefix integrals: result[i] = int_{t0}^{t_i} y dt.
std::vector<double> simpson_prefix(const std::vector<double>& y, double h);

}  // namespace twistlab
