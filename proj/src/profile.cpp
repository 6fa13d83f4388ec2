#include "twistlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double smoothstep5(double u) {
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}
double smoothstep5_deriv(double u) {
  return 30.0 * u * u * (1.0 - u) * (1.0 - u);
}

double clamp01(double u) { return std::min(1.0, std::max(0.0, u)); }

size_t node_at_zero(const FunctionTable& f) {
  double pos = -f.t0 / f.step();
  auto i = static_cast<long>(std::llround(pos));
  if (i < 0 || i >= static_cast<long>(f.size()) ||
      std::abs(pos - static_cast<double>(i)) > 1e-9)
    throw std::invalid_argument("grid must contain t = 0 as a node");
  return static_cast<size_t>(i);
}

}  // namespace

double FunctionTable::deriv_at(size_t i) const {
  if (analytic_deriv) return analytic_deriv(t_at(i));
  const double h = step();
  const size_t last = values.size() - 1;
  if (i == 0)
    return (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
  if (i == last)
    return (3.0 * values[last] - 4.0 * values[last - 1] + values[last - 2]) /
           (2.0 * h);
  return (values[i + 1] - values[i - 1]) / (2.0 * h);
}

void ProfileConfig::validate() const {
  if (!(C > 0)) throw std::invalid_argument("C must be positive");
  if (!(eta > 0 && eta < std::min(C, 1.0)))
    throw std::invalid_argument("eta must satisfy 0 < eta < min(C, 1)");
  if (grid_size < 1024)
    throw std::invalid_argument("verification grids need >= 1024 points");
}

double rho_value(double t, double C) {
  const double a = std::exp(t - C);
  if (t <= 0.25) return a;
  const double b = t * (2.0 - t);
  if (t >= 0.75) return b;
  const double s = smoothstep5((t - 0.25) / 0.5);
  return (1.0 - s) * a + s * b;
}

double rho_derivative(double t, double C) {
  const double a = std::exp(t - C);
  if (t <= 0.25) return a;
  if (t >= 0.75) return 2.0 - 2.0 * t;
  const double u = (t - 0.25) / 0.5;
  const double s = smoothstep5(u);
  const double ds = smoothstep5_deriv(u) * 2.0;
  const double b = t * (2.0 - t);
  return (1.0 - s) * a + s * (2.0 - 2.0 * t) + ds * (b - a);
}

FunctionTable build_rho(const ProfileConfig& cfg) {
  cfg.validate();
  FunctionTable rho;
  rho.t0 = -0.99;
  rho.t1 = 0.99;
  int k = cfg.grid_size % 2 == 0 ? cfg.grid_size + 1 : cfg.grid_size;
  rho.values.resize(static_cast<size_t>(k));
  const double C = cfg.C;
  for (size_t i = 0; i < rho.values.size(); ++i)
    rho.values[i] = rho_value(rho.t_at(i), C);
  rho.analytic_deriv = [C](double t) { return rho_derivative(t, C); };
  for (double v : rho.values)
    if (!(v > 0)) throw NonPositiveRho("rho is not strictly positive");
  return rho;
}

FunctionTable twisting_profile(const FunctionTable& rho) {
  FunctionTable f;
  f.t0 = rho.t0;
  f.t1 = rho.t1;
  f.values.resize(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) {
    const double r = rho.values[i];
    if (!(r > 0))
      throw NonPositiveRho("twisting profile needs rho > 0 on the grid");
    f.values[i] = kTwoPi * (r - rho.deriv_at(i)) / (r * r);
  }
  return f;
}

std::vector<double> simpson_prefix(const std::vector<double>& y, double h) {
  const size_t n = y.size();
  std::vector<double> out(n, 0.0);
  if (n < 3) {
    for (size_t i = 1; i < n; ++i)
      out[i] = out[i - 1] + 0.5 * h * (y[i - 1] + y[i]);
    return out;
  }
  out[1] = h / 12.0 * (5.0 * y[0] + 8.0 * y[1] - y[2]);
  for (size_t i = 2; i < n; ++i)
    out[i] = out[i - 2] + h / 3.0 * (y[i - 2] + 4.0 * y[i - 1] + y[i]);
  return out;
}

double verify_profile(const FunctionTable& rho, const FunctionTable& f,
                      double C) {
  if (rho.size() != f.size() || rho.t0 != f.t0 || rho.t1 != f.t1)
    throw IncompatibleGrids("rho and f must share a grid");
  const size_t i0 = node_at_zero(rho);
  const double h = rho.step();
  std::vector<double> integrand(rho.size());
  for (size_t i = 0; i < rho.size(); ++i)
    integrand[i] = std::exp(rho.t_at(i) - C) * f.values[i];
  std::vector<double> prefix = simpson_prefix(integrand, h);
  double worst = 0.0;
  for (size_t i = 0; i < rho.size(); ++i) {
    const double integral = prefix[i] - prefix[i0];
    const double residual = rho.values[i] * (kTwoPi + integral) -
                            kTwoPi * std::exp(rho.t_at(i) - C);
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

FunctionTable mapping_torus_shift(const FunctionTable& f, double C,
                                  double A) {
  const size_t i0 = node_at_zero(f);
  const double h = f.step();
  std::vector<double> integrand(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    integrand[i] = std::exp(f.t_at(i) - C) * f.values[i];
  std::vector<double> prefix = simpson_prefix(integrand, h);
  FunctionTable out;
  out.t0 = f.t0;
  out.t1 = f.t1;
  out.values.resize(f.size());
  double lowest = A;
  for (size_t i = 0; i < f.size(); ++i) {
    out.values[i] = A - std::exp(f.t_at(i) - C) * f.values[i] +
                    (prefix[i] - prefix[i0]);
    lowest = std::min(lowest, out.values[i]);
  }
  if (!(lowest > 0))
    throw NonPositiveShift("mapping torus shift reaches " +
                           std::to_string(lowest) + "; raise A");
  return out;
}

double exactness_check(const FunctionTable& f) {
  const double h = f.step();
  std::vector<double> integrand(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    integrand[i] = std::exp(f.t_at(i)) * f.values[i];
  std::vector<double> prefix = simpson_prefix(integrand, h);
  FunctionTable shift;
  shift.t0 = f.t0;
  shift.t1 = f.t1;
  shift.values.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    shift.values[i] = kTwoPi - std::exp(f.t_at(i)) * f.values[i] + prefix[i];
  double worst = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    double residual =
        shift.deriv_at(i) + std::exp(f.t_at(i)) * f.deriv_at(i);
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

namespace {

// Twisting profile for the binding deformation: smooth, monotone, 0 near 0
// and 2 pi near eta.
double binding_f(double t, double eta) {
  return kTwoPi * smoothstep5(clamp01((t - 0.1 * eta) / (0.8 * eta)));
}

}  // namespace

BindingPair binding_pair_open_book(const ProfileConfig& cfg) {
  cfg.validate();
  const double C = cfg.C, eta = cfg.eta;
  const double r_match = 1.0 - eta;   // formulas valid for r > r_match
  const double r_inner = 0.5 * r_match;  // pure 1-r^2 / r^2 below this

  // h2 on the formula side: 1 + (1/2pi) int_0^{1-r} e^{s-C} f - e^{1-r-C};
  // constant once f has saturated, i.e. for 1-r >= 0.9 eta.
  const int quad_nodes = 4097;
  std::vector<double> integrand(quad_nodes);
  const double h = eta / static_cast<double>(quad_nodes - 1);
  for (int i = 0; i < quad_nodes; ++i) {
    double s = h * static_cast<double>(i);
    integrand[static_cast<size_t>(i)] =
        std::exp(s - C) * binding_f(s, eta);
  }
  auto prefix = simpson_prefix(integrand, h);
  auto integral_to = [prefix, h, eta](double upper) {
    double clamped = std::min(upper, eta);
    double pos = clamped / h;
    size_t i = static_cast<size_t>(pos);
    if (i >= prefix.size() - 1) return prefix.back();
    double w = pos - static_cast<double>(i);
    return (1.0 - w) * prefix[i] + w * prefix[i + 1];
  };

  auto h2_formula = [integral_to, C](double r) {
    return 1.0 + integral_to(1.0 - r) / kTwoPi - std::exp(1.0 - r - C);
  };
  const double k0 = h2_formula(r_match);

  auto blend = [r_inner, r_match](double r) {
    return smoothstep5(clamp01((r - r_inner) / (r_match - r_inner)));
  };
  auto blend_deriv = [r_inner, r_match](double r) {
    double u = (r - r_inner) / (r_match - r_inner);
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return smoothstep5_deriv(u) / (r_match - r_inner);
  };

  BindingPair pair;
  pair.h1 = [C, r_match, blend](double r) {
    if (r >= r_match) return std::exp(1.0 - r - C);
    double w = blend(r);
    return (1.0 - w) * (1.0 - r * r) + w * std::exp(1.0 - r - C);
  };
  pair.dh1 = [C, r_match, blend, blend_deriv](double r) {
    if (r >= r_match) return -std::exp(1.0 - r - C);
    double w = blend(r), dw = blend_deriv(r);
    return (1.0 - w) * (-2.0 * r) + w * (-std::exp(1.0 - r - C)) +
           dw * (std::exp(1.0 - r - C) - (1.0 - r * r));
  };
  pair.h2 = [h2_formula, k0, r_match, blend](double r) {
    if (r >= r_match) return h2_formula(r);
    double w = blend(r);
    return (1.0 - w) * r * r + w * k0;
  };
  pair.dh2 = [C, eta, k0, r_match, blend, blend_deriv](double r) {
    if (r >= r_match)
      return std::exp(1.0 - r - C) *
             (1.0 - binding_f(1.0 - r, eta) / kTwoPi);
    double w = blend(r), dw = blend_deriv(r);
    return (1.0 - w) * 2.0 * r + dw * (k0 - r * r);
  };
  return pair;
}

BindingPair binding_pair_bundle(const ProfileConfig& cfg) {
  cfg.validate();
  const double C = cfg.C;
  BindingPair pair;
  pair.h1 = [C](double r) { return rho_value(1.0 - r, C); };
  pair.dh1 = [C](double r) { return -rho_derivative(1.0 - r, C); };
  pair.h2 = [C](double r) { return 1.0 - rho_value(1.0 - r, C); };
  pair.dh2 = [C](double r) { return rho_derivative(1.0 - r, C); };
  return pair;
}

bool verify_binding_conditions(const BindingPair& pair0,
                               const BindingPair& pair1, int s_samples,
                               int r_samples) {
  if (s_samples < 11)
    throw std::invalid_argument("need at least 11 interpolation samples");
  if (r_samples < 64)
    throw std::invalid_argument("need at least 64 radius samples");
  for (int si = 0; si < s_samples; ++si) {
    const double s =
        static_cast<double>(si) / static_cast<double>(s_samples - 1);
    for (int ri = 1; ri <= r_samples; ++ri) {
      const double r =
          static_cast<double>(ri) / static_cast<double>(r_samples);
      const double h1 = (1.0 - s) * pair0.h1(r) + s * pair1.h1(r);
      const double dh1 = (1.0 - s) * pair0.dh1(r) + s * pair1.dh1(r);
      const double h2 = (1.0 - s) * pair0.h2(r) + s * pair1.h2(r);
      const double dh2 = (1.0 - s) * pair0.dh2(r) + s * pair1.dh2(r);
      if (!(h1 > 0.0))
        throw ConditionViolated(s, r, "h1 > 0", "h1 not positive");
      if (!(dh1 < 0.0))
        throw ConditionViolated(s, r, "h1' < 0", "h1 not decreasing");
      if (!(h2 > 0.0))
        throw ConditionViolated(s, r, "h2 > 0", "h2 not positive");
      if (dh2 < -1e-12)
        throw ConditionViolated(s, r, "h2' >= 0", "h2 decreasing");
    }
  }
  return true;
}

bool binding_interpolation_check(const ProfileConfig& cfg, int s_samples) {
  return verify_binding_conditions(binding_pair_open_book(cfg),
                                   binding_pair_bundle(cfg), s_samples,
                                   1024);
}

}  // namespace twistlab
