#ifndef LFG_BRAID_HPP
#define LFG_BRAID_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lfg/counting.hpp"
#include "lfg/spectrum.hpp"

namespace lfg {

struct interval {
  double lower = 0;
  double upper = 0;
};

/// Bilateral bounds on the logarithmic volume of B_n (group) or B_n^+
/// (semigroup): (v/2, v] with v the exact finite-n volume of the locally free
/// group or semigroup, which B_n contains via sigma_i^2 -> f_i.
inline interval volume_bounds(std::uint32_t n, count_variant variant) {
  if (n < 2) throw std::invalid_argument("volume_bounds: n must be >= 2");
  if (variant.k != count_variant::kind::group && variant.k != count_variant::kind::semigroup)
    throw std::invalid_argument("volume_bounds: variant must be group or semigroup");
  const double v = finite_volume(n, variant);
  return {v / 2, v};
}

/// n -> infinity limits of volume_bounds: (log 7 / 2, log 7) and (log 2, log 4).
inline interval volume_bounds_limit(count_variant variant) {
  if (variant.k == count_variant::kind::group) return {std::log(7.0) / 2, std::log(7.0)};
  if (variant.k == count_variant::kind::semigroup) return {std::log(2.0), std::log(4.0)};
  throw std::invalid_argument("volume_bounds_limit: variant must be group or semigroup");
}

inline void check_alpha(double alpha) {
  if (!(std::abs(alpha) <= 0.5))
    throw std::invalid_argument("alpha must satisfy |alpha| <= 1/2, got " + std::to_string(alpha));
}

/// ((2 - a) / (2 (3 - a)), (2 - a) / (3 - a)) for the drift of B_n.
inline interval drift_bounds(double alpha) {
  check_alpha(alpha);
  const double upper = (2 - alpha) / (3 - alpha);
  return {upper / 2, upper};
}

/// l(a) log 7 - h(a) with l(a) = (2 - a)/(3 - a) and h(a) = log(3 - a).
inline double epsilon_closed_form(double alpha) {
  check_alpha(alpha);
  return (2 - alpha) / (3 - alpha) * std::log(7.0) - std::log(3 - alpha);
}

struct epsilon_scan {
  double step = 0;
  double min_alpha = 0;
  double min_epsilon = std::numeric_limits<double>::infinity();
  std::size_t points = 0;
  bool all_positive = true;
};

/// epsilon_closed_form on the grid -1/2 + k*step inside the open interval (-1/2, 1/2).
inline epsilon_scan scan_epsilon(double step = 1e-3) {
  if (!(step > 0 && step < 0.5)) throw std::invalid_argument("scan_epsilon: step must lie in (0, 1/2)");
  epsilon_scan s;
  s.step = step;
  const auto count = static_cast<std::size_t>(std::ceil(1.0 / step));
  for (std::size_t k = 1; k < count; ++k) {
    const double a = -0.5 + k * step;
    if (a >= 0.5) break;
    const double e = epsilon_closed_form(a);
    ++s.points;
    s.all_positive = s.all_positive && e > 0;
    if (e < s.min_epsilon) {
      s.min_epsilon = e;
      s.min_alpha = a;
    }
  }
  return s;
}

struct inequality_result {
  double v = 0, l = 0, h = 0;
  double epsilon = 0;  // l v - h
  epsilon_scan scan;
};

inline inequality_result inequality_report(double v, double l, double h, double step = 1e-3) {
  if (!std::isfinite(v) || !std::isfinite(l) || !std::isfinite(h))
    throw std::invalid_argument("inequality_report: v, l, h must be finite");
  if (!(v > 0)) throw std::invalid_argument("inequality_report: v must be > 0");
  if (!(l > 0 && l <= 1)) throw std::invalid_argument("inequality_report: l must lie in (0, 1]");
  return {v, l, h, l * v - h, scan_epsilon(step)};
}

struct bounds_report {
  std::uint32_t n = 0;
  count_variant variant;
  double v_lf = 0;
  double volume_lower = 0, volume_upper = 0;
  double volume_lower_limit = 0, volume_upper_limit = 0;
  double drift_lower = 0, drift_upper = 0;
  double alpha_used = 0;
  double l = 0, h = 0;
  double epsilon = 0;
};

/// Finite-n bounds; drift and entropy default to the closed forms in alpha
/// when not measured.
inline bounds_report make_bounds_report(std::uint32_t n, count_variant variant, double alpha,
                                        std::optional<double> l = {}, std::optional<double> h = {}) {
  const auto vb = volume_bounds(n, variant);
  const auto lim = volume_bounds_limit(variant);
  const auto db = drift_bounds(alpha);
  bounds_report r;
  r.n = n;
  r.variant = variant;
  r.v_lf = vb.upper;
  r.volume_lower = vb.lower;
  r.volume_upper = vb.upper;
  r.volume_lower_limit = lim.lower;
  r.volume_upper_limit = lim.upper;
  r.drift_lower = db.lower;
  r.drift_upper = db.upper;
  r.alpha_used = alpha;
  r.l = l.value_or(db.upper);
  r.h = h.value_or(std::log(3 - alpha));
  r.epsilon = inequality_report(r.v_lf, r.l, r.h).epsilon;
  return r;
}

}  // namespace lfg

#endif
