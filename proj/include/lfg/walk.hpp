#ifndef LFG_WALK_HPP
#define LFG_WALK_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lfg/heap.hpp"
#include "lfg/rng.hpp"

namespace lfg {

struct walk_params {
  std::uint32_t n = 0;
  std::uint64_t steps = 0;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  lfg::mode mode = lfg::mode::semigroup;
  std::uint64_t burn_in = 0;         // steps excluded from time averages
  std::uint64_t snapshot_every = 0;  // 0 = no roof profile snapshots
  bool keep_roof_sizes = false;

  /// Parameters with the conventional burn-in of 10 n steps.
  static walk_params make(std::uint32_t n, std::uint64_t steps, std::uint32_t trials, std::uint64_t seed,
                          lfg::mode m) {
    return {n, steps, trials, seed, m, 10ull * n, 0, false};
  }

  void validate() const {
    if (n == 0) throw std::invalid_argument("walk: n must be >= 1");
    if (steps == 0) throw std::invalid_argument("walk: steps must be >= 1");
    if (trials == 0) throw std::invalid_argument("walk: trials must be >= 1");
    if (burn_in >= steps)
      throw std::invalid_argument("walk: burn-in (" + std::to_string(burn_in) + ") must be shorter than the run (" +
                                  std::to_string(steps) + " steps)");
  }
};

/// Column tops and roof membership at one instant of a trial.
struct roof_snapshot {
  std::uint64_t step = 0;
  std::vector<std::uint32_t> top_level;
  std::vector<std::uint8_t> in_roof;

  friend bool operator==(const roof_snapshot &, const roof_snapshot &) = default;
};

/// Accumulators of one trial. Window sums cover steps burn_in+1 .. steps and
/// use the roof size after each step.
struct walk_stats {
  std::uint64_t steps = 0;
  std::uint64_t final_length = 0;
  std::uint64_t reductions = 0;        // over the whole run
  std::uint64_t roof_before_sum = 0;   // sum of roof sizes seen before each step, whole run
  std::uint64_t window_steps = 0;
  std::uint64_t roof_size_sum = 0;
  std::uint64_t roof_size_sq_sum = 0;
  double log_roof_sum = 0;             // sum of log(#T_j / n)
  std::uint64_t window_reductions = 0;
  std::uint64_t roof_delta_plus_given_reduction = 0;
  std::uint64_t roof_delta_minus_given_reduction = 0;
  std::uint32_t height = 0;
  std::vector<std::uint32_t> roof_sizes;
  std::vector<roof_snapshot> snapshots;

  std::uint64_t growths() const { return steps - reductions; }

  friend bool operator==(const walk_stats &, const walk_stats &) = default;
};

namespace detail {

template <class Heap>
walk_stats run_trial_on(const walk_params &p, std::uint64_t trial_index) {
  Heap heap(p.n, p.mode);
  counter_rng rng(p.seed, trial_index);
  walk_stats st;
  st.steps = p.steps;
  if (p.keep_roof_sizes) st.roof_sizes.reserve(p.steps);

  const std::uint32_t n = p.n;
  const std::uint32_t choices = p.mode == mode::group ? 2 * n : n;
  const double log_n = std::log(static_cast<double>(n));
  std::vector<double> log_table(n + 1, 0.0);
  for (std::uint32_t k = 1; k <= n; ++k) log_table[k] = std::log(static_cast<double>(k)) - log_n;

  auto roof3 = [&](std::uint32_t i) {
    int c = 0;
    for (std::uint32_t j = i - 1; j <= i + 1; ++j)
      if (j >= 1 && j <= n && heap.in_roof(j)) ++c;
    return c;
  };

  std::int64_t roof = 0;
  for (std::uint64_t t = 1; t <= p.steps; ++t) {
    const std::uint32_t draw = rng.below(choices);
    const letter g{draw % n + 1, draw < n ? 1 : -1};
    st.roof_before_sum += static_cast<std::uint64_t>(roof);

    const std::int64_t before_local = roof3(g.index);
    const auto outcome = heap.push(g);
    const std::int64_t delta = roof3(g.index) - before_local;
    roof += delta;

    if (outcome == push_outcome::cancelled) ++st.reductions;
    if (t > p.burn_in) {
      ++st.window_steps;
      st.roof_size_sum += static_cast<std::uint64_t>(roof);
      st.roof_size_sq_sum += static_cast<std::uint64_t>(roof * roof);
      if (roof <= 0) throw std::logic_error("walk: empty roof on a nonempty heap");
      st.log_roof_sum += log_table[roof];
      if (outcome == push_outcome::cancelled) {
        ++st.window_reductions;
        if (delta > 0) ++st.roof_delta_plus_given_reduction;
        if (delta < 0) ++st.roof_delta_minus_given_reduction;
      }
    }
    if (p.keep_roof_sizes) st.roof_sizes.push_back(static_cast<std::uint32_t>(roof));
    if (p.snapshot_every && t % p.snapshot_every == 0) {
      roof_snapshot snap{t, std::vector<std::uint32_t>(n), std::vector<std::uint8_t>(n)};
      for (std::uint32_t i = 1; i <= n; ++i) {
        snap.top_level[i - 1] = heap.top_level(i);
        snap.in_roof[i - 1] = heap.in_roof(i) ? 1 : 0;
      }
      st.snapshots.push_back(std::move(snap));
    }
  }
  st.final_length = heap.size();
  st.height = heap.height();
  return st;
}

}  // namespace detail

/// One seeded trial of N uniform steps. The group walk needs full column
/// stacks (a cancellation exposes the cell below); the semigroup walk keeps
/// only the top of each column.
inline walk_stats run_trial(const walk_params &p, std::uint64_t trial_index) {
  p.validate();
  return p.mode == mode::group ? detail::run_trial_on<colored_heap>(p, trial_index)
                               : detail::run_trial_on<heap_front>(p, trial_index);
}

/// All trials, in trial-index order, on up to `threads` workers (0 = hardware).
inline std::vector<walk_stats> run_walk(const walk_params &p, unsigned threads = 0) {
  p.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, p.trials);
  std::vector<walk_stats> out(p.trials);
  if (threads <= 1) {
    for (std::uint32_t k = 0; k < p.trials; ++k) out[k] = run_trial(p, k);
    return out;
  }
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::uint32_t k = next++; k < p.trials; k = next++) {
        try {
          out[k] = run_trial(p, k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct estimate {
  double value = 0;
  double se = 0;
};

namespace detail {
inline estimate mean_se(const std::vector<double> &xs) {
  if (xs.empty()) throw std::invalid_argument("no completed trials");
  double m = 0;
  for (double x : xs) m += x;
  m /= xs.size();
  if (xs.size() < 2) return {m, 0};
  double v = 0;
  for (double x : xs) v += (x - m) * (x - m);
  v /= (xs.size() - 1);
  return {m, std::sqrt(v / xs.size())};
}
}  // namespace detail

/// Mean of final_length / N over trials, with its standard error.
inline estimate drift_estimate(std::span<const walk_stats> trials) {
  std::vector<double> xs;
  for (const auto &s : trials) xs.push_back(static_cast<double>(s.final_length) / s.steps);
  return detail::mean_se(xs);
}

/// Time-averaged #T / n over the retained window.
inline estimate roof_density_estimate(std::span<const walk_stats> trials, std::uint32_t n) {
  std::vector<double> xs;
  for (const auto &s : trials) {
    if (s.window_steps == 0) throw std::invalid_argument("roof density: empty stationary window");
    xs.push_back(static_cast<double>(s.roof_size_sum) / (static_cast<double>(s.window_steps) * n));
  }
  return detail::mean_se(xs);
}

/// Half the difference of the frequencies with which a reduction grows or
/// shrinks the roof, pooled over trials.
inline estimate alpha_estimate(std::span<const walk_stats> trials) {
  std::uint64_t red = 0, plus = 0, minus = 0;
  for (const auto &s : trials) {
    red += s.window_reductions;
    plus += s.roof_delta_plus_given_reduction;
    minus += s.roof_delta_minus_given_reduction;
  }
  if (red == 0) throw std::invalid_argument("alpha: no reduction events (semigroup walks never reduce)");
  const double pp = static_cast<double>(plus) / red, pm = static_cast<double>(minus) / red;
  const double a = 0.5 * (pp - pm);
  // Each reduction contributes X in {+1/2, 0, -1/2}.
  const double var = 0.25 * (pp + pm) - a * a;
  return {a, std::sqrt(std::max(0.0, var) / red)};
}

/// Semigroup: -(1/N) sum_j log(#T_j / n) along the trajectories.
/// Group: log(3 - alpha_hat).
inline double entropy_estimate(std::span<const walk_stats> trials, mode m) {
  if (m == mode::group) return std::log(3.0 - alpha_estimate(trials).value);
  double sum = 0;
  std::uint64_t count = 0;
  for (const auto &s : trials) {
    sum += s.log_roof_sum;
    count += s.window_steps;
  }
  if (count == 0) throw std::invalid_argument("entropy: empty stationary window");
  return -sum / static_cast<double>(count);
}

/// Empirical E[(#T)^2] / (E #T)^2 - 1 over the window.
inline double roof_fluctuation(std::span<const walk_stats> trials) {
  double s1 = 0, s2 = 0, cnt = 0;
  for (const auto &s : trials) {
    s1 += static_cast<double>(s.roof_size_sum);
    s2 += static_cast<double>(s.roof_size_sq_sum);
    cnt += static_cast<double>(s.window_steps);
  }
  if (cnt == 0) throw std::invalid_argument("fluctuation: empty stationary window");
  const double m = s1 / cnt;
  return (s2 / cnt) / (m * m) - 1.0;
}

struct heap_profile {
  double height_coeff = 0;  // H n / N
  double density = 0;       // N / (n H)
  bool short_run = false;   // N < 100 n: not yet stationary
};

inline heap_profile heap_profile_stats(std::span<const walk_stats> trials, std::uint32_t n, mode m) {
  if (m != mode::semigroup) throw std::invalid_argument("heap profile is defined for the semigroup walk only");
  if (trials.empty()) throw std::invalid_argument("heap profile: no trials");
  heap_profile out;
  for (const auto &s : trials) {
    const double hn = static_cast<double>(s.height) * n;
    out.height_coeff += hn / s.steps;
    out.density += static_cast<double>(s.steps) / hn;
    out.short_run = out.short_run || s.steps < 100ull * n;
  }
  out.height_coeff /= trials.size();
  out.density /= trials.size();
  return out;
}

}  // namespace lfg

#endif
