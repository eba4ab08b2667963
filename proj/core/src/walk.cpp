#include "maxvisit/walk.hpp"

#include "maxvisit/rng.hpp"

#include <cmath>
#include <map>
#include <thread>

namespace maxvisit {

std::optional<StepDistribution> transition(const WalkState& state, long horizon) {
  long remaining_steps = horizon - state.steps_elapsed;
  if (state.absorbed || state.remaining <= 0) return std::nullopt;
  if (state.remaining > remaining_steps) return std::nullopt;
  return optimal_step(static_cast<int>(remaining_steps), state.remaining);
}

std::optional<long> stopping_time(const WalkPath& path) {
  for (size_t k = 0; k < path.levels.size(); ++k) {
    if (path.levels[k] >= path.target) return static_cast<long>(k);
  }
  return std::nullopt;
}

Rational path_max(const WalkPath& path) {
  Rational best = path.levels.front();
  for (const Rational& level : path.levels) {
    if (level > best) best = level;
  }
  return best;
}

WalkPath simulate_path(long n, const Rational& x, std::uint64_t seed,
                       std::uint64_t path_index) {
  WalkPath path;
  path.horizon = n;
  path.target = x;
  path.levels.reserve(static_cast<size_t>(n) + 1);
  path.levels.emplace_back(0);

  WalkState state{0, x, x <= 0};
  for (long k = 0; k < n; ++k) {
    auto step = transition(state, n);
    if (step) {
      std::uint64_t word = counter_word(seed, path_index, static_cast<std::uint64_t>(k));
      if (bernoulli_from_word(word, step->up_prob)) {
        state.remaining -= step->up;
      } else {
        state.remaining += step->down;
      }
      if (state.remaining <= 0) state.absorbed = true;
    }
    state.steps_elapsed = k + 1;
    path.levels.push_back(x - state.remaining);
  }
  return path;
}

namespace {

long long count_hits(long n, const Rational& x, long long first, long long last,
                     std::uint64_t seed) {
  long long hits = 0;
  for (long long p = first; p < last; ++p) {
    WalkState state{0, x, false};
    bool hit = x <= 0;
    for (long k = 0; k < n && !hit; ++k) {
      auto step = transition(state, n);
      if (!step) break;
      std::uint64_t word =
          counter_word(seed, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k));
      if (bernoulli_from_word(word, step->up_prob)) {
        state.remaining -= step->up;
      } else {
        state.remaining += step->down;
      }
      state.steps_elapsed = k + 1;
      if (state.remaining <= 0) hit = true;
    }
    if (hit) ++hits;
  }
  return hits;
}

}  // namespace

McEstimate monte_carlo_estimate(long n, const Rational& x, long long paths,
                                std::uint64_t seed, unsigned threads) {
  if (threads == 0) threads = 1;
  long long hits = 0;
  if (threads == 1 || paths < 1024) {
    hits = count_hits(n, x, 0, paths, seed);
  } else {
    std::vector<long long> partial(threads, 0);
    std::vector<std::thread> workers;
    long long chunk = (paths + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      long long first = std::min<long long>(paths, w * chunk);
      long long last = std::min<long long>(paths, first + chunk);
      workers.emplace_back([&, w, first, last] {
        partial[w] = count_hits(n, x, first, last, seed);
      });
    }
    for (auto& t : workers) t.join();
    for (long long h : partial) hits += h;
  }

  McEstimate out;
  out.paths = paths;
  out.seed = seed;
  out.estimate = static_cast<double>(hits) / static_cast<double>(paths);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(paths));
  return out;
}

Rational exact_chain_probability(int n, const Rational& x) {
  if (x <= 0) return 1;
  Rational absorbed = 0;
  std::map<Rational, Rational> live;  // remaining distance -> mass, all > 0
  live[x] = 1;

  for (int k = 0; k < n && !live.empty(); ++k) {
    int remaining_steps = n - k;
    std::map<Rational, Rational> next;
    for (const auto& [rho, mass] : live) {
      if (rho > remaining_steps) continue;  // dead, can never absorb
      StepDistribution step = optimal_step(remaining_steps, rho);
      Rational up_target = rho - step.up;
      if (up_target <= 0) {
        absorbed += mass * step.up_prob;
      } else {
        next[up_target] += mass * step.up_prob;
      }
      next[rho + step.down] += mass * step.down_prob;
    }
    live.swap(next);
  }
  return absorbed;
}

}  // namespace maxvisit
