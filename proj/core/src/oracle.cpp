#include "maxvisit/oracle.hpp"

#include "maxvisit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace maxvisit {

Rational ConditionalStep::mean() const {
  Rational m = 0;
  for (const auto& [value, probability] : support) m += value * probability;
  return m;
}

Rational ConditionalStep::total_probability() const {
  Rational p = 0;
  for (const auto& [value, probability] : support) p += probability;
  return p;
}

namespace {

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace

Rational rademacher_tail(long long n, long long k) {
  if (k <= -n) return 1;
  if (k > n) return 0;
  // R_n >= k  <=>  #up-steps >= ceil((n + k) / 2)
  long long j0 = (n + k + 1) / 2;  // n + k >= 0 here
  Int sum = 0;
  for (long long j = j0; j <= n; ++j) sum += binomial(n, j);
  Int den = 1;
  den <<= static_cast<unsigned>(n);
  return Rational(sum, den);
}

namespace {

double cross(const EnvelopePoint& o, const EnvelopePoint& a, const EnvelopePoint& b) {
  return (a.t - o.t) * (b.y - o.y) - (a.y - o.y) * (b.t - o.t);
}

}  // namespace

EnvelopeResult envelope_at_zero(std::span<const EnvelopePoint> samples) {
  if (samples.size() < 2 || samples.front().t > 0 || samples.back().t < 0)
    throw std::invalid_argument("envelope_at_zero: samples must span t = 0");

  // Upper hull, keeping collinear vertices so the pair bracketing 0 is the
  // tightest one (lexicographically smallest |t| on each side).
  std::vector<EnvelopePoint> hull;
  for (const EnvelopePoint& p : samples) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) > 0)
      hull.pop_back();
    hull.push_back(p);
  }

  size_t i = 0;
  while (i + 1 < hull.size() && hull[i + 1].t <= 0) ++i;
  if (hull[i].t == 0) return {hull[i].y, 0, 0};
  const EnvelopePoint& lo = hull[i];
  const EnvelopePoint& hi = hull[i + 1];
  double w = -lo.t / (hi.t - lo.t);
  return {lo.y + w * (hi.y - lo.y), lo.t, hi.t};
}

EnvelopeOracle::EnvelopeOracle(int max_steps, double resolution, double rho_max)
    : max_steps_(max_steps) {
  per_unit_ = std::max<long>(2, std::lround(1.0 / resolution));
  double cover = std::max(rho_max + 1.0, static_cast<double>(max_steps) + 1.0);
  hi_index_ = static_cast<long>(std::ceil(cover)) * per_unit_;

  levels_.resize(static_cast<size_t>(std::max(max_steps, 1)));
  size_t width = static_cast<size_t>(hi_index_ + per_unit_ + 1);
  levels_[0].resize(width);
  for (long j = -per_unit_; j <= hi_index_; ++j)
    levels_[0][static_cast<size_t>(j + per_unit_)] = j <= 0 ? 1.0 : 0.0;

  std::vector<EnvelopePoint> pts(static_cast<size_t>(2 * per_unit_ + 1));
  for (int h = 1; h < max_steps; ++h) {
    levels_[static_cast<size_t>(h)].resize(width);
    auto& prev = levels_[static_cast<size_t>(h - 1)];
    auto& cur = levels_[static_cast<size_t>(h)];
    for (long j = -per_unit_; j <= hi_index_; ++j) {
      if (j <= 0) {
        cur[static_cast<size_t>(j + per_unit_)] = 1.0;
        continue;
      }
      for (long i = -per_unit_; i <= per_unit_; ++i) {
        long target = j - i;  // index of rho - t
        double y;
        if (target < -per_unit_) {
          y = 1.0;
        } else if (target > hi_index_) {
          y = 0.0;  // beyond the table means rho - t > h - 1
        } else {
          y = prev[static_cast<size_t>(target + per_unit_)];
        }
        pts[static_cast<size_t>(i + per_unit_)] = {
            static_cast<double>(i) / static_cast<double>(per_unit_), y};
      }
      cur[static_cast<size_t>(j + per_unit_)] = envelope_at_zero(pts).value;
    }
  }
}

double EnvelopeOracle::table_at(int h, double rho) const {
  if (rho <= 0) return 1.0;
  if (h == 0) return 0.0;
  double pos = rho * static_cast<double>(per_unit_);
  long j = static_cast<long>(std::floor(pos));
  if (j >= hi_index_) return 0.0;
  if (j < -per_unit_) return 1.0;
  const auto& level = levels_[static_cast<size_t>(h)];
  double w = pos - static_cast<double>(j);
  double lo = level[static_cast<size_t>(j + per_unit_)];
  double hi = level[static_cast<size_t>(j + per_unit_ + 1)];
  return lo + w * (hi - lo);
}

std::vector<EnvelopePoint> EnvelopeOracle::gather_samples(int h, double rho) const {
  std::vector<EnvelopePoint> pts;
  pts.reserve(static_cast<size_t>(2 * per_unit_ + 4));
  // Breakpoints where rho - t is an integer; the value function's kinks and
  // jump live there, so they are sampled exactly.
  std::vector<double> breaks;
  for (long m = static_cast<long>(std::ceil(rho + 1.0)); m >= static_cast<long>(std::floor(rho - 1.0)); --m) {
    double t = rho - static_cast<double>(m);  // ascending in t
    if (t >= -1.0 && t <= 1.0) breaks.push_back(t);
  }
  size_t next_break = 0;
  for (long i = -per_unit_; i <= per_unit_; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(per_unit_);
    while (next_break < breaks.size() && breaks[next_break] < t) {
      double tb = breaks[next_break++];
      if (!pts.empty() && pts.back().t == tb) continue;
      pts.push_back({tb, table_at(h, rho - tb)});
    }
    if (!pts.empty() && pts.back().t == t) continue;
    pts.push_back({t, table_at(h, rho - t)});
  }
  while (next_break < breaks.size()) {
    double tb = breaks[next_break++];
    if (pts.back().t < tb) pts.push_back({tb, table_at(h, rho - tb)});
  }
  return pts;
}

EnvelopeResult EnvelopeOracle::envelope(int n, double x) const {
  if (n <= 0 || x <= 0) {
    double v = x <= 0 ? 1.0 : 0.0;
    return {v, 0.0, 0.0};
  }
  auto pts = gather_samples(n - 1, x);
  return envelope_at_zero(pts);
}

double EnvelopeOracle::value(int n, double x) const {
  if (x <= 0) return 1.0;
  if (n == 0) return 0.0;
  if (x > static_cast<double>(n)) return 0.0;
  return envelope(n, x).value;
}

double envelope_value_iteration(int n, const Rational& x, double grid_resolution) {
  double xf = to_double(x);
  if (xf <= 0) return 1.0;
  if (n == 0) return 0.0;
  EnvelopeOracle oracle(n, grid_resolution, xf);
  return oracle.value(n, xf);
}

namespace {

struct PairMove {
  Rational down;  // < 0
  Rational up;    // > 0
  Rational up_prob;
  Rational down_prob;
};

std::vector<PairMove> mean_zero_pairs(const std::vector<Rational>& candidates) {
  std::set<Rational> values(candidates.begin(), candidates.end());
  std::vector<PairMove> moves;
  for (const Rational& a : values) {
    if (a >= 0) continue;
    for (const Rational& b : values) {
      if (b <= 0) continue;
      moves.push_back({a, b, -a / (b - a), b / (b - a)});
    }
  }
  return moves;
}

}  // namespace

Rational brute_force_strategy_sup(int n, const Rational& x,
                                  const std::vector<Rational>& candidate_steps,
                                  Objective objective) {
  for (const Rational& s : candidate_steps) {
    if (s < -1 || s > 1)
      throw std::invalid_argument("brute_force_strategy_sup: candidate steps must lie in [-1, 1]");
  }
  std::vector<PairMove> moves = mean_zero_pairs(candidate_steps);

  // Reachable positions per level (always including the stay move).
  std::vector<std::set<Rational>> reachable(static_cast<size_t>(n) + 1);
  reachable[0].insert(0);
  for (int k = 0; k < n; ++k) {
    for (const Rational& pos : reachable[static_cast<size_t>(k)]) {
      auto& next = reachable[static_cast<size_t>(k) + 1];
      next.insert(pos);
      for (const PairMove& mv : moves) {
        next.insert(pos + mv.up);
        next.insert(pos + mv.down);
      }
    }
  }

  std::map<Rational, Rational> value;
  for (const Rational& pos : reachable[static_cast<size_t>(n)])
    value[pos] = pos >= x ? 1 : 0;

  for (int k = n - 1; k >= 0; --k) {
    std::map<Rational, Rational> prev;
    for (const Rational& pos : reachable[static_cast<size_t>(k)]) {
      if (objective == Objective::RunningMax && pos >= x) {
        prev[pos] = 1;
        continue;
      }
      Rational best = value.at(pos);  // no move
      for (const PairMove& mv : moves) {
        Rational v = mv.up_prob * value.at(pos + mv.up) + mv.down_prob * value.at(pos + mv.down);
        if (v > best) best = v;
      }
      prev[pos] = best;
    }
    value.swap(prev);
  }
  return value.at(0);
}

bool verify_stopping_equivalence(int n, const Rational& x,
                                 const std::vector<Rational>& candidate_steps) {
  Rational terminal = brute_force_strategy_sup(n, x, candidate_steps, Objective::Terminal);
  Rational running = brute_force_strategy_sup(n, x, candidate_steps, Objective::RunningMax);
  // The running-max DP absorbs at x, so its optimum is attained by a
  // strategy already stopped there; equality is the whole content.
  return terminal == running;
}

ConditionalStep supermartingale_compensator(const ConditionalStep& step) {
  Rational e = step.mean();
  if (e > 0)
    throw std::invalid_argument("supermartingale_compensator: step mean must be <= 0");
  ConditionalStep out;
  out.step_class = StepClass::Martingale;
  out.support.reserve(step.support.size());
  for (const auto& [value, probability] : step.support)
    out.support.emplace_back((value - e) / (1 - e), probability);
  return out;
}

}  // namespace maxvisit
