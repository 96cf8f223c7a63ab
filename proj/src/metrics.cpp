#include "ccbo/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "ccbo/parallel.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::metrics {

namespace {
constexpr double kDenomTol = 1e-300;  // exact-zero ranges only
}

EvalSample make_eval_sample(int n_pairs, int dim_x, int dim_c, std::uint64_t seed) {
  if (n_pairs < 1) throw InputError("make_eval_sample: need at least one pair");
  EvalSample eval;
  eval.seed = seed;
  eval.designs.resize(n_pairs, dim_x);
  eval.contexts.resize(n_pairs, dim_c);
  Rng rng(seed);
  for (int i = 0; i < n_pairs; ++i) {
    for (int d = 0; d < dim_x; ++d) eval.designs(i, d) = rng.u01();
    for (int d = 0; d < dim_c; ++d) eval.contexts(i, d) = rng.u01();
  }
  return eval;
}

TruthTable make_truth_table(const std::function<double(const Vec& x, const Vec& c)>& f,
                            const Mat& designs, const Mat& contexts) {
  if (designs.rows() < 1 || contexts.rows() < 1)
    throw InputError("make_truth_table: empty pools");
  TruthTable truth;
  const auto nc = contexts.rows();
  const auto nx = designs.rows();
  truth.values.resize(nc, nx);
  parallel_for(static_cast<std::size_t>(nc), [&](std::size_t jj) {
    const auto j = static_cast<Eigen::Index>(jj);
    const Vec c = contexts.row(j);
    for (Eigen::Index i = 0; i < nx; ++i) truth.values(j, i) = f(designs.row(i), c);
  });

  truth.argmax.resize(nc);
  truth.max_value.resize(nc);
  truth.min_value.resize(nc);
  truth.active.resize(nc);
  truth.denom_sum = 0.0;
  for (Eigen::Index j = 0; j < nc; ++j) {
    int best = 0;
    double lo = truth.values(j, 0), hi = truth.values(j, 0);
    for (Eigen::Index i = 1; i < nx; ++i) {
      const double v = truth.values(j, i);
      if (v > hi) {
        hi = v;
        best = static_cast<int>(i);
      }
      lo = std::min(lo, v);
    }
    truth.argmax[j] = best;
    truth.max_value[j] = hi;
    truth.min_value[j] = lo;
    truth.active[j] = (hi - lo) > kDenomTol;
    if (truth.active[j]) truth.denom_sum += hi - lo;
  }
  truth.degenerate = truth.denom_sum <= 0.0;
  return truth;
}

TruthTable make_truth_table(const objectives::ClientObjective& obj, const EvalSample& eval) {
  return make_truth_table(
      [&obj](const Vec& x, const Vec& c) { return obj.eval(x, c); }, eval.designs,
      eval.contexts);
}

double global_simple_regret(const std::vector<int>& chooser, const TruthTable& truth) {
  if (static_cast<int>(chooser.size()) != truth.n_contexts())
    throw InputError("global_simple_regret: chooser must cover every context");
  if (truth.degenerate) return 0.0;
  double numerator = 0.0;
  for (int j = 0; j < truth.n_contexts(); ++j) {
    if (!truth.active[j]) continue;
    const int pick = chooser[j];
    if (pick < 0 || pick >= truth.n_designs())
      throw InputError("global_simple_regret: chooser index outside the design pool");
    numerator += truth.max_value[j] - truth.values(j, pick);
  }
  return numerator / truth.denom_sum;
}

std::vector<int> recommendation_from_posterior(const gp::SurrogateModel& model,
                                               const EvalSample& eval) {
  const Mat mean = model.grid_mean(eval.designs, eval.contexts);
  std::vector<int> chooser(mean.rows());
  for (Eigen::Index j = 0; j < mean.rows(); ++j) {
    int best = 0;
    for (Eigen::Index i = 1; i < mean.cols(); ++i)
      if (mean(j, i) > mean(j, best)) best = static_cast<int>(i);
    chooser[j] = best;
  }
  return chooser;
}

DiscretizedRegretTracker::DiscretizedRegretTracker(
    const std::function<double(const Vec&, const Vec&)>& f, const Mat& designs,
    const Mat& contexts)
    : f_(f), designs_(designs), contexts_(contexts) {
  truth_ = make_truth_table(f, designs, contexts);
  best_observed_.assign(contexts.rows(), -std::numeric_limits<double>::infinity());
}

void DiscretizedRegretTracker::observe(const Vec& x, const Vec& c) {
  for (Eigen::Index j = 0; j < contexts_.rows(); ++j) {
    if ((contexts_.row(j).transpose().array() == c.array()).all()) {
      best_observed_[j] = std::max(best_observed_[j], f_(x, c));
      return;  // grid contexts are distinct
    }
  }
}

double DiscretizedRegretTracker::value() const {
  if (truth_.degenerate) return 0.0;
  double numerator = 0.0;
  for (int j = 0; j < truth_.n_contexts(); ++j) {
    if (!truth_.active[j]) continue;
    const double denom = truth_.max_value[j] - truth_.min_value[j];
    const double achieved = std::isfinite(best_observed_[j])
                                ? best_observed_[j]
                                : truth_.min_value[j];  // fallback: argmin value
    numerator += std::clamp(truth_.max_value[j] - achieved, 0.0, denom);
  }
  return numerator / truth_.denom_sum;
}

double discretized_regret(const gp::Dataset& data,
                          const std::function<double(const Vec&, const Vec&)>& f,
                          const Mat& designs, const Mat& contexts, bool* degenerate) {
  DiscretizedRegretTracker tracker(f, designs, contexts);
  for (const auto& obs : data.observations()) tracker.observe(obs.x, obs.c);
  if (degenerate != nullptr) *degenerate = tracker.degenerate();
  return tracker.value();
}

LastCollabResult simulate_last_collab(const policy::PtSchedule& schedule, int horizon,
                                      int reps, std::uint64_t seed) {
  if (horizon < 1 || reps < 1)
    throw InputError("simulate_last_collab: horizon and reps must be positive");
  std::vector<double> p(horizon);
  LastCollabResult out;
  for (int t = 1; t <= horizon; ++t) {
    p[t - 1] = policy::pt_value(schedule, t);
    out.bound += t * p[t - 1];
  }

  std::vector<double> lastIndex(reps, 0.0);
  parallel_for(static_cast<std::size_t>(reps), [&](std::size_t r) {
    Rng rng(derive_seed(seed, "last-collab", r));
    int last = 0;
    for (int t = 1; t <= horizon; ++t)
      if (rng.u01() < p[t - 1]) last = t;
    lastIndex[r] = last;
  });
  double sum = 0.0;
  for (double v : lastIndex) sum += v;
  out.empirical_mean = sum / reps;
  return out;
}

}  // namespace ccbo::metrics
