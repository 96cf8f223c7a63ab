#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "ccbo/common.hpp"
#include "ccbo/objectives.hpp"
#include "ccbo/schedule.hpp"
#include "ccbo/surrogate_model.hpp"

namespace ccbo::metrics {

// The fixed evaluation sample: design/context components of uniformly drawn
// pairs, reused for both the numerator and denominator pools. Fixed per
// replicate across all iterations.
struct EvalSample {
  Mat designs;   // n_pairs x D_x
  Mat contexts;  // n_pairs x D_c
  std::uint64_t seed{0};
};

EvalSample make_eval_sample(int n_pairs, int dim_x, int dim_c, std::uint64_t seed);

// Noiseless response values of one client over a (context pool) x (design
// pool) product, with per-context extrema. Contexts whose value range is
// degenerate carry no regret and are excluded from both sums.
struct TruthTable {
  Mat values;                 // n_contexts x n_designs
  std::vector<int> argmax;    // per context, lowest index on ties
  Vec max_value;
  Vec min_value;
  std::vector<char> active;   // denominator above tolerance
  double denom_sum{0.0};
  bool degenerate{false};     // no active context at all

  int n_contexts() const { return static_cast<int>(values.rows()); }
  int n_designs() const { return static_cast<int>(values.cols()); }
};

TruthTable make_truth_table(const std::function<double(const Vec& x, const Vec& c)>& f,
                            const Mat& designs, const Mat& contexts);
TruthTable make_truth_table(const objectives::ClientObjective& obj, const EvalSample& eval);

// Normalized per-context suboptimality of the recommended designs
// (chooser[j] indexes the design pool). Always in [0, 1]; 0 for the
// true-argmax chooser, 1 for the argmin chooser.
double global_simple_regret(const std::vector<int>& chooser, const TruthTable& truth);

// chooser(c_j) = argmax over the evaluation design pool of the posterior mean
// at (x, c_j); ties break to the lowest pool index.
std::vector<int> recommendation_from_posterior(const gp::SurrogateModel& model,
                                               const EvalSample& eval);

// Discretized regret over finite candidate sets with exact-equality context
// matching and the argmin fallback at unobserved contexts. Incremental so a
// run can emit the value after every observation; the best observed true
// value per context only improves, so the value is non-increasing.
class DiscretizedRegretTracker {
 public:
  DiscretizedRegretTracker() = default;
  DiscretizedRegretTracker(const std::function<double(const Vec&, const Vec&)>& f,
                           const Mat& designs, const Mat& contexts);

  void observe(const Vec& x, const Vec& c);
  double value() const;
  bool degenerate() const { return truth_.degenerate; }

 private:
  std::function<double(const Vec&, const Vec&)> f_;
  Mat designs_;
  Mat contexts_;
  TruthTable truth_;
  std::vector<double> best_observed_;  // -inf when the context is unobserved
};

// One-shot form over a recorded dataset.
double discretized_regret(const gp::Dataset& data,
                          const std::function<double(const Vec&, const Vec&)>& f,
                          const Mat& designs, const Mat& contexts,
                          bool* degenerate = nullptr);

struct LastCollabResult {
  double empirical_mean{0.0};
  double bound{0.0};  // sum over the horizon of t * p_t
};

// Monte-Carlo check of the expected last collaboration time: simulates
// independent Bernoulli(p_t) gates and reports the mean last success index
// against the partial-sum bound.
LastCollabResult simulate_last_collab(const policy::PtSchedule& schedule, int horizon,
                                      int reps, std::uint64_t seed);

}  // namespace ccbo::metrics
