#pragma once

#include <cstdint>
#include <functional>

#include "ccbo/dataset.hpp"
#include "ccbo/hyperfit.hpp"
#include "ccbo/posterior.hpp"

namespace ccbo::gp {

struct RefitPolicy {
  bool enabled{true};
  int every_until{30};    // refit on every update while the dataset is at most this large
  int interval_after{5};  // afterwards refit every this many updates
  bool fit_noise{false};  // observation noise stays at its calibrated value
  FitOptions fit;
};

// Per-client surrogate: wraps the exact Posterior with response
// standardization (recomputed at every refit) and the hyperparameter refit
// cadence. All queries are expressed on the raw response scale so that
// cross-client mean averaging operates on comparable quantities.
// Single-writer: one owner mutates it; queries are const.
class SurrogateModel {
 public:
  SurrogateModel(int dim_x, int dim_c, const KernelConfig& base, double noise_sigma,
                 RefitPolicy policy = {}, std::uint64_t fit_seed = 0);

  // Appends one observation and reconditions under the current
  // standardization and hyperparameters.
  void add_observation(const Vec& x, const Vec& c, double y);

  // Restandardizes, refits hyperparameters (if enabled and the dataset has at
  // least two points) and reconditions.
  void refit();

  // Call once per optimization iteration after add_observation.
  void maybe_refit();

  double mean(const Vec& x, const Vec& c) const;
  MeanVar mean_var(const Vec& z) const;
  Vec batch_mean(const Mat& points) const;
  Mat grid_mean(const Mat& designs, const Mat& contexts) const;
  Vec sample_on_set(const Mat& points, std::uint64_t seed,
                    const SampleOptions& opts = {}) const;

  // Raw-scale mean as a standalone callable on z = [x | c] (release surface
  // for the sharing protocol).
  std::function<double(const Vec&)> mean_fn() const;

  const Dataset& data() const { return data_; }
  const KernelConfig& kernel() const { return cfg_; }
  double shift() const { return shift_; }
  double scale() const { return scale_; }
  double noise_sigma() const { return noise_sigma_; }

 private:
  void recondition();

  Dataset data_;
  KernelConfig cfg_;          // standardized-scale hyperparameters
  double noise_sigma_{0.0};   // calibrated observation noise, raw units
  double shift_{0.0};
  double scale_{1.0};
  RefitPolicy policy_;
  std::uint64_t fit_seed_{0};
  int refit_count_{0};
  int updates_since_refit_{0};
  Posterior post_;
};

}  // namespace ccbo::gp
