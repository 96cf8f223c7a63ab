#pragma once

#include <cstdint>
#include <utility>

#include "ccbo/common.hpp"
#include "ccbo/dataset.hpp"
#include "ccbo/kernel.hpp"

namespace ccbo::gp {

struct MeanVar {
  double mean{0.0};
  double var{0.0};
};

struct SampleOptions {
  std::size_t exact_cap{4096};   // largest set sampled by dense Cholesky
  bool allow_approx{false};      // permit the feature-space sampler above the cap
  int approx_features{1024};
};

// Exact GP posterior conditioned on a dataset. Immutable after conditioning;
// all queries are const and safe to issue from concurrent workers.
//
// Mean and variance follow the closed forms
//   mu(z)   = k(z)' (K + noise*I)^-1 y
//   var(z)  = k(z,z) - k(z)' (K + noise*I)^-1 k(z)
// with a small diagonal jitter folded into the factorization (see condition()).
class Posterior {
 public:
  // Empty-dataset conditioning yields the prior: mean 0, var k(z,z).
  static Posterior condition(const Dataset& data, const KernelConfig& cfg);

  MeanVar mean_var(const Vec& z) const;

  // points: M x D, one query per row.
  Vec batch_mean(const Mat& points) const;
  std::pair<Vec, Vec> batch_mean_var(const Mat& points) const;

  // Mean over the product grid {(x_i, c_j)}: returns N_c x N_x (row per
  // context). Uses the kernel's factorization across the design/context
  // dimension split, which avoids materializing the product set.
  Mat grid_mean(const Mat& designs, const Mat& contexts) const;

  // One joint draw from the posterior over the rows of `points`; deterministic
  // in (posterior, points, seed). Sets larger than opts.exact_cap require
  // opts.allow_approx, which switches to a random-feature sampler.
  Vec sample_on_set(const Mat& points, std::uint64_t seed,
                    const SampleOptions& opts = {}) const;

  double log_marginal_likelihood() const;

  const KernelConfig& config() const { return cfg_; }
  Eigen::Index train_size() const { return train_.rows(); }
  double jitter() const { return jitter_; }

 private:
  Posterior() = default;

  // Thompson draw through a random-feature linear model; used above the
  // exact cap where an M x M factorization is prohibitive.
  Vec sample_feature_space(const Mat& points, std::uint64_t seed, int num_features) const;

  Mat train_;      // n x D
  Vec y_;          // n
  KernelConfig cfg_;
  Mat chol_lower_; // L with L L' = K + (noise + jitter) I
  Vec alpha_;      // (K + (noise + jitter) I)^-1 y
  double jitter_{0.0};
  int dim_x_{0};   // design/context split of the training columns
  int dim_c_{0};
};

// Clamp policy for tiny negative variances from floating-point cancellation:
// values in [-1e-8, 0) clamp to zero, anything below -1e-8 is a genuine bug
// and raises NumericalError.
double clamp_variance(double var, double scale);

}  // namespace ccbo::gp
