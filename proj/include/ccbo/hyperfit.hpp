#pragma once

#include <cstdint>

#include "ccbo/dataset.hpp"
#include "ccbo/kernel.hpp"

namespace ccbo::gp {

struct FitOptions {
  bool fit_lengthscales{true};
  bool fit_signal{true};
  bool fit_noise{true};
  int starts{3};
  int max_evals_per_start{160};
  double lengthscale_min{1e-2};
  double lengthscale_max{10.0};
  double signal_min{1e-3};
  double signal_max{1e3};
  double noise_min{1e-6};
  double noise_max{1.0};
  std::uint64_t seed{0x5eedULL};
};

struct FitResult {
  KernelConfig config;
  double log_likelihood{0.0};
  bool warning{false};  // optimization failed; config falls back to init
};

// Maximizes the log marginal likelihood by multi-start Nelder-Mead over the
// log-parameters. The returned configuration never has a worse likelihood
// than `init`.
FitResult fit_hyperparameters(const Dataset& data, const KernelConfig& init,
                              const FitOptions& opts = {});

}  // namespace ccbo::gp
