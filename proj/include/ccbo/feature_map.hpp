#pragma once

#include <cstdint>

#include "ccbo/common.hpp"
#include "ccbo/kernel.hpp"

namespace ccbo::share {

// Random Fourier feature map for the squared-exponential kernel:
//   phi(z) = sqrt(2/J) * [cos(alpha_j' z + beta_j)]_j
// Frequencies are drawn from the kernel's spectral density (Gaussian with
// per-dimension std 1/l_d), phases uniform on [0, 2*pi). phi(z1)' phi(z2)
// approximates k(z1, z2) / signal_variance. Deterministic in the seed, so a
// coordinator and any number of clients derive bitwise-identical maps.
struct FeatureMap {
  Mat frequencies;       // J x D
  Vec phases;            // J
  Vec lengthscales;      // source kernel lengthscales, length D
  double signal_variance{1.0};

  int num_features() const { return static_cast<int>(frequencies.rows()); }
  int dim() const { return static_cast<int>(frequencies.cols()); }
};

FeatureMap make_feature_map(int num_features, const gp::KernelConfig& kernel,
                            std::uint64_t seed);

// phi(z), length J
Vec featurize(const FeatureMap& map, const Vec& z);

// One row of phi per point; M x J.
Mat featurize_batch(const FeatureMap& map, const Mat& points);
Mat featurize_batch_serial(const FeatureMap& map, const Mat& points);

}  // namespace ccbo::share
