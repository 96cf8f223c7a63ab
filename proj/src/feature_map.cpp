#include "ccbo/feature_map.hpp"

#include <cmath>
#include <numbers>

#include "ccbo/parallel.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::share {

FeatureMap make_feature_map(int num_features, const gp::KernelConfig& kernel,
                            std::uint64_t seed) {
  if (num_features < 1) throw InputError("make_feature_map: need at least one feature");
  kernel.validate();
  const int dim = kernel.dim();
  FeatureMap map;
  map.frequencies.resize(num_features, dim);
  map.phases.resize(num_features);
  map.lengthscales = kernel.lengthscales;
  map.signal_variance = kernel.signal_variance;

  Rng rng(seed);
  for (int j = 0; j < num_features; ++j) {
    for (int d = 0; d < dim; ++d)
      map.frequencies(j, d) = rng.gaussian() / kernel.lengthscales[d];
    map.phases[j] = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  return map;
}

Vec featurize(const FeatureMap& map, const Vec& z) {
  if (z.size() != map.dim()) throw InputError("featurize: dimension mismatch");
  const double amp = std::sqrt(2.0 / map.num_features());
  Vec phi = map.frequencies * z + map.phases;
  for (int j = 0; j < map.num_features(); ++j) phi[j] = amp * std::cos(phi[j]);
  return phi;
}

Mat featurize_batch_serial(const FeatureMap& map, const Mat& points) {
  if (points.cols() != map.dim()) throw InputError("featurize_batch: dimension mismatch");
  const double amp = std::sqrt(2.0 / map.num_features());
  Mat phi(points.rows(), map.num_features());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (int j = 0; j < map.num_features(); ++j) {
      const double arg = map.frequencies.row(j).dot(points.row(i)) + map.phases[j];
      phi(i, j) = amp * std::cos(arg);
    }
  }
  return phi;
}

Mat featurize_batch(const FeatureMap& map, const Mat& points) {
  if (points.cols() != map.dim()) throw InputError("featurize_batch: dimension mismatch");
  const double amp = std::sqrt(2.0 / map.num_features());
  Mat phi(points.rows(), map.num_features());
  parallel_for(static_cast<std::size_t>(points.rows()), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    for (int j = 0; j < map.num_features(); ++j) {
      const double arg = map.frequencies.row(j).dot(points.row(i)) + map.phases[j];
      phi(i, j) = amp * std::cos(arg);
    }
  });
  return phi;
}

}  // namespace ccbo::share
