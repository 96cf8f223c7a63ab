#include "ccbo/posterior.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ccbo/feature_map.hpp"
#include "ccbo/parallel.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::gp {

namespace {

constexpr double kJitterBase = 1e-8;
constexpr double kJitterMax = 1e-4;
constexpr double kVarClampTol = 1e-8;

// Cholesky with escalating jitter. Returns the jitter that succeeded.
double robust_cholesky(const Mat& k, double noise, double signal, Mat& lower) {
  double jitter = kJitterBase * signal;
  for (; jitter <= kJitterMax * signal * 1.0001; jitter *= 10.0) {
    Mat withDiag = k;
    withDiag.diagonal().array() += noise + jitter;
    Eigen::LLT<Mat> llt(withDiag);
    if (llt.info() == Eigen::Success) {
      lower = llt.matrixL();
      if (lower.diagonal().allFinite()) return jitter;
    }
  }
  const double dmax = k.diagonal().maxCoeff();
  const double dmin = k.diagonal().minCoeff();
  std::ostringstream msg;
  msg << "condition: kernel matrix not positive definite after jitter escalation to "
      << kJitterMax * signal << " (diag range [" << dmin << ", " << dmax
      << "], condition estimate ~" << dmax / (kJitterMax * signal) << ")";
  throw NumericalError(msg.str());
}

}  // namespace

double clamp_variance(double var, double scale) {
  const double tol = kVarClampTol * std::max(1.0, scale);
  if (var >= 0.0) return var;
  if (var >= -tol) return 0.0;
  std::ostringstream msg;
  msg << "variance came out " << var << ", below the -" << tol << " clamp window";
  throw NumericalError(msg.str());
}

Posterior Posterior::condition(const Dataset& data, const KernelConfig& cfg) {
  cfg.validate();
  if (!data.empty() && data.dim() != cfg.dim())
    throw InputError("condition: dataset dimension does not match kernel config");

  Posterior post;
  post.cfg_ = cfg;
  post.dim_x_ = data.dim_x();
  post.dim_c_ = data.dim_c();
  if (data.empty()) {
    post.train_.resize(0, cfg.dim());
    post.y_.resize(0);
    return post;
  }

  post.train_ = data.inputs();
  post.y_ = data.responses();
  const Mat k = kernel_matrix(post.train_, cfg);
  post.jitter_ = robust_cholesky(k, cfg.noise_variance, cfg.signal_variance, post.chol_lower_);
  post.alpha_ = post.chol_lower_.triangularView<Eigen::Lower>().solve(post.y_);
  post.chol_lower_.triangularView<Eigen::Lower>().transpose().solveInPlace(post.alpha_);
  return post;
}

MeanVar Posterior::mean_var(const Vec& z) const {
  if (z.size() != cfg_.dim()) throw InputError("mean_var: query dimension mismatch");
  const double prior = kernel_eval(z, z, cfg_);
  if (train_.rows() == 0) return {0.0, prior};

  Vec kvec(train_.rows());
  for (Eigen::Index i = 0; i < train_.rows(); ++i) {
    const Vec r = (train_.row(i).transpose() - z).cwiseQuotient(cfg_.lengthscales);
    kvec[i] = cfg_.signal_variance * std::exp(-0.5 * r.squaredNorm());
  }
  const double mean = kvec.dot(alpha_);
  const Vec v = chol_lower_.triangularView<Eigen::Lower>().solve(kvec);
  const double var = clamp_variance(prior - v.squaredNorm(), cfg_.signal_variance);
  return {mean, var};
}

Vec Posterior::batch_mean(const Mat& points) const {
  if (points.cols() != cfg_.dim()) throw InputError("batch_mean: query dimension mismatch");
  if (train_.rows() == 0) return Vec::Zero(points.rows());
  const Mat kcross = cross_kernel_matrix(points, train_, cfg_);
  return kcross * alpha_;
}

std::pair<Vec, Vec> Posterior::batch_mean_var(const Mat& points) const {
  if (points.cols() != cfg_.dim()) throw InputError("batch_mean_var: query dimension mismatch");
  const Eigen::Index m = points.rows();
  if (train_.rows() == 0)
    return {Vec::Zero(m), Vec::Constant(m, cfg_.signal_variance)};

  const Mat kcross = cross_kernel_matrix(points, train_, cfg_);
  Vec mean = kcross * alpha_;
  Vec var(m);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    const Vec v = chol_lower_.triangularView<Eigen::Lower>().solve(kcross.row(i).transpose());
    var[i] = clamp_variance(cfg_.signal_variance - v.squaredNorm(), cfg_.signal_variance);
  });
  return {std::move(mean), std::move(var)};
}

Mat Posterior::grid_mean(const Mat& designs, const Mat& contexts) const {
  const int dx = static_cast<int>(designs.cols());
  const int dc = static_cast<int>(contexts.cols());
  if (dx + dc != cfg_.dim()) throw InputError("grid_mean: design/context split mismatch");
  if (train_.rows() == 0) return Mat::Zero(contexts.rows(), designs.rows());

  // k([x|c], z_m) = kx(x, z_m) * kc(c, z_m); mean over the grid is
  // Kc * diag(alpha) * Kx' with the signal variance carried by Kx.
  const Mat kx = slice_kernel_factor(designs, train_, cfg_, 0, dx, /*scaled=*/true);
  const Mat kc = slice_kernel_factor(contexts, train_, cfg_, dx, dc, /*scaled=*/false);
  return kc * alpha_.asDiagonal() * kx.transpose();
}

Vec Posterior::sample_on_set(const Mat& points, std::uint64_t seed,
                             const SampleOptions& opts) const {
  if (points.rows() < 1) throw InputError("sample_on_set: empty point set");
  if (points.cols() != cfg_.dim()) throw InputError("sample_on_set: dimension mismatch");
  const auto m = static_cast<std::size_t>(points.rows());

  if (m > opts.exact_cap) {
    if (!opts.allow_approx) {
      std::ostringstream msg;
      msg << "sample_on_set: set size " << m << " exceeds the exact-sampling cap "
          << opts.exact_cap << " and the approximate sampler is not enabled";
      throw CapacityError(msg.str());
    }
    return sample_feature_space(points, seed, opts.approx_features);
  }

  // exact joint draw: mu + L_cov * xi
  Mat cov = kernel_matrix(points, cfg_);
  Vec mean = Vec::Zero(points.rows());
  if (train_.rows() > 0) {
    const Mat kcross = cross_kernel_matrix(points, train_, cfg_);
    mean = kcross * alpha_;
    const Mat v = chol_lower_.triangularView<Eigen::Lower>().solve(kcross.transpose());
    cov.noalias() -= v.transpose() * v;
  }
  Mat covChol;
  robust_cholesky(cov, 0.0, cfg_.signal_variance, covChol);

  Rng rng(seed);
  Vec xi(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) xi[i] = rng.gaussian();
  return mean + covChol.triangularView<Eigen::Lower>() * xi;
}

Vec Posterior::sample_feature_space(const Mat& points, std::uint64_t seed,
                                    int num_features) const {
  const auto map = share::make_feature_map(num_features, cfg_, derive_seed(seed, "map"));
  const double amp = std::sqrt(cfg_.signal_variance);

  Rng rng(derive_seed(seed, "weights"));
  Vec xi(num_features);
  for (int j = 0; j < num_features; ++j) xi[j] = rng.gaussian();

  if (train_.rows() == 0) {
    const Mat phiQuery = amp * share::featurize_batch(map, points);
    return phiQuery * xi;  // prior draw: theta ~ N(0, I)
  }

  // Bayesian linear model y = Phi theta + eps with theta ~ N(0, I):
  //   theta | y ~ N(A^-1 Phi' y, noise * A^-1),  A = Phi' Phi + noise * I
  const double noise = std::max(cfg_.noise_variance, 1e-10 * cfg_.signal_variance);
  const Mat phiTrain = amp * share::featurize_batch(map, train_);
  Mat a = phiTrain.transpose() * phiTrain;
  a.diagonal().array() += noise;
  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success)
    throw NumericalError("sample_on_set: feature-space normal equations not PD");
  const Vec thetaMean = llt.solve(phiTrain.transpose() * y_);
  Vec theta = Mat(llt.matrixL()).triangularView<Eigen::Lower>().transpose().solve(xi);
  theta = thetaMean + std::sqrt(noise) * theta;

  const Mat phiQuery = amp * share::featurize_batch(map, points);
  return phiQuery * theta;
}

double Posterior::log_marginal_likelihood() const {
  if (train_.rows() == 0) return 0.0;
  const double n = static_cast<double>(train_.rows());
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < chol_lower_.rows(); ++i)
    logdet += std::log(chol_lower_(i, i));
  return -0.5 * y_.dot(alpha_) - logdet - 0.5 * n * std::log(2.0 * std::numbers::pi);
}

}  // namespace ccbo::gp
