#include "ccbo/surrogate_model.hpp"

#include <cmath>

#include "ccbo/rng.hpp"

namespace ccbo::gp {

SurrogateModel::SurrogateModel(int dim_x, int dim_c, const KernelConfig& base,
                               double noise_sigma, RefitPolicy policy,
                               std::uint64_t fit_seed)
    : data_(dim_x, dim_c),
      cfg_(base),
      noise_sigma_(noise_sigma),
      policy_(policy),
      fit_seed_(fit_seed) {
  cfg_.noise_variance = noise_sigma_ * noise_sigma_;
  cfg_.validate();
  post_ = Posterior::condition(data_, cfg_);
}

void SurrogateModel::recondition() {
  Dataset standardized(data_.dim_x(), data_.dim_c(), data_.client_id());
  for (const auto& obs : data_.observations())
    standardized.add(obs.x, obs.c, (obs.y - shift_) / scale_);
  cfg_.noise_variance = (noise_sigma_ / scale_) * (noise_sigma_ / scale_);
  post_ = Posterior::condition(standardized, cfg_);
}

void SurrogateModel::add_observation(const Vec& x, const Vec& c, double y) {
  data_.add(x, c, y);
  ++updates_since_refit_;
  recondition();
}

void SurrogateModel::refit() {
  updates_since_refit_ = 0;
  if (data_.size() >= 2) {
    const Vec y = data_.responses();
    shift_ = y.mean();
    const double sd = std::sqrt((y.array() - shift_).square().sum() / (y.size() - 1.0));
    scale_ = sd > 1e-12 ? sd : 1.0;
  }
  recondition();
  if (!policy_.enabled || data_.size() < 2) return;

  Dataset standardized(data_.dim_x(), data_.dim_c(), data_.client_id());
  for (const auto& obs : data_.observations())
    standardized.add(obs.x, obs.c, (obs.y - shift_) / scale_);
  FitOptions fit = policy_.fit;
  fit.fit_noise = policy_.fit_noise;
  fit.seed = derive_seed(fit_seed_, "hyperfit", static_cast<std::uint64_t>(refit_count_++));
  const FitResult result = fit_hyperparameters(standardized, cfg_, fit);
  if (!result.warning) {
    cfg_ = result.config;
    post_ = Posterior::condition(standardized, cfg_);
  }
}

void SurrogateModel::maybe_refit() {
  if (!policy_.enabled) return;
  if (static_cast<int>(data_.size()) <= policy_.every_until ||
      updates_since_refit_ >= policy_.interval_after)
    refit();
}

double SurrogateModel::mean(const Vec& x, const Vec& c) const {
  Vec z(data_.dim());
  z.head(data_.dim_x()) = x;
  z.tail(data_.dim_c()) = c;
  return shift_ + scale_ * post_.mean_var(z).mean;
}

MeanVar SurrogateModel::mean_var(const Vec& z) const {
  const MeanVar inner = post_.mean_var(z);
  return {shift_ + scale_ * inner.mean, scale_ * scale_ * inner.var};
}

Vec SurrogateModel::batch_mean(const Mat& points) const {
  return (scale_ * post_.batch_mean(points)).array() + shift_;
}

Mat SurrogateModel::grid_mean(const Mat& designs, const Mat& contexts) const {
  return (scale_ * post_.grid_mean(designs, contexts)).array() + shift_;
}

Vec SurrogateModel::sample_on_set(const Mat& points, std::uint64_t seed,
                                  const SampleOptions& opts) const {
  return (scale_ * post_.sample_on_set(points, seed, opts)).array() + shift_;
}

std::function<double(const Vec&)> SurrogateModel::mean_fn() const {
  // snapshot semantics: captures the current posterior by value
  const Posterior post = post_;
  const double shift = shift_;
  const double scale = scale_;
  return [post, shift, scale](const Vec& z) { return shift + scale * post.mean_var(z).mean; };
}

}  // namespace ccbo::gp
