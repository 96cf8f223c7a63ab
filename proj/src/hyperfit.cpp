#include "ccbo/hyperfit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "ccbo/posterior.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::gp {

namespace {

constexpr double kBad = std::numeric_limits<double>::infinity();

struct ParamSpace {
  const FitOptions* opts;
  int dim;  // kernel input dimension

  int free_count() const {
    return (opts->fit_lengthscales ? dim : 0) + (opts->fit_signal ? 1 : 0) +
           (opts->fit_noise ? 1 : 0);
  }

  Vec encode(const KernelConfig& cfg) const {
    Vec theta(free_count());
    int at = 0;
    if (opts->fit_lengthscales)
      for (int d = 0; d < dim; ++d) theta[at++] = std::log(cfg.lengthscales[d]);
    if (opts->fit_signal) theta[at++] = std::log(cfg.signal_variance);
    if (opts->fit_noise) theta[at++] = std::log(cfg.noise_variance);
    return theta;
  }

  KernelConfig decode(const Vec& theta, const KernelConfig& base) const {
    KernelConfig cfg = base;
    int at = 0;
    if (opts->fit_lengthscales)
      for (int d = 0; d < dim; ++d)
        cfg.lengthscales[d] = std::clamp(std::exp(theta[at++]), opts->lengthscale_min,
                                         opts->lengthscale_max);
    if (opts->fit_signal)
      cfg.signal_variance =
          std::clamp(std::exp(theta[at++]), opts->signal_min, opts->signal_max);
    if (opts->fit_noise)
      cfg.noise_variance = std::clamp(std::exp(theta[at++]), opts->noise_min, opts->noise_max);
    return cfg;
  }
};

// Standard Nelder-Mead on the free log-parameters; returns the best vertex.
Vec nelder_mead(const Vec& start, int max_evals, double step,
                const std::function<double(const Vec&)>& objective, double& best_value) {
  const int p = static_cast<int>(start.size());
  std::vector<Vec> verts(p + 1, start);
  std::vector<double> vals(p + 1);
  for (int i = 1; i <= p; ++i) verts[i][i - 1] += step;
  int evals = 0;
  for (int i = 0; i <= p; ++i) vals[i] = (++evals, objective(verts[i]));

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  while (evals < max_evals) {
    std::vector<int> order(p + 1);
    for (int i = 0; i <= p; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<Vec> sv(p + 1);
    std::vector<double> sf(p + 1);
    for (int i = 0; i <= p; ++i) sv[i] = verts[order[i]], sf[i] = vals[order[i]];
    verts = sv;
    vals = sf;

    if (std::abs(vals[p] - vals[0]) < 1e-10 * (1.0 + std::abs(vals[0]))) break;

    Vec centroid = Vec::Zero(p);
    for (int i = 0; i < p; ++i) centroid += verts[i];
    centroid /= p;

    const Vec reflected = centroid + alpha * (centroid - verts[p]);
    const double fr = (++evals, objective(reflected));
    if (fr < vals[0]) {
      const Vec expanded = centroid + gamma * (reflected - centroid);
      const double fe = (++evals, objective(expanded));
      if (fe < fr) {
        verts[p] = expanded;
        vals[p] = fe;
      } else {
        verts[p] = reflected;
        vals[p] = fr;
      }
    } else if (fr < vals[p - 1]) {
      verts[p] = reflected;
      vals[p] = fr;
    } else {
      const Vec contracted = centroid + rho * (verts[p] - centroid);
      const double fc = (++evals, objective(contracted));
      if (fc < vals[p]) {
        verts[p] = contracted;
        vals[p] = fc;
      } else {
        for (int i = 1; i <= p; ++i) {
          verts[i] = verts[0] + sigma * (verts[i] - verts[0]);
          vals[i] = (++evals, objective(verts[i]));
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= p; ++i)
    if (vals[i] < vals[best]) best = i;
  best_value = vals[best];
  return verts[best];
}

}  // namespace

FitResult fit_hyperparameters(const Dataset& data, const KernelConfig& init,
                              const FitOptions& opts) {
  init.validate();
  if (data.size() < 2) throw InputError("fit_hyperparameters: need at least 2 observations");

  ParamSpace space{&opts, init.dim()};
  if (space.free_count() == 0) return {init, Posterior::condition(data, init).log_marginal_likelihood(), false};

  auto negLogLik = [&](const Vec& theta) -> double {
    try {
      const KernelConfig cfg = space.decode(theta, init);
      return -Posterior::condition(data, cfg).log_marginal_likelihood();
    } catch (const NumericalError&) {
      return kBad;
    }
  };

  double initValue = negLogLik(space.encode(init));

  Rng rng(opts.seed);
  Vec bestTheta = space.encode(init);
  double bestValue = initValue;
  bool anyFinite = std::isfinite(initValue);
  for (int s = 0; s < opts.starts; ++s) {
    Vec start = space.encode(init);
    if (s > 0)
      for (int i = 0; i < start.size(); ++i) start[i] += rng.gaussian() * 0.7;
    double value = kBad;
    const Vec theta = nelder_mead(start, opts.max_evals_per_start, 0.4, negLogLik, value);
    if (std::isfinite(value)) anyFinite = true;
    if (value < bestValue) {
      bestValue = value;
      bestTheta = theta;
    }
  }

  if (!anyFinite) return {init, -initValue, true};

  FitResult out;
  out.config = space.decode(bestTheta, init);
  out.log_likelihood = -bestValue;
  out.warning = false;
  // keep the monotone contract exact: fall back if the search did not improve
  if (!(bestValue <= initValue)) {
    out.config = init;
    out.log_likelihood = -initValue;
  }
  return out;
}

}  // namespace ccbo::gp
