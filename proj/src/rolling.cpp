#include "ccbo/rolling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccbo::rolling {

namespace {

void require_finite(double v, const char* stage) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "rolling pipeline: stage '" << stage << "' produced non-finite value " << v;
    throw NumericalError(msg.str());
  }
}

}  // namespace

void MaterialConstants::validate() const {
  const double positives[] = {A,   alpha, n,   Q,        R_gas,       C,
                              gamma, m,   K_g, Q_g,      n_g,         beta,
                              p,     width, h_0, force_scale, radius_scale};
  for (double v : positives)
    if (!(v > 0.0)) throw ConfigError("rolling constants must be strictly positive");
  if (lambda_F < 0.0 || lambda_R < 0.0)
    throw ConfigError("rolling penalty weights must be nonnegative");
}

double TempModel::average_temperature(const RollingInputs& inp) const {
  if (custom) return custom(inp);
  return t_base + k_q * (inp.flux / 1e6) + k_v * inp.omega * inp.radius;
}

void TempModel::validate(const Box& box) const {
  // monotone affine proxy: checking the box corners bounds the whole box;
  // a user table is probed on a coarse lattice instead
  const double lo[3] = {box.flux_min, box.omega_min, box.radius_min};
  const double hi[3] = {box.flux_max, box.omega_max, box.radius_max};
  const int probes = custom ? 5 : 2;
  for (int i = 0; i < probes; ++i)
    for (int j = 0; j < probes; ++j)
      for (int k = 0; k < probes; ++k) {
        RollingInputs inp;
        inp.flux = lo[0] + (hi[0] - lo[0]) * i / (probes - 1.0);
        inp.omega = lo[1] + (hi[1] - lo[1]) * j / (probes - 1.0);
        inp.radius = lo[2] + (hi[2] - lo[2]) * k / (probes - 1.0);
        inp.h_f = box.hf_min;
        const double t = average_temperature(inp);
        if (!(t >= 900.0 && t <= 1500.0)) {
          std::ostringstream msg;
          msg << "TempModel: average temperature " << t
              << " K leaves the plausible band [900, 1500] K inside the parameter box";
          throw ConfigError(msg.str());
        }
      }
}

double flow_stress(const RollingInputs& inp, const MaterialConstants& mc) {
  if (!(mc.h_0 > inp.h_f))
    throw InputError("flow_stress: initial thickness must exceed final thickness");
  if (!(inp.radius > 0.0 && inp.force > 0.0 && mc.width > 0.0))
    throw InputError("flow_stress: radius, force and width must be positive");
  return inp.force / (mc.width * std::sqrt(inp.radius * (mc.h_0 - inp.h_f)));
}

double zener_hollomon(double sigma, const MaterialConstants& mc) {
  if (!(sigma > 0.0)) throw InputError("zener_hollomon: stress must be positive");
  const double arg = mc.alpha * sigma;
  if (arg > 700.0) {
    std::ostringstream msg;
    msg << "zener_hollomon: sinh overflow, alpha*sigma = " << arg << " exceeds 700";
    throw NumericalError(msg.str());
  }
  return mc.A * std::pow(std::sinh(arg), mc.n);
}

double strain_rate(double zh, double t_ave, const MaterialConstants& mc) {
  if (!(zh > 0.0)) throw InputError("strain_rate: Zener-Hollomon parameter must be positive");
  if (!(t_ave > 0.0)) throw InputError("strain_rate: temperature must be positive");
  return zh * std::exp(-mc.Q / (mc.R_gas * t_ave));
}

GrainBreakdown grain_breakdown(const RollingInputs& inp, const MaterialConstants& mc,
                               const TempModel& tm) {
  GrainBreakdown out;
  out.sigma = flow_stress(inp, mc);
  require_finite(out.sigma, "flow_stress");
  out.zh = zener_hollomon(out.sigma, mc);
  require_finite(out.zh, "zener_hollomon");
  out.t_ave = tm.average_temperature(inp);
  require_finite(out.t_ave, "average_temperature");
  out.strain_rate = strain_rate(out.zh, out.t_ave, mc);
  require_finite(out.strain_rate, "strain_rate");
  out.strain = std::log(mc.h_0 / inp.h_f);
  require_finite(out.strain, "true_strain");
  out.t_eff = out.strain / out.strain_rate;
  require_finite(out.t_eff, "effective_time");
  out.d_drx = mc.C * std::pow(out.strain, -mc.gamma) * std::pow(out.strain_rate, -mc.m);
  require_finite(out.d_drx, "d_drx");
  out.d_gg = mc.K_g * std::pow(out.t_eff, 1.0 / mc.n_g) *
             std::exp(-mc.Q_g / (mc.R_gas * out.t_ave)) * std::exp(-mc.beta * out.sigma);
  require_finite(out.d_gg, "d_gg");
  // generalized norm, evaluated in log space so the widely separated
  // mechanism scales cannot underflow d^-p
  const double logDrx = std::log(out.d_drx);
  const double logGg = std::log(out.d_gg);
  const double lo = std::min(logDrx, logGg);
  const double hi = std::max(logDrx, logGg);
  out.d_final = std::exp(lo - std::log1p(std::exp(-mc.p * (hi - lo))) / mc.p);
  require_finite(out.d_final, "generalized_norm");
  return out;
}

double grain_size(const RollingInputs& inp, const MaterialConstants& mc,
                  const TempModel& tm) {
  return grain_breakdown(inp, mc, tm).d_final;
}

double penalty(const RollingInputs& inp, const MaterialConstants& mc) {
  const double fTerm = (inp.force - mc.force_ref) / mc.force_scale;
  const double rTerm = std::max(0.0, (inp.radius - mc.radius_ref) / mc.radius_scale);
  return mc.lambda_F * fTerm * fTerm + mc.lambda_R * rTerm * rTerm;
}

double penalized_grain_size(const RollingInputs& inp, const MaterialConstants& mc,
                            const TempModel& tm) {
  return grain_size(inp, mc, tm) * (1.0 + penalty(inp, mc));
}

RollingInputs unit_to_physical(const Vec& x, const Vec& c, double radius, const Box& box) {
  if (x.size() != 3 || c.size() != 1)
    throw InputError("unit_to_physical: design must be (omega, F_r, q) and context (h_f)");
  RollingInputs inp;
  inp.omega = box.omega_min + (box.omega_max - box.omega_min) * x[0];
  inp.force = box.force_min + (box.force_max - box.force_min) * x[1];
  inp.flux = box.flux_min + (box.flux_max - box.flux_min) * x[2];
  inp.h_f = box.hf_min + (box.hf_max - box.hf_min) * c[0];
  inp.radius = radius;
  return inp;
}

void physical_to_unit(const RollingInputs& inp, Vec& x, Vec& c, const Box& box) {
  x.resize(3);
  c.resize(1);
  x[0] = (inp.omega - box.omega_min) / (box.omega_max - box.omega_min);
  x[1] = (inp.force - box.force_min) / (box.force_max - box.force_min);
  x[2] = (inp.flux - box.flux_min) / (box.flux_max - box.flux_min);
  c[0] = (inp.h_f - box.hf_min) / (box.hf_max - box.hf_min);
}

double sample_roller_radius(Rng& rng, const Box& box) {
  const double r = 0.5 + 0.1 * rng.gaussian();
  return std::clamp(r, box.radius_min, box.radius_max);
}

objectives::ClientObjective make_rolling_client(double radius, const MaterialConstants& mc,
                                                const TempModel& tm, const Box& box) {
  mc.validate();
  tm.validate(box);
  const double r = std::clamp(radius, box.radius_min, box.radius_max);
  objectives::ClientObjective obj;
  obj.dim_x = 3;
  obj.dim_c = 1;
  obj.shift_x = Vec::Zero(3);
  obj.shift_c = Vec::Zero(1);
  obj.label = "rolling";
  obj.base = [r, mc, tm, box](const Vec& u) {
    const Vec c = u.head(1);
    const Vec x = u.tail(3);
    const RollingInputs inp = unit_to_physical(x, c, r, box);
    const double d = penalized_grain_size(inp, mc, tm);
    return mc.maximize_grain ? d : -d;
  };
  return obj;
}

}  // namespace ccbo::rolling
