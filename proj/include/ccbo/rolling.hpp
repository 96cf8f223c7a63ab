#pragma once

#include <functional>

#include "ccbo/common.hpp"
#include "ccbo/objectives.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::rolling {

// Physical process inputs. F_r and q are stored in SI units (N, W/m^2);
// the documented parameter ranges are R [0.4,0.6] m, omega [0.1,2.5] rad/s,
// F_r [0.1,1.0]e6 N, q [30,70]e6 W/m^2, h_f [0.02,0.03] m.
struct RollingInputs {
  double omega{1.0};  // rad/s
  double force{5e5};  // N
  double flux{5e7};   // W/m^2
  double h_f{0.025};  // m
  double radius{0.5}; // m
};

struct Box {
  double omega_min{0.1}, omega_max{2.5};
  double force_min{0.1e6}, force_max{1.0e6};
  double flux_min{30e6}, flux_max{70e6};
  double hf_min{0.02}, hf_max{0.03};
  double radius_min{0.4}, radius_max{0.6};
};

struct MaterialConstants {
  // Zener-Hollomon constitutive law Z = A [sinh(alpha*sigma)]^n
  double A{1e8};        // 1/s
  double alpha{1e-6};   // 1/Pa
  double n{4.0};
  double Q{2.5e5};      // J/mol, deformation activation energy
  double R_gas{8.314};  // J/(mol K)
  // dynamic recrystallization d_DRX = C eps^-gamma epsdot^-m
  double C{5000.0};
  double gamma{0.5};
  double m{0.2};
  // grain growth d_GG = K_g t_eff^(1/n_g) exp(-Q_g/(R_gas T)) exp(-beta sigma)
  double K_g{1e-6};
  double Q_g{2.5e5};
  double n_g{2.0};
  double beta{1e-7};    // 1/Pa, stress suppression
  double p{2.0};        // generalized-norm exponent
  // geometry and penalties
  double width{1.0};    // m, sheet width b
  double h_0{0.05};     // m, initial thickness
  double lambda_F{1.0};
  double lambda_R{1.0};
  // references and scales fixed by the parameter table bounds
  double force_ref{0.55e6};
  double force_scale{0.9e6};
  double radius_ref{0.5};
  double radius_scale{0.2};
  bool maximize_grain{true};  // sign flag for the response direction

  void validate() const;
};

// Stand-in for the finite-element average contact temperature. The affine
// proxy T = T_base + k_q * (q / 1e6) + k_v * omega * R must stay inside a
// plausible hot-rolling band over the whole parameter box.
struct TempModel {
  double t_base{1000.0};
  double k_q{5.0};    // K per 1e6 W/m^2
  double k_v{40.0};   // K s/m
  std::function<double(const RollingInputs&)> custom;  // optional user table

  double average_temperature(const RollingInputs& inp) const;
  void validate(const Box& box = {}) const;
};

// sigma = F_r / (b * sqrt(R * (h_0 - h_f))), Pa
double flow_stress(const RollingInputs& inp, const MaterialConstants& mc);

// Z = A [sinh(alpha * sigma)]^n
double zener_hollomon(double sigma, const MaterialConstants& mc);

// epsdot = Z * exp(-Q / (R_gas * T_ave))
double strain_rate(double zh, double t_ave, const MaterialConstants& mc);

struct GrainBreakdown {
  double sigma{0.0};
  double zh{0.0};
  double t_ave{0.0};
  double strain{0.0};
  double strain_rate{0.0};
  double t_eff{0.0};
  double d_drx{0.0};
  double d_gg{0.0};
  double d_final{0.0};
};

// Full pre-penalty pipeline; throws NumericalError naming the failing stage.
GrainBreakdown grain_breakdown(const RollingInputs& inp, const MaterialConstants& mc,
                               const TempModel& tm);
double grain_size(const RollingInputs& inp, const MaterialConstants& mc,
                  const TempModel& tm);

// P_total = lambda_F ((F_r - F_ref)/s_F)^2 + lambda_R max(0, (R - R_ref)/s_R)^2
double penalty(const RollingInputs& inp, const MaterialConstants& mc);

// d' = d_final * (1 + P_total)
double penalized_grain_size(const RollingInputs& inp, const MaterialConstants& mc,
                            const TempModel& tm);

// Affine bijection between the unit cube (design (omega, F_r, q), context h_f)
// and the parameter box; radius is fixed per client.
RollingInputs unit_to_physical(const Vec& x, const Vec& c, double radius,
                               const Box& box = {});
void physical_to_unit(const RollingInputs& inp, Vec& x, Vec& c, const Box& box = {});

// Client radii R_k ~ N(0.5, 0.1), clamped into the table range.
double sample_roller_radius(Rng& rng, const Box& box = {});

// CBO client: maximize the (signed) penalized grain size over the unit cube,
// design x = (omega, F_r, q), context c = h_f.
objectives::ClientObjective make_rolling_client(double radius, const MaterialConstants& mc,
                                                const TempModel& tm, const Box& box = {});

}  // namespace ccbo::rolling
