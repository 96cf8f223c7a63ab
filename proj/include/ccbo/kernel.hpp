#pragma once

#include "ccbo/common.hpp"

namespace ccbo::gp {

// Squared-exponential kernel with per-dimension lengthscales (ARD):
//   k(z1, z2) = signal_variance * exp(-1/2 * sum_d ((z1_d - z2_d) / l_d)^2)
struct KernelConfig {
  Vec lengthscales;              // length D = D_x + D_c, all > 0
  double signal_variance{1.0};   // > 0
  double noise_variance{1e-4};   // >= 0

  static KernelConfig defaults(int dim, double lengthscale = 0.2,
                               double signal = 1.0, double noise = 1e-4) {
    KernelConfig cfg;
    cfg.lengthscales = Vec::Constant(dim, lengthscale);
    cfg.signal_variance = signal;
    cfg.noise_variance = noise;
    return cfg;
  }

  int dim() const { return static_cast<int>(lengthscales.size()); }

  void validate() const {
    if (lengthscales.size() == 0 || (lengthscales.array() <= 0.0).any())
      throw InputError("KernelConfig: lengthscales must be strictly positive");
    if (!(signal_variance > 0.0)) throw InputError("KernelConfig: signal_variance must be > 0");
    if (noise_variance < 0.0) throw InputError("KernelConfig: noise_variance must be >= 0");
  }
};

double kernel_eval(const Vec& z1, const Vec& z2, const KernelConfig& cfg);

// Symmetric n x n kernel matrix over the rows of Z (no noise term).
Mat kernel_matrix(const Mat& Z, const KernelConfig& cfg);
Mat kernel_matrix_serial(const Mat& Z, const KernelConfig& cfg);

// |A| x |B| cross-kernel matrix between two point sets (rows are points).
Mat cross_kernel_matrix(const Mat& A, const Mat& B, const KernelConfig& cfg);
Mat cross_kernel_matrix_serial(const Mat& A, const Mat& B, const KernelConfig& cfg);

// Cross-kernel over a dimension slice [offset, offset+width). The ARD kernel
// factorizes across dimensions, so k([x|c],[x'|c']) equals the product of the
// design-slice factor and the context-slice factor; grid-structured queries
// exploit this. A holds slice coordinates only (width columns), B holds full
// points. `scaled` multiplies the factor by signal_variance.
Mat slice_kernel_factor(const Mat& A, const Mat& B, const KernelConfig& cfg,
                        int offset, int width, bool scaled);

}  // namespace ccbo::gp
