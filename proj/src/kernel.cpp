#include "ccbo/kernel.hpp"

#include <cmath>

#include "ccbo/parallel.hpp"

namespace ccbo::gp {

namespace {

// squared scaled distance over dims [offset, offset+width)
inline double sqdist(const Mat& A, Eigen::Index i, const Mat& B, Eigen::Index j,
                     const Vec& ls, int offset, int width) {
  double s = 0.0;
  for (int d = 0; d < width; ++d) {
    const double r = (A(i, offset + d) - B(j, offset + d)) / ls[offset + d];
    s += r * r;
  }
  return s;
}

}  // namespace

double kernel_eval(const Vec& z1, const Vec& z2, const KernelConfig& cfg) {
  cfg.validate();
  if (z1.size() != cfg.dim() || z2.size() != cfg.dim())
    throw InputError("kernel_eval: input dimension does not match kernel config");
  const Vec r = (z1 - z2).cwiseQuotient(cfg.lengthscales);
  return cfg.signal_variance * std::exp(-0.5 * r.squaredNorm());
}

Mat kernel_matrix_serial(const Mat& Z, const KernelConfig& cfg) {
  const Eigen::Index n = Z.rows();
  Mat k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = cfg.signal_variance;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v =
          cfg.signal_variance *
          std::exp(-0.5 * sqdist(Z, i, Z, j, cfg.lengthscales, 0, cfg.dim()));
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

Mat kernel_matrix(const Mat& Z, const KernelConfig& cfg) {
  const Eigen::Index n = Z.rows();
  Mat k(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    k(i, i) = cfg.signal_variance;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      k(i, j) = cfg.signal_variance *
                std::exp(-0.5 * sqdist(Z, i, Z, j, cfg.lengthscales, 0, cfg.dim()));
    }
  });
  // mirror after the parallel fill so each entry is written by one thread
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) k(i, j) = k(j, i);
  return k;
}

Mat cross_kernel_matrix_serial(const Mat& A, const Mat& B, const KernelConfig& cfg) {
  Mat k(A.rows(), B.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < B.rows(); ++j)
      k(i, j) = cfg.signal_variance *
                std::exp(-0.5 * sqdist(A, i, B, j, cfg.lengthscales, 0, cfg.dim()));
  return k;
}

Mat cross_kernel_matrix(const Mat& A, const Mat& B, const KernelConfig& cfg) {
  Mat k(A.rows(), B.rows());
  parallel_for(static_cast<std::size_t>(A.rows()), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    for (Eigen::Index j = 0; j < B.rows(); ++j)
      k(i, j) = cfg.signal_variance *
                std::exp(-0.5 * sqdist(A, i, B, j, cfg.lengthscales, 0, cfg.dim()));
  });
  return k;
}

Mat slice_kernel_factor(const Mat& A, const Mat& B, const KernelConfig& cfg,
                        int offset, int width, bool scaled) {
  if (offset < 0 || width < 1 || offset + width > cfg.dim())
    throw InputError("slice_kernel_factor: slice out of range");
  if (A.cols() != width || B.cols() < offset + width)
    throw InputError("slice_kernel_factor: point matrices do not match the slice");
  const double amp = scaled ? cfg.signal_variance : 1.0;
  Mat k(A.rows(), B.rows());
  parallel_for(static_cast<std::size_t>(A.rows()), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    for (Eigen::Index j = 0; j < B.rows(); ++j) {
      double s = 0.0;
      for (int d = 0; d < width; ++d) {
        const double r = (A(i, d) - B(j, offset + d)) / cfg.lengthscales[offset + d];
        s += r * r;
      }
      k(i, j) = amp * std::exp(-0.5 * s);
    }
  });
  return k;
}

}  // namespace ccbo::gp
