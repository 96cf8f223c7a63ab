#include "ccbo/objectives.hpp"

#include <cmath>
#include <numbers>

namespace ccbo::objectives {

namespace {

using std::numbers::pi;

double ackley_raw(const Vec& u) {
  const int dim = static_cast<int>(u.size());
  const double a = 20.0, b = 0.2, c = 2.0 * pi;
  double sumSq = 0.0, sumCos = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double z = -32.768 + 65.536 * u[i];
    sumSq += z * z;
    sumCos += std::cos(c * z);
  }
  return a * std::exp(-b * std::sqrt(sumSq / dim)) + std::exp(sumCos / dim) - a -
         std::exp(1.0);
}

double levy_raw(const Vec& u) {
  const int dim = static_cast<int>(u.size());
  Vec w(dim);
  for (int i = 0; i < dim; ++i) {
    const double z = -10.0 + 20.0 * u[i];
    w[i] = 1.0 + z / 4.0;  // maximum 0 at u = 0.5 (z = 0)
  }
  const double s1 = std::sin(pi * w[0]);
  double value = -s1 * s1;
  for (int i = 0; i < dim - 1; ++i) {
    const double si = std::sin(pi * w[i] + 1.0);
    value -= (w[i] - 1.0) * (w[i] - 1.0) * (1.0 + 10.0 * si * si);
  }
  const double sd = std::sin(2.0 * pi * w[dim - 1]);
  value -= (w[dim - 1] - 1.0) * (w[dim - 1] - 1.0) * (1.0 + sd * sd);
  return value;
}

// 6-d hartmann with the last two coordinates pinned at 0.5; v = (c1,c2,x1,x2).
double hartmann_raw(const Vec& u) {
  static const double alpha[4] = {1.0, 1.2, 3.0, 3.2};
  static const double A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                 {0.05, 10, 17, 0.1, 8, 14},
                                 {3, 3.5, 1.7, 10, 17, 8},
                                 {17, 8, 0.05, 10, 0.1, 14}};
  static const double P[4][6] = {
      {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
      {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
      {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
      {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  double v[6] = {u[0], u[1], u[2], u[3], 0.5, 0.5};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 6; ++j) inner += A[i][j] * (v[j] - P[i][j]) * (v[j] - P[i][j]);
    sum += alpha[i] * std::exp(-inner);
  }
  return -sum;
}

}  // namespace

void BenchmarkSpec::validate() const {
  if (dim_c < 1 || dim_x < 1) throw ConfigError("benchmark: dimensions must be >= 1");
  if (name == Benchmark::Hartmann && (dim_c != 2 || dim_x != 2))
    throw ConfigError("benchmark: hartmann is only defined for D_c = D_x = 2");
}

BenchmarkSpec make_benchmark(Benchmark name, int dim_c, int dim_x) {
  BenchmarkSpec spec{name, dim_c, dim_x, name == Benchmark::Hartmann};
  spec.validate();
  return spec;
}

BenchmarkSpec parse_benchmark(const std::string& selector) {
  const auto p1 = selector.find('-');
  const auto p2 = selector.find('-', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw ConfigError("benchmark selector must look like 'ackley-2-1': " + selector);
  const std::string name = selector.substr(0, p1);
  int dimC = 0, dimX = 0;
  try {
    dimC = std::stoi(selector.substr(p1 + 1, p2 - p1 - 1));
    dimX = std::stoi(selector.substr(p2 + 1));
  } catch (const std::exception&) {
    throw ConfigError("benchmark selector has non-numeric dimensions: " + selector);
  }
  Benchmark bench;
  if (name == "ackley")
    bench = Benchmark::Ackley;
  else if (name == "levy")
    bench = Benchmark::Levy;
  else if (name == "hartmann")
    bench = Benchmark::Hartmann;
  else
    throw ConfigError("unknown benchmark '" + name + "'");
  return make_benchmark(bench, dimC, dimX);
}

double eval_base(const BenchmarkSpec& spec, const Vec& u) {
  spec.validate();
  if (u.size() != spec.dim())
    throw InputError("eval_base: input length does not match the benchmark dimensions");
  if (!u.allFinite()) throw InputError("eval_base: non-finite input");
  double value = 0.0;
  switch (spec.name) {
    case Benchmark::Ackley: value = ackley_raw(u); break;
    case Benchmark::Levy: value = levy_raw(u); break;
    case Benchmark::Hartmann: value = hartmann_raw(u); break;
  }
  return spec.negate ? -value : value;
}

double ClientObjective::eval(const Vec& x, const Vec& c) const {
  if (x.size() != dim_x || c.size() != dim_c)
    throw InputError("ClientObjective::eval: dimension mismatch");
  Vec u(dim_c + dim_x);
  u.head(dim_c) = c + shift_c;
  u.tail(dim_x) = x + shift_x;
  return base(u);
}

double ClientObjective::observe(const Vec& x, const Vec& c, Rng& rng) const {
  return eval(x, c) + noise_sigma * rng.gaussian();
}

ClientObjective make_client(const BenchmarkSpec& spec) {
  spec.validate();
  ClientObjective obj;
  obj.base = [spec](const Vec& u) { return eval_base(spec, u); };
  obj.dim_x = spec.dim_x;
  obj.dim_c = spec.dim_c;
  obj.shift_x = Vec::Zero(spec.dim_x);
  obj.shift_c = Vec::Zero(spec.dim_c);
  return obj;
}

std::pair<Vec, Vec> sample_heterogeneity(int dim_x, int dim_c, Rng& rng) {
  Vec sx(dim_x), sc(dim_c);
  for (int i = 0; i < dim_x; ++i) sx[i] = rng.uniform(-0.05, 0.05);
  for (int i = 0; i < dim_c; ++i) sc[i] = rng.uniform(-0.05, 0.05);
  return {sx, sc};
}

double calibrate_noise(const ClientObjective& obj, Rng& rng, int n, double fraction) {
  if (n < 2) throw InputError("calibrate_noise: need at least 2 evaluations");
  Vec values(n);
  Vec x(obj.dim_x), c(obj.dim_c);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < obj.dim_x; ++d) x[d] = rng.u01();
    for (int d = 0; d < obj.dim_c; ++d) c[d] = rng.u01();
    values[i] = obj.eval(x, c);
  }
  const double mean = values.mean();
  const double ss = (values.array() - mean).square().sum();
  return fraction * std::sqrt(ss / (n - 1));
}

}  // namespace ccbo::objectives
