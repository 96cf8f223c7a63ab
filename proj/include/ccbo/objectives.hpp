#pragma once

#include <functional>
#include <string>

#include "ccbo/common.hpp"
#include "ccbo/rng.hpp"

namespace ccbo::objectives {

enum class Benchmark { Ackley, Levy, Hartmann };

// A benchmark variant "name D_c-D_x" on unit-scaled inputs u = (c, x).
// All variants are maximization problems; `negate` flips the raw appendix-form
// value and is on by default only for hartmann, whose raw form is the one
// benchmark here that is not already written with its maximum at 0.
struct BenchmarkSpec {
  Benchmark name{Benchmark::Ackley};
  int dim_c{1};
  int dim_x{1};
  bool negate{false};

  int dim() const { return dim_c + dim_x; }
  void validate() const;
};

BenchmarkSpec make_benchmark(Benchmark name, int dim_c, int dim_x);

// Parses selector strings like "ackley-2-1", "levy-1-3", "hartmann-2-2".
BenchmarkSpec parse_benchmark(const std::string& selector);

// Evaluates the rescaled benchmark at u = (c, x). Inputs may fall outside
// [0,1] (shifted heterogeneous clients); the formulas extend analytically and
// are never clamped.
double eval_base(const BenchmarkSpec& spec, const Vec& u);

// Per-client response function: a base evaluator plus the client's input
// shifts and calibrated noise level. Pure given (parameters, inputs, rng).
struct ClientObjective {
  std::function<double(const Vec& u)> base;  // u = (c, x), length dim_c + dim_x
  int dim_x{1};
  int dim_c{1};
  Vec shift_x;   // xi_x, length dim_x
  Vec shift_c;   // xi_c, length dim_c
  double noise_sigma{0.0};
  std::string label;

  double eval(const Vec& x, const Vec& c) const;          // noiseless f_k(x, c)
  double observe(const Vec& x, const Vec& c, Rng& rng) const;
};

ClientObjective make_client(const BenchmarkSpec& spec);

// Each shift component i.i.d. Uniform(-0.05, 0.05).
std::pair<Vec, Vec> sample_heterogeneity(int dim_x, int dim_c, Rng& rng);

// 0.1 * sample standard deviation of n noiseless evaluations at uniform
// random inputs over the unit cube.
double calibrate_noise(const ClientObjective& obj, Rng& rng, int n = 1000,
                       double fraction = 0.1);

}  // namespace ccbo::objectives
