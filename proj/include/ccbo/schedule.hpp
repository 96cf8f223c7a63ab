#pragma once

#include <vector>

#include "ccbo/common.hpp"

namespace ccbo::policy {

// Switching-probability schedule. The named kinds pin p_1 = 1 (the algorithm
// always starts collaboratively); a custom table is taken verbatim and serves
// as the escape hatch for gate-off runs and tests.
struct PtSchedule {
  enum class Kind { InverseSqrt, Power, Constant, CustomTable };
  Kind kind{Kind::InverseSqrt};
  double exponent{0.5};        // Power: p_t = min(1, coeff * t^-exponent)
  double coeff{1.0};
  double value{1.0};           // Constant
  std::vector<double> table;   // CustomTable, table[t-1]; past the end -> 0

  static PtSchedule inverse_sqrt(double coeff = 1.0) {
    PtSchedule s;
    s.kind = Kind::InverseSqrt;
    s.coeff = coeff;
    return s;
  }
  static PtSchedule power(double exponent, double coeff = 1.0) {
    PtSchedule s;
    s.kind = Kind::Power;
    s.exponent = exponent;
    s.coeff = coeff;
    return s;
  }
  static PtSchedule constant(double value) {
    PtSchedule s;
    s.kind = Kind::Constant;
    s.value = value;
    return s;
  }
  static PtSchedule custom(std::vector<double> table) {
    PtSchedule s;
    s.kind = Kind::CustomTable;
    s.table = std::move(table);
    return s;
  }
  static PtSchedule never() { return custom({}); }
};

double pt_value(const PtSchedule& schedule, int t);

}  // namespace ccbo::policy
