#include "ccbo/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace ccbo::policy {

double pt_value(const PtSchedule& schedule, int t) {
  if (t < 1) throw InputError("pt_value: iterations are 1-based");
  switch (schedule.kind) {
    case PtSchedule::Kind::InverseSqrt:
      if (t == 1) return 1.0;
      return std::min(1.0, schedule.coeff / std::sqrt(static_cast<double>(t)));
    case PtSchedule::Kind::Power:
      if (t == 1) return 1.0;
      return std::min(1.0, schedule.coeff * std::pow(static_cast<double>(t), -schedule.exponent));
    case PtSchedule::Kind::Constant:
      if (t == 1) return 1.0;
      return std::clamp(schedule.value, 0.0, 1.0);
    case PtSchedule::Kind::CustomTable:
      if (t > static_cast<int>(schedule.table.size())) return 0.0;
      return std::clamp(schedule.table[t - 1], 0.0, 1.0);
  }
  return 0.0;
}

}  // namespace ccbo::policy
