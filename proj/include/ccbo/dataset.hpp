#pragma once

#include <vector>

#include "ccbo/common.hpp"

namespace ccbo::gp {

// One (design, context, response) triplet in unit-scaled coordinates.
// Shifted heterogeneous objectives may push inputs slightly outside [0,1];
// only finiteness is required.
struct Observation {
  Vec x;     // design, length D_x
  Vec c;     // context, length D_c
  double y{0.0};
};

// Ordered per-client history. Insertion order is preserved so the iteration
// index of an observation is recoverable from its position.
class Dataset {
 public:
  Dataset() = default;
  Dataset(int dim_x, int dim_c, int client_id = 0)
      : dim_x_(dim_x), dim_c_(dim_c), client_id_(client_id) {
    if (dim_x < 1 || dim_c < 1) throw InputError("Dataset: dimensions must be >= 1");
  }

  void add(const Observation& obs) {
    if (obs.x.size() != dim_x_ || obs.c.size() != dim_c_)
      throw InputError("Dataset::add: observation dimensions do not match");
    if (!obs.x.allFinite() || !obs.c.allFinite() || !std::isfinite(obs.y))
      throw InputError("Dataset::add: non-finite observation");
    obs_.push_back(obs);
  }

  void add(const Vec& x, const Vec& c, double y) { add(Observation{x, c, y}); }

  std::size_t size() const { return obs_.size(); }
  bool empty() const { return obs_.empty(); }
  int dim_x() const { return dim_x_; }
  int dim_c() const { return dim_c_; }
  int dim() const { return dim_x_ + dim_c_; }
  int client_id() const { return client_id_; }
  const Observation& operator[](std::size_t i) const { return obs_[i]; }
  const std::vector<Observation>& observations() const { return obs_; }

  // n x (D_x + D_c) matrix of concatenated inputs z = [x | c], row per observation
  Mat inputs() const {
    Mat z(obs_.size(), dim());
    for (std::size_t i = 0; i < obs_.size(); ++i) {
      z.row(i).head(dim_x_) = obs_[i].x;
      z.row(i).tail(dim_c_) = obs_[i].c;
    }
    return z;
  }

  Vec responses() const {
    Vec y(obs_.size());
    for (std::size_t i = 0; i < obs_.size(); ++i) y[i] = obs_[i].y;
    return y;
  }

 private:
  int dim_x_{1};
  int dim_c_{1};
  int client_id_{0};
  std::vector<Observation> obs_;
};

}  // namespace ccbo::gp
