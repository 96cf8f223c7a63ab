#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccbo/common.hpp"
#include "ccbo/feature_map.hpp"

namespace ccbo::share {

// Per-client ridge coefficients over the shared feature map.
struct WeightVector {
  int client_id{0};
  int iteration{0};
  Vec w;
};

// Ridge fit of the linear model phi(z)' w to mean_values on the point set S:
//   w = (Phi' Phi + lambda I)^-1 Phi' m
WeightVector fit_weights(const FeatureMap& map, const Mat& points, const Vec& mean_values,
                         double lambda, int client_id = 0, int iteration = 0);

double approx_mean(const FeatureMap& map, const WeightVector& w, const Vec& z);
Vec approx_mean_batch(const FeatureMap& map, const WeightVector& w, const Mat& points);

// Componentwise mean; all inputs must share J and iteration.
WeightVector aggregate_weights(const std::vector<WeightVector>& weights);

// Exact averaging of posterior-mean callables (Eq. of the exact-sharing mode).
std::function<double(const Vec&)> aggregate_exact(
    std::vector<std::function<double(const Vec&)>> means);

enum class CommArch { Server, Serverless };
enum class Payload { ExactGrid, Rff };

struct CommRecord {
  int iteration{0};
  int client_id{0};
  std::string direction;  // "up", "down" or "broadcast"
  std::int64_t floats{0};
  std::int64_t bits{0};
  CommArch mode{CommArch::Server};
  Payload payload{Payload::Rff};
};

// Append-only accounting of everything that crossed the (simulated) wire.
class CommLedger {
 public:
  explicit CommLedger(int bits_per_float = 64) : bits_per_float_(bits_per_float) {}

  // Charges one sharing round at `iteration` for the given clients.
  // Server mode: payload_floats up + payload_floats down per triggered client.
  // Serverless mode: payload_floats * (K-1) broadcast per triggered client.
  void record_round(int iteration, const std::vector<int>& triggered_clients,
                    int num_clients, CommArch mode, Payload payload, int payload_floats);

  std::int64_t total_bits() const { return total_bits_; }
  std::int64_t client_bits(int client_id) const;
  std::size_t round_count(int client_id) const;
  const std::vector<CommRecord>& records() const { return records_; }
  int bits_per_float() const { return bits_per_float_; }

 private:
  int bits_per_float_{64};
  std::int64_t total_bits_{0};
  std::vector<CommRecord> records_;
};

const char* to_string(CommArch arch);
const char* to_string(Payload payload);

}  // namespace ccbo::share
