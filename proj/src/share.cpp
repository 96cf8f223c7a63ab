#include "ccbo/share.hpp"

#include <utility>

namespace ccbo::share {

WeightVector fit_weights(const FeatureMap& map, const Mat& points, const Vec& mean_values,
                         double lambda, int client_id, int iteration) {
  if (points.rows() < 1) throw InputError("fit_weights: empty fit set");
  if (points.rows() != mean_values.size())
    throw InputError("fit_weights: point/value count mismatch");
  if (!(lambda > 0.0)) throw InputError("fit_weights: lambda must be positive");

  const Mat phi = featurize_batch(map, points);
  Mat normal = phi.transpose() * phi;
  normal.diagonal().array() += lambda;
  const Eigen::LDLT<Mat> ldlt(normal);
  if (ldlt.info() != Eigen::Success)
    throw NumericalError("fit_weights: ridge normal equations failed to factorize");
  WeightVector out;
  out.client_id = client_id;
  out.iteration = iteration;
  out.w = ldlt.solve(phi.transpose() * mean_values);
  return out;
}

double approx_mean(const FeatureMap& map, const WeightVector& w, const Vec& z) {
  if (w.w.size() != map.num_features())
    throw InputError("approx_mean: weight length does not match the feature map");
  return featurize(map, z).dot(w.w);
}

Vec approx_mean_batch(const FeatureMap& map, const WeightVector& w, const Mat& points) {
  if (w.w.size() != map.num_features())
    throw InputError("approx_mean_batch: weight length does not match the feature map");
  return featurize_batch(map, points) * w.w;
}

WeightVector aggregate_weights(const std::vector<WeightVector>& weights) {
  if (weights.empty()) throw InputError("aggregate_weights: no weights supplied");
  const auto J = weights.front().w.size();
  const int iteration = weights.front().iteration;
  Vec sum = Vec::Zero(J);
  for (const auto& wk : weights) {
    if (wk.w.size() != J) throw InputError("aggregate_weights: mixed feature counts");
    if (wk.iteration != iteration)
      throw InputError("aggregate_weights: mixed iterations");
    sum += wk.w;
  }
  WeightVector out;
  out.client_id = -1;
  out.iteration = iteration;
  out.w = sum / static_cast<double>(weights.size());
  return out;
}

std::function<double(const Vec&)> aggregate_exact(
    std::vector<std::function<double(const Vec&)>> means) {
  if (means.empty()) throw InputError("aggregate_exact: no mean functions supplied");
  return [fns = std::move(means)](const Vec& z) {
    double sum = 0.0;
    for (const auto& fn : fns) sum += fn(z);
    return sum / static_cast<double>(fns.size());
  };
}

void CommLedger::record_round(int iteration, const std::vector<int>& triggered_clients,
                              int num_clients, CommArch mode, Payload payload,
                              int payload_floats) {
  for (int client : triggered_clients) {
    if (client < 0 || client >= num_clients)
      throw InputError("record_round: triggered client outside [0, K)");
    if (mode == CommArch::Server) {
      for (const char* dir : {"up", "down"}) {
        CommRecord rec;
        rec.iteration = iteration;
        rec.client_id = client;
        rec.direction = dir;
        rec.floats = payload_floats;
        rec.bits = static_cast<std::int64_t>(payload_floats) * bits_per_float_;
        rec.mode = mode;
        rec.payload = payload;
        total_bits_ += rec.bits;
        records_.push_back(std::move(rec));
      }
    } else {
      CommRecord rec;
      rec.iteration = iteration;
      rec.client_id = client;
      rec.direction = "broadcast";
      rec.floats = static_cast<std::int64_t>(payload_floats) * (num_clients - 1);
      rec.bits = rec.floats * bits_per_float_;
      rec.mode = mode;
      rec.payload = payload;
      total_bits_ += rec.bits;
      records_.push_back(std::move(rec));
    }
  }
}

std::int64_t CommLedger::client_bits(int client_id) const {
  std::int64_t bits = 0;
  for (const auto& rec : records_)
    if (rec.client_id == client_id) bits += rec.bits;
  return bits;
}

std::size_t CommLedger::round_count(int client_id) const {
  std::size_t rounds = 0;
  for (const auto& rec : records_)
    if (rec.client_id == client_id && rec.direction != "down") ++rounds;
  return rounds;
}

const char* to_string(CommArch arch) {
  return arch == CommArch::Server ? "server" : "serverless";
}

const char* to_string(Payload payload) {
  return payload == Payload::ExactGrid ? "exact-grid" : "rff";
}

}  // namespace ccbo::share
