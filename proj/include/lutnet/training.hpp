#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lutnet/engine.hpp"
#include "lutnet/error.hpp"
#include "lutnet/model.hpp"

namespace lutnet::training {

struct Dataset {
  Tensor images;            // [N, ...]; rows are flattened samples
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
};

struct PhaseConfig {
  std::size_t epochs = 1;
  std::size_t batch_size = 100;
  double lr = 1e-3;
  double lambda = 5e-7;     // phase 1 only
  std::uint64_t seed = 0;
  numerics::AdamConfig adam;  // lr is taken from `lr`
};

struct EpochRecord {
  std::size_t epoch = 0;
  double loss = 0.0;
  double err = 0.0;    // training error rate in percent
  double omega = 0.0;
  bool operator==(const EpochRecord&) const = default;
};

struct TrainLog {
  std::vector<EpochRecord> epochs;
  // Columns epoch,loss,err,omega.
  std::string to_csv() const;
  bool operator==(const TrainLog&) const = default;
};

struct PhaseResult {
  Network net;
  TrainLog log;
};

// Thrown when the loss or a gradient becomes non-finite; carries the network
// as it was at the start of the failing epoch.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, Network last_good, std::size_t epoch)
      : NumericError(what), last_good_(std::move(last_good)), epoch_(epoch) {}
  const Network& last_good() const { return last_good_; }
  std::size_t epoch() const { return epoch_; }

 private:
  Network last_good_;
  std::size_t epoch_;
};

struct Regulariser {
  double omega = 0.0;
  std::vector<Tensor> grads;  // per layer; empty for layers not regularised
};

// Omega = lambda * sqrt(sum of squared weights over unrolled layers).
Regulariser l2_group_regulariser(const Network& net, double lambda);

// Real weights, alpha and batch norm; loss includes Omega.
PhaseResult run_phase1(const Network& net, const Dataset& data, const PhaseConfig& cfg);

// Binarised forward with pass-through weight gradients; residual levels are
// recomputed after every step and pruned weights stay zero.
PhaseResult run_phase2_retrain(const Network& net, const Dataset& data, const PhaseConfig& cfg);

// sign(g) forward on expanded layers; trains coefficients, level scales and
// batch norm. Other compute layers continue as in phase 2.
PhaseResult run_phase3_retrain(const Network& net, const Dataset& data, const PhaseConfig& cfg);

// Error rate in percent under the given compute mode (batch norm in
// inference mode).
double evaluate(const Network& net, const Dataset& data, engine::ComputeMode mode);

// Rows [first, first + count) of a dataset, flattened to [count, D].
Tensor batch_rows(const Dataset& data, std::span<const std::size_t> order, std::size_t first,
                  std::size_t count);

}  // namespace lutnet::training
