#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lutnet/model.hpp"

namespace lutnet::prune {

struct LayerDensity {
  std::size_t layer = 0;
  std::size_t total = 0;
  std::size_t nonzero = 0;
  double density() const {
    return total ? static_cast<double>(nonzero) / static_cast<double>(total) : 0.0;
  }
};

// Density over the unrolled (prunable) layers.
struct DensityReport {
  double theta = 0.0;
  std::vector<LayerDensity> layers;
  std::size_t total = 0;
  std::size_t nonzero = 0;

  double density() const {
    return total ? static_cast<double>(nonzero) / static_cast<double>(total) : 0.0;
  }
  // Columns layer,total,nonzero,density,theta; a final row "all" aggregates.
  std::string to_csv() const;
};

DensityReport density_report(const Network& net, double theta);

struct PruneResult {
  Network net;
  DensityReport report;
};

// Keeps |w| > theta on unrolled layers; snapshots the pre-pruning weights
// into phase1_weights the first time a network is pruned.
PruneResult prune_threshold(const Network& net, double theta);

struct ThetaSolution {
  double theta = 0.0;
  double density = 0.0;
  bool within_tolerance = true;
  std::string warning;
};

// Order-statistic threshold on a flat list of magnitudes.
ThetaSolution solve_theta(std::span<const double> magnitudes, double target, double tol = 0.0);
ThetaSolution solve_theta_for_density(const Network& net, double target, double tol = 0.0);

struct Residual {
  std::vector<ResidualLevel> levels;
  std::vector<double> residual;  // eps_{B+1}
};

// Greedy residual binarisation over the positions with mask != 0; masked
// positions carry +1 signs and zero residual.
Residual residual_binarise(std::span<const double> weights, std::span<const std::uint8_t> mask,
                           unsigned levels);

// Recomputes one layer's levels from its current weights.
void refresh_levels(Layer& layer, unsigned levels);

// Pruned -> binarised: residual levels on every compute layer.
Network binarise_network(const Network& net);

}  // namespace lutnet::prune
