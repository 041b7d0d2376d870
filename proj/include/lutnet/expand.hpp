#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lutnet/interp.hpp"
#include "lutnet/model.hpp"
#include "lutnet/rng.hpp"

namespace lutnet::expand {

// Coefficients (one plane) whose interpolation equals
//   h(x) = weights[0] * x_1 + sum_{q>0} weights[q] * x_{q+1}
// at every vertex. weights.size() == k.
std::vector<double> init_coeffs(unsigned k, std::span<const double> weights);

// Truth table of sign(g) at each vertex; 1 encodes +1, sign(0) = +1.
std::vector<std::uint8_t> harden_masks(std::span<const double> coeffs, unsigned k);

struct ReducedTable {
  std::vector<unsigned> inputs;      // surviving input positions, ascending
  std::vector<std::uint8_t> table;   // over the surviving inputs, same bit order
};

ReducedTable detect_dont_cares(std::span<const std::uint8_t> table, unsigned k);

struct NodePlan {
  std::vector<std::uint32_t> inputs;       // inputs[0] is the original connection
  std::vector<std::uint32_t> reconnected;  // drawn inputs whose weight was pruned
};

// One plan per surviving connection of a channel. kept[j] says whether window
// index j survived pruning. Extra inputs are drawn without replacement from
// the window, excluding the node's own connection.
std::vector<NodePlan> select_inputs(std::size_t window, std::span<const std::uint32_t> surviving,
                                    std::span<const std::uint8_t> kept, unsigned k, Rng& rng,
                                    std::size_t layer = 0);

// Binarised -> expanded. Every surviving connection of an unrolled layer
// becomes a K-input node; channel (l, c) draws from derive_seed(seed, l, c).
Network expand_network(const Network& net, unsigned k, std::uint64_t seed);

// Expanded -> hardened: masks from the current coefficients and folded
// batch-norm thresholds for every hidden compute block.
Network harden(const Network& net);

}  // namespace lutnet::expand
