#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lutnet/model.hpp"

namespace lutnet {

// Integer view of a binarised or hardened network: per channel a list of
// truth-table nodes per plane, popcounts and one quantised scale/threshold.
// This is the single source of fixed-point semantics for both the hardened
// reference model and the netlist lowering.
//
// Per channel, with pop_b the popcount of plane b over n nodes:
//   S = sum_b plane_weights[b] * (2 * pop_b - n) + bias
// Hidden blocks emit one bit: flip ? S <= threshold : S >= threshold.
// The output block emits S as a signed score in units of 2^-frac_bits.
struct HwNode {
  std::vector<std::uint32_t> inputs;              // window indices
  std::vector<std::vector<std::uint8_t>> tables;  // [plane][vertex]
};

struct HwQuant {
  std::vector<std::int64_t> plane_weights;
  std::int64_t bias = 0;
  std::int64_t threshold = 0;
  bool flip = false;
};

struct HwChannel {
  std::vector<HwNode> nodes;
  HwQuant quant;
};

enum class HwBlockKind { Compute, MaxPool };

struct HwBlock {
  HwBlockKind kind = HwBlockKind::Compute;
  std::size_t layer = 0;     // index of the originating network layer
  bool output = false;       // affine score output instead of threshold
  bool is_conv = false;
  bool lut = false;          // expanded LUT layer (vs derived XNOR array)
  ConvGeometry conv;
  PoolGeometry pool;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t window = 0;
  unsigned planes = 1;
  unsigned width = 0;        // signed datapath width of S
  std::vector<HwChannel> channels;

  std::size_t positions() const { return is_conv ? conv.positions() : 1; }
  // Input bit feeding window index j at output position p.
  std::size_t input_index(std::size_t position, std::size_t j) const;
};

struct HwModel {
  std::size_t input_size = 0;
  unsigned frac_bits = 8;
  std::vector<HwBlock> blocks;

  std::size_t output_size() const { return blocks.empty() ? 0 : blocks.back().output_size; }
  // Width of each signed output score.
  unsigned output_width() const { return blocks.empty() ? 0 : blocks.back().width; }
};

// Accepts binarised networks (every compute layer becomes an XNOR array of
// K=1 buffer/inverter tables) and hardened networks (expanded layers use
// their masks). Throws LoweringError when a datapath needs more than
// fx.max_width bits.
HwModel build_hw_model(const Network& net, const FixedPointSpec& fx);

// Bit-level reference evaluation; returns the output block's scores.
std::vector<std::int64_t> evaluate_hw_model(const HwModel& hw,
                                            std::span<const std::uint8_t> input_bits);

// Bits needed for a two's-complement value in [-magnitude - 1, magnitude].
unsigned signed_width(std::int64_t magnitude);

}  // namespace lutnet
