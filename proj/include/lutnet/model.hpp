#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lutnet/numerics.hpp"
#include "lutnet/tensor.hpp"

namespace lutnet {

// Pipeline stage carried by every network; operations validate it.
enum class Stage { Real, Pruned, Binarised, Expanded, Hardened };

std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view text);
void require_stage(Stage actual, std::initializer_list<Stage> allowed,
                   std::string_view operation);

enum class LayerKind { Dense, Conv, BatchNorm, MaxPool, Softmax };

std::string_view to_string(LayerKind kind);
LayerKind layer_kind_from_string(std::string_view text);

struct ConvGeometry {
  std::size_t in_channels = 0;
  std::size_t in_height = 0;
  std::size_t in_width = 0;
  std::size_t kernel = 1;
  std::size_t stride = 1;

  std::size_t out_height() const { return (in_height - kernel) / stride + 1; }
  std::size_t out_width() const { return (in_width - kernel) / stride + 1; }
  std::size_t positions() const { return out_height() * out_width(); }
  std::size_t window() const { return in_channels * kernel * kernel; }
  std::size_t input_size() const { return in_channels * in_height * in_width; }
  bool operator==(const ConvGeometry&) const = default;
};

// Non-overlapping size x size max pooling (floor on ragged edges).
struct PoolGeometry {
  std::size_t channels = 0;
  std::size_t in_height = 0;
  std::size_t in_width = 0;
  std::size_t size = 2;

  std::size_t out_height() const { return in_height / size; }
  std::size_t out_width() const { return in_width / size; }
  std::size_t input_size() const { return channels * in_height * in_width; }
  std::size_t output_size() const { return channels * out_height() * out_width(); }
  bool operator==(const PoolGeometry&) const = default;
};

// One level of residual binarisation: signs are +-1 everywhere (pruned
// positions carry an inert +1 and are zeroed by the layer mask).
struct ResidualLevel {
  std::vector<double> signs;
  double gamma = 0.0;
  bool operator==(const ResidualLevel&) const = default;
};

// Folded batch-norm activation: output +1 iff (flip ? s <= tau : s >= tau).
struct NeuronThreshold {
  double tau = 0.0;
  bool flip = false;
  bool operator==(const NeuronThreshold&) const = default;
};

// A K-input LUT replacing one surviving XNOR. inputs[0] is the original
// connection; the rest index the same receptive window. Vertex index bit k is
// set iff input k+1 is +1.
struct LutNode {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint32_t> reconnected;           // subset of inputs that were pruned
  std::vector<std::vector<double>> coeffs;          // [plane][vertex]
  std::vector<std::vector<std::uint8_t>> masks;     // [plane][vertex], 1 encodes +1

  unsigned k() const { return static_cast<unsigned>(inputs.size()); }
  bool operator==(const LutNode&) const = default;
};

struct LutChannel {
  std::vector<LutNode> nodes;
  bool operator==(const LutChannel&) const = default;
};

struct LutLayer {
  unsigned k = 1;
  std::vector<LutChannel> channels;
  bool operator==(const LutLayer&) const = default;
};

// ceil(log2(n + 1)): bits needed to count up to n.
unsigned popcount_width(std::size_t n);

struct Layer {
  LayerKind kind = LayerKind::Dense;

  // Dense / conv. `inputs` is the receptive-window length (the dense input
  // width, or in_channels * kernel^2 for conv).
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  ConvGeometry conv;
  bool unrolled = false;
  Tensor weights;          // [outputs x inputs]
  Tensor phase1_weights;   // snapshot taken before pruning
  std::vector<std::uint8_t> mask;
  double alpha = 1.0;
  std::vector<ResidualLevel> levels;
  std::optional<LutLayer> lut;
  std::vector<NeuronThreshold> thresholds;

  // Batch norm.
  numerics::BatchNorm bn;
  std::size_t spatial = 1;

  // Max pool.
  PoolGeometry pool;

  bool is_compute() const {
    return kind == LayerKind::Dense || kind == LayerKind::Conv;
  }
  std::size_t positions() const {
    return kind == LayerKind::Conv ? conv.positions() : 1;
  }
  // Flattened activation sizes seen by the surrounding layers.
  std::size_t input_size() const;
  std::size_t output_size() const;
  std::size_t kept_weights() const;
  bool operator==(const Layer&) const = default;
};

struct Network {
  Stage stage = Stage::Real;
  unsigned activation_levels = 2;
  Shape input_shape;
  std::uint64_t seed = 0;
  std::vector<Layer> layers;

  std::size_t input_size() const { return shape_size(input_shape); }
  std::size_t num_classes() const;
  bool operator==(const Network&) const = default;
};

// Topology description, e.g. "dense:64:u,bn,dense:10:u,bn,softmax".
// Tokens: dense:<out>[:u], conv:<out>:<kernel>:<stride>[:u], bn,
// maxpool:<size>, softmax. A trailing ":u" marks the layer unrolled.
struct LayerSpec {
  LayerKind kind = LayerKind::Dense;
  std::size_t outputs = 0;
  std::size_t kernel = 1;
  std::size_t stride = 1;
  std::size_t pool = 2;
  bool unrolled = false;
};

std::vector<LayerSpec> parse_topology(std::string_view text);
std::string format_topology(const std::vector<LayerSpec>& specs);
std::vector<LayerSpec> preset_topology(std::string_view name);

// Builds a real-stage network with Glorot-uniform weights, alpha = mean|w|.
Network build_network(const Shape& input_shape, const std::vector<LayerSpec>& specs,
                      unsigned activation_levels, std::uint64_t seed);

// Structural consistency (shapes compose, stage-dependent data present).
void validate(const Network& net);

// Whether block output of compute/bn layer i is binarised by sign (false
// for the block feeding softmax).
bool has_sign_activation(const Network& net, std::size_t layer);

// Index of the batch-norm layer directly following compute layer i, if any.
std::optional<std::size_t> following_batchnorm(const Network& net, std::size_t layer);

// [batch, C*H*W] -> [batch * positions, window]; row b*P + p is the
// flattened receptive field of output position p of sample b.
Tensor im2col(const Tensor& x, const ConvGeometry& geom);

// Pre-activation scale of a compute layer, alpha * gamma_b per plane.
double level_scale(const Layer& layer, std::size_t plane);

NeuronThreshold fold_batchnorm(double mean, double var, double gamma,
                               double beta, double eps, std::size_t neuron = 0);
std::vector<NeuronThreshold> fold_batchnorm(const numerics::BatchNorm& bn);

// Inference forward passes (batch-norm in inference mode). Inputs are
// binarised by sign before the first layer.
Tensor forward_real(const Network& net, const Tensor& x);
Tensor forward_binary(const Network& net, const Tensor& x);

enum class LutMode { Interpolated, Hardened };

struct FixedPointSpec {
  unsigned frac_bits = 8;
  unsigned max_width = 48;
  bool operator==(const FixedPointSpec&) const = default;
};

// Hardened mode evaluates masks, folded thresholds and the quantised
// output scaling shared with the netlist; logits are score / 2^frac_bits.
Tensor forward_lut(const Network& net, const Tensor& x, LutMode mode,
                   const FixedPointSpec& fx = {});

std::vector<int> predict(const Tensor& logits);
double error_rate(const Tensor& logits, std::span<const int> labels);

}  // namespace lutnet
