#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lutnet/model.hpp"

// Run configuration: an INI-style file of [section] headers and key = value
// lines ('#' or ';' start comments). See docs/formats.md for the key list.
namespace lutnet::config {

struct RunConfig {
  // [model]
  std::string preset = "lfc-small";
  std::string topology;               // overrides the preset when non-empty
  Shape input_shape{1, 28, 28};
  unsigned activation_levels = 2;
  std::uint64_t seed = 1;

  // [data]
  std::string data_dir = "data/mnist_subset";
  std::string train_images = "train-images-idx3-ubyte";
  std::string train_labels = "train-labels-idx1-ubyte";
  std::string test_images = "t10k-images-idx3-ubyte";
  std::string test_labels = "t10k-labels-idx1-ubyte";
  std::size_t train_limit = 0;
  std::size_t test_limit = 0;

  // [train]
  std::size_t batch_size = 100;
  double lr = 1e-3;
  double lambda = 5e-7;
  std::size_t phase1_epochs = 200;
  std::size_t phase2_epochs = 50;
  std::size_t phase3_epochs = 200;
  double phase3_lr_scale = 0.1;

  // [prune] exactly one of theta / target_density
  std::optional<double> theta;
  std::optional<double> target_density = 0.3;
  double density_tol = 0.01;

  // [expand]
  unsigned k = 2;

  // [hw]
  FixedPointSpec fx;
  std::string verilog_style = "behavioral";
  bool reduce_dont_cares = true;
  std::size_t sim_vectors = 10000;

  // [output]
  std::string output_dir = "out";
};

RunConfig parse_config(std::string_view text, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

// Applies one "section.key=value" assignment.
void apply_override(RunConfig& cfg, std::string_view assignment);

// LUTNET_SEED, when set, replaces the configured seed.
void apply_environment(RunConfig& cfg);

void validate(const RunConfig& cfg);

std::vector<LayerSpec> topology(const RunConfig& cfg);

// Canonical text form; parse_config(to_text(c)) reproduces c.
std::string to_text(const RunConfig& cfg);

}  // namespace lutnet::config
