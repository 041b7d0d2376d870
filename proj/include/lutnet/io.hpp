#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lutnet/model.hpp"
#include "lutnet/training.hpp"

namespace lutnet::io {

// Raw IDX array: big-endian header (two zero bytes, type code, rank, then one
// 32-bit extent per axis) followed by the payload. Only unsigned bytes (0x08)
// are supported.
struct IdxArray {
  std::uint8_t type = 0x08;
  Shape dims;
  std::vector<std::uint8_t> data;
};

IdxArray parse_idx(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_idx(const IdxArray& array);

// Images (magic 0x00000803) scaled to [-1, 1] via x / 127.5 - 1.
Tensor load_idx_images(const std::string& path);
// Labels (magic 0x00000801).
std::vector<int> load_idx_labels(const std::string& path);

// Loads and pairs images with labels; limit = 0 keeps every sample.
training::Dataset load_idx_dataset(const std::string& images, const std::string& labels,
                                   std::size_t limit = 0);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

constexpr int kSchemaVersion = 1;

struct Checkpoint {
  Network net;
  std::vector<std::pair<std::string, training::TrainLog>> logs;
  bool operator==(const Checkpoint&) const = default;
};

std::string checkpoint_to_json(const Checkpoint& ckpt);
// Throws SchemaVersionError for unknown versions and FormatError otherwise.
Checkpoint checkpoint_from_json(std::string_view text);

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace lutnet::io
