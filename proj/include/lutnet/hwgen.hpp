#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lutnet/hardened.hpp"
#include "lutnet/model.hpp"

namespace lutnet::hw {

using NetId = std::uint32_t;

// Buses are little-endian lists of nets (index 0 is the LSB).
using Bus = std::vector<NetId>;

// Bits: +1 encodes as 1, -1 as 0.
inline std::uint8_t encode_bit(double v) { return v >= 0.0 ? 1 : 0; }
inline double decode_bit(std::uint8_t b) { return b ? 1.0 : -1.0; }

struct LutCell {
  std::string name;
  std::vector<NetId> inputs;         // input k drives vertex bit k
  std::vector<std::uint8_t> table;   // 2^K entries
  NetId output = 0;
};

// Unsigned sum of two buses.
struct AddCell {
  std::string name;
  Bus a;
  Bus b;
  Bus output;
};

// S = sum_b weights[b] * (2 * pop_b - nodes) + bias. Threshold mode drives
// one bit (flip ? S <= threshold : S >= threshold); affine mode drives S as
// a two's-complement bus.
struct ScaleThresholdCell {
  std::string name;
  std::vector<Bus> popcounts;
  std::int64_t nodes = 0;
  std::vector<std::int64_t> weights;
  std::int64_t bias = 0;
  std::int64_t threshold = 0;
  bool flip = false;
  bool affine = false;
  unsigned width = 0;   // signed datapath width
  Bus output;
};

using CellBody = std::variant<LutCell, AddCell, ScaleThresholdCell>;

enum class CellRole { Inference, Popcount, Threshold, Pool };

struct Cell {
  CellBody body;
  std::size_t module = 0;
  CellRole role = CellRole::Inference;
};

// One hardware block (network layer) becomes one Verilog module.
struct Module {
  std::string name;
  std::size_t layer = 0;
  Bus inputs;
  Bus outputs;
  bool scores = false;        // outputs are signed scores of score_width bits
  unsigned score_width = 0;
};

struct Netlist {
  std::size_t net_count = 0;
  std::vector<std::string> net_names;  // Verilog reference inside the driving module
  Bus input;                           // top-level port x
  Bus output;                          // top-level port scores
  unsigned score_width = 0;
  unsigned frac_bits = 8;
  std::vector<Module> modules;
  std::vector<Cell> cells;

  std::size_t output_scores() const { return score_width ? output.size() / score_width : 0; }
};

// Throws LoweringError on multiple drivers, undriven cell inputs or cycles.
void validate(const Netlist& netlist);

// Cell indices in a topological order.
std::vector<std::size_t> topological_order(const Netlist& netlist);

struct LowerOptions {
  FixedPointSpec fx;
  bool reduce_dont_cares = true;
};

Netlist lower(const HwModel& model, bool reduce_dont_cares = true);
// Accepts hardened networks and binarised ones (XNOR arrays of K=1 tables).
Netlist lower(const Network& net, const LowerOptions& options = {});

// Evaluates cells once per vector in a precomputed order.
class Simulator {
 public:
  explicit Simulator(const Netlist& netlist);
  std::vector<std::uint8_t> run(std::span<const std::uint8_t> input_bits);
  std::vector<std::int64_t> run_scores(std::span<const std::uint8_t> input_bits);

 private:
  const Netlist& netlist_;
  std::vector<std::size_t> order_;
  std::vector<std::uint8_t> values_;
};

std::vector<std::uint8_t> simulate(const Netlist& netlist, std::span<const std::uint8_t> input_bits);

// Two's-complement decoding of the output port into per-class scores.
std::vector<std::int64_t> decode_scores(const Netlist& netlist, std::span<const std::uint8_t> bits);

enum class VerilogStyle { Behavioral, Vendor };

VerilogStyle verilog_style_from_string(std::string_view text);

// File name -> contents: one file per layer module plus top.v.
std::map<std::string, std::string> emit_verilog(const Netlist& netlist, VerilogStyle style);

struct LogicalLut {
  std::vector<std::uint32_t> inputs;  // net identifiers; K_eff = inputs.size()
};

// Greedy largest-first pairing into dual-output 6-LUTs: two LUTs share one
// physical LUT iff neither has 6 inputs and together they use at most 5
// distinct inputs.
std::size_t pack_estimate(std::span<const LogicalLut> luts);

// Physical LUTs of a balanced adder tree over n one-bit inputs, counting a
// w-bit addition as w LUTs.
std::size_t popcount_cost(std::size_t n);

// Splits a table over more than 6 inputs into 6-input cofactor tables and
// 3-input multiplexers (Shannon expansion on the highest input).
struct SplitLut {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint8_t> table;
};
std::vector<SplitLut> shannon_split(std::span<const std::uint32_t> inputs,
                                    std::span<const std::uint8_t> table,
                                    std::uint32_t& next_net);

struct LayerArea {
  std::size_t layer = 0;
  unsigned planes = 0;
  std::size_t channels = 0;
  std::size_t positions = 0;
  unsigned k = 1;
  std::size_t nodes = 0;          // sum of node counts over channels (one position, one plane)
  double density = 1.0;           // kept weights / window weights
  std::vector<std::size_t> node_counts;      // per channel
  std::vector<std::size_t> k_histogram;      // K_eff 0..6 after reduction and splitting
  std::size_t logical_inference = 0;
  std::size_t inference = 0;      // physical
  std::size_t popcount = 0;
  std::size_t other = 0;
  std::size_t total() const { return inference + popcount + other; }
  std::size_t logical() const { return logical_inference + popcount + other; }
};

struct AreaReport {
  std::vector<LayerArea> layers;
  std::size_t inference = 0;
  std::size_t popcount = 0;
  std::size_t other = 0;
  std::size_t logical = 0;
  std::size_t total() const { return inference + popcount + other; }

  std::string to_csv() const;
  std::string to_table() const;
  // Columns layer,channel,nodes.
  std::string channels_csv() const;
};

AreaReport area_report(const Network& net, const FixedPointSpec& fx = {});

}  // namespace lutnet::hw
