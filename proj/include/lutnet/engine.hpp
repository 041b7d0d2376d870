#pragma once

#include <cstdint>
#include <vector>

#include "lutnet/model.hpp"

// Layer-by-layer forward/backward over a sequential network, shared by the
// inference entry points in model.hpp and the training loops.
namespace lutnet::engine {

enum class ComputeMode {
  Real,     // weights * mask
  Binary,   // residual planes: alpha * sum_b gamma_b * (x . w_b)
  Lut,      // interpolated g on expanded unrolled layers, Binary elsewhere
  LutSign,  // sign(g) forward with a pass-through gradient
};

struct LayerTrace {
  Tensor input;                   // [batch, input_size]
  Tensor rows;                    // compute layers: im2col rows, or the input
  Tensor pre_sign;                // value fed to the sign activation, if any
  numerics::BatchNormCache bn;
  std::vector<Tensor> plane_sums; // binary/LUT compute: [rows x out] per plane
  std::vector<std::uint32_t> argmax;
};

struct Trace {
  std::vector<LayerTrace> layers;
};

struct LayerGrads {
  Tensor dweights;
  double dalpha = 0.0;
  std::vector<double> dgammas;  // residual level scales
  std::vector<double> dcoeffs;  // flattened channel/node/plane/vertex order
  std::vector<double> dbn_gamma;
  std::vector<double> dbn_beta;
};

struct Gradients {
  std::vector<LayerGrads> layers;
};

// training = true uses batch statistics in batch norm and updates the
// running moments; the trace (if non-null) records everything backward needs.
Tensor forward(Network& net, const Tensor& x, ComputeMode mode, bool training,
               Trace* trace);

// Inference-only overload.
Tensor forward(const Network& net, const Tensor& x, ComputeMode mode);

// Back-propagates dlogits through a trace recorded with training = true.
Gradients backward(const Network& net, const Trace& trace, const Tensor& dlogits,
                   ComputeMode mode);

// Flat views of a LUT layer's coefficients (channel, node, plane, vertex).
std::vector<double> gather_coeffs(const LutLayer& lut);
void scatter_coeffs(LutLayer& lut, std::span<const double> flat);

// Adjoint of im2col: scatters [batch * positions, window] rows back onto
// [batch, C*H*W], summing overlapping windows.
Tensor col2im(const Tensor& drows, const ConvGeometry& geom, std::size_t batch);

// Sign-binarised copy of x (sign(0) = +1).
Tensor binarise_input(const Tensor& x);

}  // namespace lutnet::engine
