#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lutnet/tensor.hpp"

// Dense kernels for training and reference inference. Every function is pure
// apart from the explicitly mutable batch-norm running moments and optimiser
// state.
namespace lutnet::numerics {

// sign with sign(0) = +1.
inline double sign(double v) { return v >= 0.0 ? 1.0 : -1.0; }

// y[b,o] = alpha * sum_n w[o,n] x[b,n]
Tensor dense_forward(const Tensor& x, const Tensor& w, double alpha);

struct DenseGrads {
  Tensor dx;
  Tensor dw;
  double dalpha = 0.0;
};

DenseGrads dense_backward(const Tensor& x, const Tensor& w, double alpha,
                          const Tensor& dy);

Tensor sign_ste_forward(const Tensor& x);

// Hard-tanh straight-through estimator: dx = dy where |x| <= 1, else 0.
Tensor sign_ste_backward(const Tensor& x, const Tensor& dy);

// Per-feature batch normalisation. Activations are laid out [batch, F * S]
// where each feature owns S contiguous spatial positions (S = 1 for dense).
struct BatchNorm {
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<double> running_mean;
  std::vector<double> running_var;
  double eps = 1e-5;
  double momentum = 0.9;

  std::size_t features() const { return gamma.size(); }
  bool operator==(const BatchNorm&) const = default;
};

BatchNorm make_batchnorm(std::size_t features);

// Inference-mode affine map using the supplied moments.
Tensor batchnorm_forward(const Tensor& x, std::span<const double> mean,
                         std::span<const double> var,
                         std::span<const double> gamma,
                         std::span<const double> beta, double eps,
                         std::size_t spatial = 1);

struct BatchNormCache {
  Tensor xhat;
  std::vector<double> inv_std;
  std::size_t spatial = 1;
};

// Training mode: normalises with batch moments and folds them into the
// running moments with bn.momentum.
Tensor batchnorm_train_forward(const Tensor& x, BatchNorm& bn,
                               std::size_t spatial, BatchNormCache& cache);

struct BatchNormGrads {
  Tensor dx;
  std::vector<double> dgamma;
  std::vector<double> dbeta;
};

BatchNormGrads batchnorm_backward(const BatchNormCache& cache,
                                  std::span<const double> gamma,
                                  const Tensor& dy);

struct SoftmaxXent {
  double loss = 0.0;
  Tensor dlogits;
};

// Mean cross-entropy over the batch; dlogits = (softmax - onehot) / batch.
SoftmaxXent softmax_xent(const Tensor& logits, std::span<const int> labels);

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t step = 0;
};

// Bias-corrected Adam. Throws NumericError (leaving params and state
// untouched) when any gradient is non-finite.
void adam_step(std::span<double> params, std::span<const double> grads,
               AdamState& state, const AdamConfig& cfg);

}  // namespace lutnet::numerics
