#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Lagrange interpolating extension of a K-input Boolean function:
//
//   g(x) = sum_{d in {-1,1}^K} c_d * prod_k (x_k - d_k)
//
// Coefficients are indexed by vertex: bit k of the index is (d_k + 1) / 2,
// so bit 0 corresponds to input 1.
namespace lutnet::expand {

inline std::size_t vertex_count(unsigned k) { return std::size_t{1} << k; }

// +-1 value of input `bit` at vertex index v.
inline double vertex_value(std::size_t v, unsigned bit) {
  return ((v >> bit) & 1u) ? 1.0 : -1.0;
}

std::size_t encode_vertex(std::span<const int> d);
std::vector<int> decode_vertex(std::size_t index, unsigned k);

double interp_eval(std::span<const double> coeffs, std::span<const double> x);

struct InterpGrads {
  std::vector<double> dcoeffs;  // dg/dc_d = prod_k (x_k - d_k)
  std::vector<double> dx;       // dg/dx_k = sum_d c_d prod_{j != k} (x_j - d_j)
};

InterpGrads interp_grads(std::span<const double> coeffs, std::span<const double> x);

// Closed forms at a vertex v of {-1,1}^K. Only the coefficient of the
// reflected vertex ~v contributes: g(v) = 2^K * prod(v) * c_{~v}.
inline double vertex_sign_product(std::size_t v, unsigned k) {
  const int ones = __builtin_popcountll(static_cast<unsigned long long>(v));
  return ((static_cast<int>(k) - ones) & 1) ? -1.0 : 1.0;
}

inline double interp_at_vertex(std::span<const double> coeffs, unsigned k,
                               std::size_t v) {
  const std::size_t reflected = (vertex_count(k) - 1) & ~v;
  return static_cast<double>(vertex_count(k)) * vertex_sign_product(v, k) *
         coeffs[reflected];
}

// dg/dx_k at vertex v: 2^(K-1) * prod_{j != k} v_j * (c_{r} + c_{r ^ bit k})
// with r the reflected vertex.
inline double interp_dx_at_vertex(std::span<const double> coeffs, unsigned k,
                                  std::size_t v, unsigned input) {
  const std::size_t reflected = (vertex_count(k) - 1) & ~v;
  const double others = vertex_sign_product(v, k) * vertex_value(v, input);
  return static_cast<double>(vertex_count(k) >> 1) * others *
         (coeffs[reflected] + coeffs[reflected ^ (std::size_t{1} << input)]);
}

}  // namespace lutnet::expand
