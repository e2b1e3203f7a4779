#pragma once

#include <cstdint>
#include <vector>

#include "pelk/grid.hpp"
#include "pelk/tensor.hpp"

namespace pelk {

/// The stored parameters of a peripheral depthwise convolution: one compact
/// k'*k' filter per channel plus the grid that maps it onto the full k*k
/// kernel.
struct CompactKernel {
  int channels = 0;
  SharingGrid grid;
  Tensor weights;  // channels x k' x k'

  CompactKernel() = default;
  CompactKernel(SharingGrid g, Tensor w);
};

/// Per-stage additive input bias table, shared by every kernel in a stage.
struct PositionalEmbedding {
  int channels = 0;
  int k = 0;
  Tensor h;  // channels x k x k, finite

  PositionalEmbedding() = default;
  PositionalEmbedding(int channels, int k, Tensor h);
};

/// Expands a compact kernel to the full channels x k x k kernel:
/// out[c,x,y] = weights[c,a,b] with (a,b) = region_of(x,y).
Tensor expand(const CompactKernel& ck);

/// Adjoint of expand: sums a full-kernel gradient over each sharing region,
/// out[c,a,b] = sum of dW_full[c,x,y] over region (a,b). Accumulates in f64.
Tensor scatter_grad(const Tensor& dW_full, const SharingGrid& grid);

/// i.i.d. normal(mean, stddev) samples rejected outside [lo, hi].
/// Deterministic for a given seed.
Tensor init_trunc_normal(std::vector<int> dims, float mean, float stddev,
                         float lo, float hi, std::uint64_t seed);

/// Convention defaults: mean 0, stddev 0.02, truncation at +/-2 stddev.
Tensor init_trunc_normal(std::vector<int> dims, std::uint64_t seed);

/// Merges a parallel small-kernel branch into a large kernel by adding it
/// onto the central k_s x k_s window; with same zero padding the merged
/// kernel's convolution equals the sum of the two branch convolutions.
Tensor merge_reparam(const Tensor& large, const Tensor& small);

/// Per-channel constant contributed by a positional embedding:
/// bias[c] = sum_{i,j} W_full[c,i,j] * h[c,i,j]. This is the precomputed
/// inference form of the embedding term.
Tensor posembed_bias(const Tensor& W_full, const PositionalEmbedding& pe);

}  // namespace pelk
