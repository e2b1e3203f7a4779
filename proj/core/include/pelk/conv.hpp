#pragma once

#include <cstdint>
#include <vector>

#include "pelk/grid.hpp"
#include "pelk/kernel.hpp"
#include "pelk/tensor.hpp"

namespace pelk {

enum class ConvForm { dense, stripe, peripheral };

inline constexpr int kPartialNumDefault = 3;  // convolved fraction 3/8
inline constexpr int kPartialDenDefault = 8;

/// Shape and channel-split description of one depthwise convolution layer.
/// Stride is 1, padding is zero-filled "same", dilation is 1 throughout.
struct ConvSpec {
  ConvForm form = ConvForm::dense;
  int channels = 0;
  int k = 0;         // dense kernel size
  int stripe_k = 0;  // stripe long edge
  int stripe_n = 0;  // stripe short edge
  SharingGrid grid;  // peripheral sharing grid
  int partial_num = 1;  // convolved-channel fraction, floor(num*c/den)
  int partial_den = 1;

  int conv_channels() const;

  static ConvSpec dense_spec(int channels, int k);
  static ConvSpec stripe_spec(int channels, int K, int N);
  static ConvSpec peripheral_spec(int channels, SharingGrid grid,
                                  int partial_num = 1, int partial_den = 1);
};

/// Depthwise 2-D cross-correlation with same zero padding:
/// Y[c,y,x] = sum_{i,j} W[c,i,j] * X[c, y+i-r, x+j-r], taps outside the
/// input read zero. X is c x H x W, W is c x k x k (k odd, rectangular
/// kernels are accepted with odd sides). Accumulates in f64 per output.
Tensor dw_forward(const Tensor& X, const Tensor& W);

/// Positional-embedding convolution evaluated literally: the embedding is
/// added to every tap sample, including taps that fall in the zero padding,
/// so Y = dw_forward(X, W) + bias with bias[c] = sum W[c]*h[c] everywhere.
/// This is the definitional path; peripheral_forward uses the precomputed
/// bias instead.
Tensor dw_forward_posembed(const Tensor& X, const Tensor& W,
                           const PositionalEmbedding& pe);

struct DwGrads {
  Tensor dx;
  Tensor dw;
};

/// Exact gradients of <dY, dw_forward(X, W)> with respect to X and W,
/// accumulated in f64.
DwGrads dw_backward(const Tensor& X, const Tensor& W, const Tensor& dY);

/// Input-gradient half of dw_backward; the adjoint of dw_forward applied
/// to dY. Used where the weight gradient is not needed.
Tensor dw_backward_data(const Tensor& W, const Tensor& dY);

/// Peripheral convolution: expand the compact kernel through its sharing
/// grid and convolve densely; the optional embedding contributes its
/// precomputed per-channel bias.
Tensor peripheral_forward(const Tensor& X, const CompactKernel& ck,
                          const PositionalEmbedding* pe = nullptr);

struct PeripheralGrads {
  Tensor dx;
  Tensor dw_compact;
  Tensor dh;  // empty when no embedding was given
};

/// Chain rule through expansion and the embedding term:
/// dw_compact = scatter of the full-kernel gradient (including the
/// embedding path), dh[c,i,j] = W_full[c,i,j] * sum(dY[c]).
PeripheralGrads peripheral_backward(const Tensor& X, const CompactKernel& ck,
                                    const PositionalEmbedding* pe,
                                    const Tensor& dY);

/// Sum of two same-padded rectangular depthwise branches:
/// W_v is c x K x N, W_h is c x N x K.
Tensor stripe_forward(const Tensor& X, const Tensor& W_v, const Tensor& W_h);

struct StripeGrads {
  Tensor dx;
  Tensor dw_v;
  Tensor dw_h;
};

StripeGrads stripe_backward(const Tensor& X, const Tensor& W_v,
                            const Tensor& W_h, const Tensor& dY);

/// Channel-split execution: channels [0, g) go through the peripheral
/// convolution, channels [g, c) are copied through unchanged, g =
/// floor(partial * c). Channel order is preserved.
Tensor partial_forward(const Tensor& X, const ConvSpec& spec,
                       const CompactKernel& ck,
                       const PositionalEmbedding* pe = nullptr);

// Reference paths: same operators with f64 outputs (no final f32 rounding).
// These back the finite-difference gradcheck driver.
std::vector<double> dw_forward_ref(const Tensor& X, const Tensor& W);
std::vector<double> dw_forward_posembed_ref(const Tensor& X, const Tensor& W,
                                            const PositionalEmbedding& pe);
std::vector<double> stripe_forward_ref(const Tensor& X, const Tensor& W_v,
                                       const Tensor& W_h);

}  // namespace pelk
