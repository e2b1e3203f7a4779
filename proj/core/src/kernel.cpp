#include "pelk/kernel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pelk {

namespace {

void require_3d(const Tensor& t, const char* what) {
  if (t.ndim() != 3) {
    throw std::invalid_argument(std::string(what) + ": expected a 3-D tensor");
  }
}

}  // namespace

CompactKernel::CompactKernel(SharingGrid g, Tensor w) : grid(std::move(g)) {
  require_3d(w, "CompactKernel");
  if (w.dim(1) != grid.k_prime || w.dim(2) != grid.k_prime) {
    throw std::invalid_argument("CompactKernel: weights must be c x k' x k'");
  }
  channels = w.dim(0);
  weights = std::move(w);
}

PositionalEmbedding::PositionalEmbedding(int c, int kernel, Tensor table)
    : channels(c), k(kernel) {
  require_3d(table, "PositionalEmbedding");
  if (table.dim(0) != c || table.dim(1) != kernel || table.dim(2) != kernel) {
    throw std::invalid_argument("PositionalEmbedding: table must be c x k x k");
  }
  for (std::int64_t i = 0; i < table.size(); ++i) {
    if (!std::isfinite(table[i])) {
      throw std::invalid_argument(
          "PositionalEmbedding: table contains non-finite values");
    }
  }
  h = std::move(table);
}

Tensor expand(const CompactKernel& ck) {
  const RegionPartition part = partition(ck.grid);
  const int k = ck.grid.k;
  const int kp = ck.grid.k_prime;
  Tensor out({ck.channels, k, k});
  for (int c = 0; c < ck.channels; ++c) {
    const float* w = ck.weights.data() +
                     static_cast<std::int64_t>(c) * kp * kp;
    float* o = out.data() + static_cast<std::int64_t>(c) * k * k;
    for (int x = 0; x < k; ++x) {
      const int a = part.cell_of[static_cast<size_t>(x)];
      for (int y = 0; y < k; ++y) {
        o[static_cast<std::int64_t>(x) * k + y] =
            w[static_cast<std::int64_t>(a) * kp +
              part.cell_of[static_cast<size_t>(y)]];
      }
    }
  }
  return out;
}

Tensor scatter_grad(const Tensor& dW_full, const SharingGrid& grid) {
  require_3d(dW_full, "scatter_grad");
  if (dW_full.dim(1) != grid.k || dW_full.dim(2) != grid.k) {
    throw std::invalid_argument("scatter_grad: gradient must be c x k x k");
  }
  const RegionPartition part = partition(grid);
  const int channels = dW_full.dim(0);
  const int k = grid.k;
  const int kp = grid.k_prime;
  Tensor out({channels, kp, kp});
  std::vector<double> acc(static_cast<size_t>(kp) * kp);
  for (int c = 0; c < channels; ++c) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const float* g = dW_full.data() + static_cast<std::int64_t>(c) * k * k;
    for (int x = 0; x < k; ++x) {
      const int a = part.cell_of[static_cast<size_t>(x)];
      for (int y = 0; y < k; ++y) {
        acc[static_cast<size_t>(a) * kp +
            part.cell_of[static_cast<size_t>(y)]] +=
            g[static_cast<std::int64_t>(x) * k + y];
      }
    }
    float* o = out.data() + static_cast<std::int64_t>(c) * kp * kp;
    for (size_t i = 0; i < acc.size(); ++i) {
      o[i] = static_cast<float>(acc[i]);
    }
  }
  return out;
}

Tensor init_trunc_normal(std::vector<int> dims, float mean, float stddev,
                         float lo, float hi, std::uint64_t seed) {
  if (!(stddev > 0.0f)) {
    throw std::invalid_argument("init_trunc_normal: stddev must be positive");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("init_trunc_normal: requires lo < hi");
  }
  Tensor t(std::move(dims));
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (std::int64_t i = 0; i < t.size(); ++i) {
    int tries = 0;
    for (;;) {
      const double u1 = 1.0 - unit();  // (0, 1]
      const double u2 = unit();
      const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
      const float sample = static_cast<float>(mean + stddev * z);
      if (sample >= lo && sample <= hi) {
        t[i] = sample;
        break;
      }
      if (++tries > 1000000) {
        throw std::runtime_error(
            "init_trunc_normal: truncation interval carries too little mass");
      }
    }
  }
  return t;
}

Tensor init_trunc_normal(std::vector<int> dims, std::uint64_t seed) {
  constexpr float kStd = 0.02f;
  return init_trunc_normal(std::move(dims), 0.0f, kStd, -2.0f * kStd,
                           2.0f * kStd, seed);
}

Tensor merge_reparam(const Tensor& large, const Tensor& small) {
  require_3d(large, "merge_reparam");
  require_3d(small, "merge_reparam");
  const int channels = large.dim(0);
  const int big = large.dim(1);
  const int sml = small.dim(1);
  if (large.dim(2) != big || small.dim(2) != sml) {
    throw std::invalid_argument("merge_reparam: kernels must be square");
  }
  if (small.dim(0) != channels) {
    throw std::invalid_argument("merge_reparam: channel counts differ");
  }
  if (big % 2 == 0 || sml % 2 == 0) {
    throw std::invalid_argument("merge_reparam: kernel sizes must be odd");
  }
  if (sml > big) {
    throw std::invalid_argument(
        "merge_reparam: small kernel exceeds the large one");
  }
  Tensor out = large;
  const int off = (big - sml) / 2;
  for (int c = 0; c < channels; ++c) {
    for (int i = 0; i < sml; ++i) {
      for (int j = 0; j < sml; ++j) {
        out.at(c, off + i, off + j) += small.at(c, i, j);
      }
    }
  }
  return out;
}

Tensor posembed_bias(const Tensor& W_full, const PositionalEmbedding& pe) {
  require_3d(W_full, "posembed_bias");
  if (!W_full.same_shape(pe.h)) {
    throw std::invalid_argument(
        "posembed_bias: kernel and embedding shapes differ");
  }
  const int channels = W_full.dim(0);
  const std::int64_t per_channel =
      static_cast<std::int64_t>(W_full.dim(1)) * W_full.dim(2);
  Tensor bias({channels});
  for (int c = 0; c < channels; ++c) {
    const float* w = W_full.data() + c * per_channel;
    const float* h = pe.h.data() + c * per_channel;
    double acc = 0.0;
    for (std::int64_t i = 0; i < per_channel; ++i) {
      acc += static_cast<double>(w[i]) * static_cast<double>(h[i]);
    }
    bias[c] = static_cast<float>(acc);
  }
  return bias;
}

}  // namespace pelk
