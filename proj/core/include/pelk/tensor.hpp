#pragma once

#include <cstdint>
#include <vector>

namespace pelk {

/// Dense n-dimensional row-major f32 array. The last dimension is
/// contiguous; 3-D tensors are indexed (channel, row, col).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> dims);  // zero-filled
  Tensor(std::vector<int> dims, std::vector<float> data);

  const std::vector<int>& dims() const { return dims_; }
  int ndim() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_[static_cast<size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  float& operator[](std::int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](std::int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // 2-D access (row, col)
  float& at(int i, int j) {
    return data_[static_cast<size_t>(i) * dims_[1] + j];
  }
  float at(int i, int j) const {
    return data_[static_cast<size_t>(i) * dims_[1] + j];
  }

  // 3-D access (channel, row, col)
  float& at(int c, int i, int j) {
    return data_[(static_cast<size_t>(c) * dims_[1] + i) * dims_[2] + j];
  }
  float at(int c, int i, int j) const {
    return data_[(static_cast<size_t>(c) * dims_[1] + i) * dims_[2] + j];
  }

  bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<float> data_;
};

/// i.i.d. uniform samples on [lo, hi); deterministic for a given seed.
Tensor uniform_random(std::vector<int> dims, float lo, float hi,
                      std::uint64_t seed);

}  // namespace pelk
