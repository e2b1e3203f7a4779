#include "pelk/tensor.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace pelk {

namespace {

std::int64_t checked_element_count(const std::vector<int>& dims) {
  if (dims.empty()) {
    throw std::invalid_argument("tensor: rank must be >= 1");
  }
  std::int64_t n = 1;
  for (int d : dims) {
    if (d <= 0) {
      throw std::invalid_argument("tensor: dimension must be positive, got " +
                                  std::to_string(d));
    }
    if (n > std::numeric_limits<std::int64_t>::max() / d) {
      throw std::invalid_argument("tensor: element count overflows");
    }
    n *= d;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> dims) : dims_(std::move(dims)) {
  data_.assign(static_cast<size_t>(checked_element_count(dims_)), 0.0f);
}

Tensor::Tensor(std::vector<int> dims, std::vector<float> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  if (checked_element_count(dims_) != static_cast<std::int64_t>(data_.size())) {
    throw std::invalid_argument("tensor: data length does not match dims");
  }
}

Tensor uniform_random(std::vector<int> dims, float lo, float hi,
                      std::uint64_t seed) {
  if (!(lo < hi)) {
    throw std::invalid_argument("uniform_random: requires lo < hi");
  }
  Tensor t(std::move(dims));
  std::mt19937_64 rng(seed);
  const double span = static_cast<double>(hi) - static_cast<double>(lo);
  for (std::int64_t i = 0; i < t.size(); ++i) {
    // 53-bit mantissa draw in [0, 1)
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53;
    t[i] = static_cast<float>(lo + span * u);
  }
  return t;
}

}  // namespace pelk
