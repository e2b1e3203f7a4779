#include "pelk/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pelk {

namespace {

constexpr char kMagic[4] = {'P', 'T', 'N', 'S'};
constexpr std::uint16_t kVersion = 1;

// This codebase targets little-endian hosts; values are written verbatim.
template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::ifstream& in, const std::string& path) {
  T value;
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) {
    throw std::runtime_error("ptns: truncated file: " + path);
  }
  return value;
}

}  // namespace

void write_ptns(const std::string& path, const Tensor& t) {
  if (t.ndim() < 1) {
    throw std::invalid_argument("write_ptns: empty tensor");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("ptns: cannot open for writing: " + path);
  }
  out.write(kMagic, 4);
  put<std::uint16_t>(out, kVersion);
  put<std::uint16_t>(out, static_cast<std::uint16_t>(t.ndim()));
  for (int i = 0; i < t.ndim(); ++i) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(t.dim(i)));
  }
  out.write(reinterpret_cast<const char*>(t.data()),
            static_cast<std::streamsize>(sizeof(float) * t.size()));
  if (!out) {
    throw std::runtime_error("ptns: write failed: " + path);
  }
}

Tensor read_ptns(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("ptns: cannot open: " + path);
  }
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("ptns: bad magic: " + path);
  }
  const auto version = take<std::uint16_t>(in, path);
  if (version != kVersion) {
    throw std::runtime_error("ptns: unsupported version " +
                             std::to_string(version) + ": " + path);
  }
  const auto ndim = take<std::uint16_t>(in, path);
  if (ndim == 0) {
    throw std::runtime_error("ptns: zero-rank tensor: " + path);
  }
  std::vector<int> dims(ndim);
  std::int64_t count = 1;
  for (auto& d : dims) {
    const auto v = take<std::uint32_t>(in, path);
    if (v == 0 || v > 0x7fffffffu) {
      throw std::runtime_error("ptns: invalid dimension: " + path);
    }
    d = static_cast<int>(v);
    count *= d;
    if (count > (std::int64_t{1} << 40)) {
      throw std::runtime_error("ptns: tensor too large: " + path);
    }
  }
  std::vector<float> data(static_cast<size_t>(count));
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(sizeof(float) * data.size()));
  if (!in) {
    throw std::runtime_error("ptns: truncated data: " + path);
  }
  return Tensor(std::move(dims), std::move(data));
}

Tensor read_csv_2d(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("csv: cannot open: " + path);
  }
  std::vector<float> data;
  int cols = -1;
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    int this_cols = 0;
    while (std::getline(ss, cell, ',')) {
      try {
        data.push_back(std::stof(cell));
      } catch (...) {
        throw std::runtime_error("csv: non-numeric cell '" + cell +
                                 "': " + path);
      }
      ++this_cols;
    }
    if (cols < 0) {
      cols = this_cols;
    } else if (cols != this_cols) {
      throw std::runtime_error("csv: ragged rows: " + path);
    }
    ++rows;
  }
  if (rows == 0 || cols <= 0) {
    throw std::runtime_error("csv: no data: " + path);
  }
  return Tensor({rows, cols}, std::move(data));
}

Tensor read_tensor(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return read_csv_2d(path);
  }
  return read_ptns(path);
}

}  // namespace pelk
