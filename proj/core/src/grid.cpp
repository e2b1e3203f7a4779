#include "pelk/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace pelk {

namespace {

// Fills full/k/k_prime from a validated half list.
void finish_grid(SharingGrid& g) {
  const size_t n = g.half.size();
  g.k_prime = static_cast<int>(2 * n - 1);
  g.full.assign(g.half.begin(), g.half.end());
  for (size_t i = n - 1; i-- > 0;) {
    g.full.push_back(g.half[i]);
  }
  g.k = std::accumulate(g.full.begin(), g.full.end(), 0);
}

int derived_center_radius(const std::vector<int>& half) {
  if (half.back() != 1) {
    return -1;
  }
  int run = 0;
  for (auto it = half.rbegin(); it != half.rend() && *it == 1; ++it) {
    ++run;
  }
  return run - 1;
}

}  // namespace

SharingGrid build_grid(int k, int r_c, int m) {
  if (k < 1 || k % 2 == 0) {
    throw std::invalid_argument("build_grid: k must be odd and positive, got " +
                                std::to_string(k));
  }
  if (r_c < 0) {
    throw std::invalid_argument("build_grid: r_c must be non-negative");
  }
  if (m < 2) {
    throw std::invalid_argument("build_grid: base m must be >= 2");
  }
  if (k < 2 * r_c + 1) {
    throw std::invalid_argument("build_grid: k=" + std::to_string(k) +
                                " too small for central radius " +
                                std::to_string(r_c));
  }

  const int budget = (k - 1) / 2;  // kernel cells per side, center excluded
  std::vector<int> side;           // center outward
  int sum = 0;
  for (int i = 0; i < r_c; ++i) {
    side.push_back(1);
    sum += 1;
  }
  for (long long power = m; sum + power <= budget; power *= m) {
    side.push_back(static_cast<int>(power));
    sum += static_cast<int>(power);
  }
  if (sum < budget) {
    side.push_back(budget - sum);
  }

  SharingGrid g;
  g.r_c = r_c;
  g.m = m;
  g.half.assign(side.rbegin(), side.rend());
  g.half.push_back(1);  // center cell
  finish_grid(g);
  return g;
}

SharingGrid build_custom_grid(const std::vector<int>& half) {
  if (half.empty()) {
    throw std::invalid_argument("build_custom_grid: half schedule is empty");
  }
  for (int v : half) {
    if (v < 1) {
      throw std::invalid_argument(
          "build_custom_grid: elements must be >= 1, got " + std::to_string(v));
    }
  }
  if (half.back() % 2 == 0) {
    throw std::invalid_argument(
        "build_custom_grid: center cell must be odd (even k is unsupported)");
  }

  SharingGrid g;
  g.half = half;
  g.r_c = derived_center_radius(half);
  g.m = 0;
  finish_grid(g);
  return g;
}

RegionPartition partition(const SharingGrid& grid) {
  if (grid.k_prime < 1 ||
      grid.full.size() != static_cast<size_t>(grid.k_prime) ||
      std::accumulate(grid.full.begin(), grid.full.end(), 0) != grid.k) {
    throw std::invalid_argument("partition: malformed sharing grid");
  }
  RegionPartition p;
  p.k = grid.k;
  p.k_prime = grid.k_prime;
  p.offsets.resize(static_cast<size_t>(grid.k_prime) + 1);
  p.offsets[0] = 0;
  for (int a = 0; a < grid.k_prime; ++a) {
    p.offsets[static_cast<size_t>(a) + 1] =
        p.offsets[static_cast<size_t>(a)] + grid.full[static_cast<size_t>(a)];
  }
  p.cell_of.resize(static_cast<size_t>(grid.k));
  for (int a = 0; a < grid.k_prime; ++a) {
    for (int x = p.offsets[static_cast<size_t>(a)];
         x < p.offsets[static_cast<size_t>(a) + 1]; ++x) {
      p.cell_of[static_cast<size_t>(x)] = a;
    }
  }
  return p;
}

double param_ratio(const SharingGrid& grid) {
  const double kp = grid.k_prime;
  const double k = grid.k;
  return (kp * kp) / (k * k);
}

double central_ratio(const SharingGrid& grid) {
  if (grid.r_c < 0) {
    throw std::invalid_argument(
        "central_ratio: grid has no unshared central region");
  }
  const double c = 2 * grid.r_c + 1;
  const double k = grid.k;
  return (c * c) / (k * k);
}

std::string grid_to_json(const SharingGrid& grid) {
  nlohmann::json j;
  j["k"] = grid.k;
  j["k_prime"] = grid.k_prime;
  j["half"] = grid.half;
  j["r_c"] = grid.r_c;
  j["m"] = grid.m;
  return j.dump();
}

SharingGrid grid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("grid_from_json: ") + e.what());
  }
  if (!j.contains("half")) {
    throw std::invalid_argument("grid_from_json: missing field 'half'");
  }
  SharingGrid g = build_custom_grid(j.at("half").get<std::vector<int>>());
  if (j.contains("k") && j.at("k").get<int>() != g.k) {
    throw std::invalid_argument("grid_from_json: k does not match half");
  }
  if (j.contains("k_prime") && j.at("k_prime").get<int>() != g.k_prime) {
    throw std::invalid_argument("grid_from_json: k_prime does not match half");
  }
  if (j.contains("r_c")) {
    g.r_c = j.at("r_c").get<int>();
  }
  if (j.contains("m")) {
    g.m = j.at("m").get<int>();
  }
  return g;
}

}  // namespace pelk
