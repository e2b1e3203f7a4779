#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pelk {

/// Sharing grid: a symmetric integer partition schedule that maps the k*k
/// positions of a full convolution kernel onto a compact k'*k' parameter
/// grid. Peripheral positions share one stored parameter per region; the
/// central (2*r_c+1)^2 positions stay unshared.
///
/// `half` lists the per-side region sizes outermost-to-center; the last
/// element is the center cell. `full` is its axisymmetric expansion, a
/// palindrome of length k_prime that sums to k.
struct SharingGrid {
  int k = 0;
  int k_prime = 0;
  std::vector<int> half;
  std::vector<int> full;
  int r_c = 0;  // central fine-grained radius; -1 if the center cell is shared
  int m = 0;    // exponential base; 0 for custom (non-schedule) grids
};

/// Builds the exponential sharing grid for a k*k kernel: per side, r_c
/// unshared cells next to the center, then region sizes m^1, m^2, ... while
/// the running per-side sum plus the next power stays within (k-1)/2, then
/// one remainder cell absorbing whatever is left. The remainder cell may be
/// smaller than the preceding power (e.g. k=37, r_c=2 gives per-side
/// [1,1,2,4,8,2]); every other peripheral cell is an exact power of m.
///
/// Throws std::invalid_argument for even or non-positive k, r_c < 0,
/// k < 2*r_c+1, or m < 2.
SharingGrid build_grid(int k, int r_c, int m = 2);

/// Builds a grid directly from a half schedule (outermost-to-center,
/// including the center cell). Only symmetry and tiling are enforced; the
/// central-region and power-of-m structure of build_grid is not. r_c is
/// derived from the run of trailing ones (-1 when the center cell is
/// shared) and m is recorded as 0.
///
/// Throws std::invalid_argument for an empty list, a non-positive element,
/// or an even center cell (which would produce an even k).
SharingGrid build_custom_grid(const std::vector<int>& half);

/// Region partition induced by a grid: every kernel position (x, y) in
/// [0,k)^2 belongs to exactly one region (a, b) in [0,k')^2, and region
/// (a, b) owns the rectangle [offset(a), offset(a+1)) x [offset(b),
/// offset(b+1)) of full[a]*full[b] positions.
struct RegionPartition {
  int k = 0;
  int k_prime = 0;
  std::vector<int> cell_of;  // size k: per-axis coordinate -> cell index
  std::vector<int> offsets;  // size k_prime+1: cumulative sums of full

  std::pair<int, int> region_of(int x, int y) const {
    return {cell_of[static_cast<size_t>(x)], cell_of[static_cast<size_t>(y)]};
  }

  struct Rect {
    int x_lo, x_hi, y_lo, y_hi;  // half-open
  };
  Rect bounds(int a, int b) const {
    return {offsets[static_cast<size_t>(a)], offsets[static_cast<size_t>(a) + 1],
            offsets[static_cast<size_t>(b)], offsets[static_cast<size_t>(b) + 1]};
  }
};

RegionPartition partition(const SharingGrid& grid);

/// Stored-parameter fraction k'^2 / k^2.
double param_ratio(const SharingGrid& grid);

/// Unshared-center fraction (2*r_c+1)^2 / k^2. Requires a grid whose
/// central region is well-defined (r_c >= 0).
double central_ratio(const SharingGrid& grid);

/// JSON form {"k":..,"k_prime":..,"half":[..],"r_c":..,"m":..}.
std::string grid_to_json(const SharingGrid& grid);
SharingGrid grid_from_json(const std::string& text);

}  // namespace pelk
