#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "xdom/tensor.hpp"

namespace xdom {

struct AxisTap {
  int lo = 0;
  int hi = 0;
  double w_lo = 1.0;
  double w_hi = 0.0;
};

/// Corner-aligned bilinear taps: output index i samples input coordinate
/// i * (in - 1) / (out - 1), so the first and last samples coincide.
std::vector<AxisTap> bilinear_taps(int in, int out);

/// Resizes one row-major plane.
template <typename In, typename Out>
void resize_plane(const In* src, int in_h, int in_w, Out* dst, int out_h, int out_w) {
  const auto ty = bilinear_taps(in_h, out_h);
  const auto tx = bilinear_taps(in_w, out_w);
  for (int y = 0; y < out_h; ++y) {
    const In* r0 = src + static_cast<std::size_t>(ty[y].lo) * in_w;
    const In* r1 = src + static_cast<std::size_t>(ty[y].hi) * in_w;
    for (int x = 0; x < out_w; ++x) {
      const auto& t = tx[x];
      const double top = t.w_lo * r0[t.lo] + t.w_hi * r0[t.hi];
      const double bot = t.w_lo * r1[t.lo] + t.w_hi * r1[t.hi];
      dst[static_cast<std::size_t>(y) * out_w + x] = static_cast<Out>(ty[y].w_lo * top + ty[y].w_hi * bot);
    }
  }
}

/// Transpose of resize_plane: scatters output-space values back to the input grid (overwrites dst).
template <typename T>
void resize_plane_adjoint(const T* grad_out, int out_h, int out_w, T* grad_in, int in_h, int in_w) {
  const auto ty = bilinear_taps(in_h, out_h);
  const auto tx = bilinear_taps(in_w, out_w);
  std::fill(grad_in, grad_in + static_cast<std::size_t>(in_h) * in_w, T{});
  for (int y = 0; y < out_h; ++y) {
    T* r0 = grad_in + static_cast<std::size_t>(ty[y].lo) * in_w;
    T* r1 = grad_in + static_cast<std::size_t>(ty[y].hi) * in_w;
    for (int x = 0; x < out_w; ++x) {
      const auto& t = tx[x];
      const double g = grad_out[static_cast<std::size_t>(y) * out_w + x];
      const double gt = ty[y].w_lo * g;
      const double gb = ty[y].w_hi * g;
      r0[t.lo] += static_cast<T>(t.w_lo * gt);
      r0[t.hi] += static_cast<T>(t.w_hi * gt);
      r1[t.lo] += static_cast<T>(t.w_lo * gb);
      r1[t.hi] += static_cast<T>(t.w_hi * gb);
    }
  }
}

Tensor resize_image(const Tensor& image, int out_h, int out_w);
Grid<double> resize_map(const Grid<double>& map, int out_h, int out_w);

Tensor flip_horizontal(const Tensor& image);
template <typename T>
Grid<T> flip_horizontal(const Grid<T>& grid) {
  Grid<T> out(grid.rows, grid.cols);
  for (int y = 0; y < grid.rows; ++y)
    for (int x = 0; x < grid.cols; ++x) out(y, x) = grid(y, grid.cols - 1 - x);
  return out;
}

/// Nearest-neighbour resize for label rasters (pixel-centre sampling).
Grid<int> resize_nearest(const Grid<int>& labels, int out_h, int out_w);

/// Separable Gaussian blur with replicated borders; sigma <= 0 returns the input.
Grid<double> gaussian_smooth(const Grid<double>& map, double sigma);

}  // namespace xdom
