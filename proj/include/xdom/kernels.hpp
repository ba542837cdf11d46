#pragma once

#include <span>
#include <vector>

#include "xdom/tensor.hpp"

namespace xdom {

struct ConvGeometry {
  int in_channels = 0;
  int out_channels = 0;
  int kernel = 3;
  int stride = 1;
  int pad = 1;
  int in_h = 0;
  int in_w = 0;

  int out_h() const { return (in_h + 2 * pad - kernel) / stride + 1; }
  int out_w() const { return (in_w + 2 * pad - kernel) / stride + 1; }
  int patch() const { return in_channels * kernel * kernel; }
  std::size_t weight_size() const { return static_cast<std::size_t>(out_channels) * patch(); }
  std::size_t in_sample() const { return static_cast<std::size_t>(in_channels) * in_h * in_w; }
  std::size_t out_sample() const { return static_cast<std::size_t>(out_channels) * out_h() * out_w(); }
  std::size_t column_sample() const { return static_cast<std::size_t>(patch()) * out_h() * out_w(); }
};

// Batched NCHW convolution. Weight layout is [out][in][ky][kx].
//
// The parallel kernels split work over batch samples (forward, input
// gradient) or output channels (weight gradient). Every output element is
// produced by one thread with a fixed summation order, so results do not
// depend on the thread count.
namespace kernels {

int max_threads();

void im2col(const ConvGeometry& g, std::span<const float> image, std::span<float> columns);
void col2im(const ConvGeometry& g, std::span<const float> columns, std::span<float> image);

/// `columns`, if non-null, receives the im2col buffers for reuse in backward.
void conv2d_forward(const ConvGeometry& g, int batch, std::span<const float> input, std::span<const float> weight,
                    std::span<const float> bias, std::span<float> output, FloatBuffer* columns = nullptr);

/// Overwrites grad_weight and grad_bias; grad_input may be empty to skip it.
/// `columns` may be empty, in which case it is recomputed from `input`.
void conv2d_backward(const ConvGeometry& g, int batch, std::span<const float> input, std::span<const float> columns,
                     std::span<const float> weight, std::span<const float> grad_output, std::span<float> grad_input,
                     std::span<float> grad_weight, std::span<float> grad_bias);

void relu_forward(std::span<float> values);
/// grad *= (activation > 0)
void relu_backward(std::span<const float> activation, std::span<float> grad);

}  // namespace kernels

// Straight-loop serial versions kept as the test oracle and benchmark baseline.
namespace kernels::reference {

void conv2d_forward(const ConvGeometry& g, int batch, std::span<const float> input, std::span<const float> weight,
                    std::span<const float> bias, std::span<float> output);

void conv2d_backward(const ConvGeometry& g, int batch, std::span<const float> input, std::span<const float> weight,
                     std::span<const float> grad_output, std::span<float> grad_input, std::span<float> grad_weight,
                     std::span<float> grad_bias);

}  // namespace kernels::reference

}  // namespace xdom
