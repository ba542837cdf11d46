#pragma once

#include <algorithm>
#include <cstddef>
#include <new>
#include <span>
#include <vector>

#include "xdom/error.hpp"

namespace xdom {

// Eigen's vectorized products round differently depending on where a buffer starts, so every
// float buffer that reaches a kernel gets the same alignment. Without this, two identical
// training runs drift apart in the last bits after a few steps.
template <typename T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlign{64};

  AlignedAllocator() = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) { return static_cast<T*>(::operator new(n * sizeof(T), kAlign)); }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, kAlign); }

  template <typename U>
  bool operator==(const AlignedAllocator<U>&) const noexcept { return true; }
};

using FloatBuffer = std::vector<float, AlignedAllocator<float>>;

struct Shape {
  int n = 0;
  int c = 0;
  int h = 0;
  int w = 0;

  std::size_t sample_size() const { return static_cast<std::size_t>(c) * h * w; }
  std::size_t size() const { return static_cast<std::size_t>(n) * sample_size(); }
  std::size_t plane() const { return static_cast<std::size_t>(h) * w; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Dense NCHW float tensor. Images are tensors with n == 1.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, float fill = 0.0f) : shape_(shape), data_(shape.size(), fill) {}

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int c() const { return shape_.c; }
  int h() const { return shape_.h; }
  int w() const { return shape_.w; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }
  FloatBuffer& storage() { return data_; }
  const FloatBuffer& storage() const { return data_; }

  std::span<float> sample(int i) { return std::span<float>(data_).subspan(i * shape_.sample_size(), shape_.sample_size()); }
  std::span<const float> sample(int i) const {
    return std::span<const float>(data_).subspan(i * shape_.sample_size(), shape_.sample_size());
  }

  float& at(int i, int ch, int y, int x) { return data_[index(i, ch, y, x)]; }
  float at(int i, int ch, int y, int x) const { return data_[index(i, ch, y, x)]; }

  void fill(float v) { std::fill(data_.begin(), data_.end(), v); }

 private:
  std::size_t index(int i, int ch, int y, int x) const {
    return ((static_cast<std::size_t>(i) * shape_.c + ch) * shape_.h + y) * shape_.w + x;
  }

  Shape shape_;
  FloatBuffer data_;
};

/// Row-major 2-D raster: attention maps, masks, label maps.
template <typename T>
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<T> values;

  Grid() = default;
  Grid(int r, int c, T fill = T{}) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, fill) {}

  T& operator()(int y, int x) { return values[static_cast<std::size_t>(y) * cols + x]; }
  const T& operator()(int y, int x) const { return values[static_cast<std::size_t>(y) * cols + x]; }
  std::size_t size() const { return values.size(); }
  template <typename U>
  bool same_shape(const Grid<U>& other) const {
    return rows == other.rows && cols == other.cols;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

}  // namespace xdom
