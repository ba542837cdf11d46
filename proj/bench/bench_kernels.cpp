// Parallel (im2col + GEMM, OpenMP over the batch) vs the serial reference loops,
// on the layer shapes of the default model at batch 32.
#include <benchmark/benchmark.h>

#include "xdom/kernels.hpp"
#include "xdom/rng.hpp"

using namespace xdom;

namespace {

struct Layer {
  int cin, cout, stride, size;
};

// channels {16, 32, 32, 64, 64}, strides {1, 2, 1, 2, 1}, 32x32 input
constexpr Layer kLayers[] = {{3, 16, 1, 32}, {16, 32, 2, 32}, {32, 32, 1, 16}, {32, 64, 2, 16}, {64, 64, 1, 8}};
constexpr int kBatch = 32;

struct Fixture {
  ConvGeometry g;
  FloatBuffer in, w, b, out, gout, gin, gw, gb;

  explicit Fixture(int layer) {
    const auto& l = kLayers[layer];
    g.in_channels = l.cin;
    g.out_channels = l.cout;
    g.stride = l.stride;
    g.in_h = g.in_w = l.size;
    Rng rng(7 + layer);
    auto fill = [&](FloatBuffer& v, std::size_t n) {
      v.resize(n);
      for (auto& x : v) x = static_cast<float>(rng.normal());
    };
    fill(in, g.in_sample() * kBatch);
    fill(w, g.weight_size());
    fill(b, l.cout);
    fill(gout, g.out_sample() * kBatch);
    out.resize(g.out_sample() * kBatch);
    gin.resize(in.size());
    gw.resize(w.size());
    gb.resize(b.size());
  }
};

void BM_ForwardParallel(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    kernels::conv2d_forward(f.g, kBatch, f.in, f.w, f.b, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.counters["threads"] = kernels::max_threads();
}

void BM_ForwardReference(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    kernels::reference::conv2d_forward(f.g, kBatch, f.in, f.w, f.b, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
}

void BM_BackwardParallel(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    kernels::conv2d_backward(f.g, kBatch, f.in, {}, f.w, f.gout, f.gin, f.gw, f.gb);
    benchmark::DoNotOptimize(f.gw.data());
  }
  state.counters["threads"] = kernels::max_threads();
}

void BM_BackwardReference(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    kernels::reference::conv2d_backward(f.g, kBatch, f.in, f.w, f.gout, f.gin, f.gw, f.gb);
    benchmark::DoNotOptimize(f.gw.data());
  }
}

}  // namespace

BENCHMARK(BM_ForwardParallel)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ForwardReference)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BackwardParallel)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BackwardReference)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
