#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/kernels.hpp"
#include "xdom/rng.hpp"
#include "xdom/tensor.hpp"

namespace xdom {

enum class ModelMode { k_class, k_plus_1 };
enum class ActiveHead { global, dense };

std::string_view to_string(ModelMode mode);
std::string_view to_string(ActiveHead head);

struct ArchitectureSpec {
  std::vector<int> channels{16, 32, 32, 64, 64};
  std::vector<int> strides{1, 2, 1, 2, 1};

  void validate() const;
  int total_stride() const;
  int feature_channels() const { return channels.back(); }
};

nlohmann::json to_json(const ArchitectureSpec& arch);
ArchitectureSpec architecture_from_json(const nlohmann::json& j);

struct ConvLayer {
  int in_channels = 0;
  int out_channels = 0;
  int stride = 1;
  FloatBuffer weight;  // [out][in][3][3]
  FloatBuffer bias;

  ConvGeometry geometry(int in_h, int in_w) const { return {in_channels, out_channels, 3, stride, 1, in_h, in_w}; }
};

/// 3x3 conv + ReLU stack. Fully convolutional, so any input size works.
struct FeatureExtractor {
  std::vector<ConvLayer> layers;

  static FeatureExtractor init(const ArchitectureSpec& arch, int in_channels, Rng& rng);
  int out_channels() const { return layers.back().out_channels; }
  int stride() const;
  int out_size(int in) const;
};

/// 1x1 linear map applied at every spatial position. weight is C x categories, row-major.
struct PixelClassifier {
  int in_channels = 0;
  int categories = 0;
  FloatBuffer weight;
  FloatBuffer bias;

  static PixelClassifier init(int in_channels, int categories, Rng& rng);
  float w(int c, int k) const { return weight[static_cast<std::size_t>(c) * categories + k]; }
  /// Logits for one feature vector (bias included).
  std::vector<double> apply(std::span<const double> feature) const;
};

struct DualHeadModel {
  FeatureExtractor extractor;
  PixelClassifier classifier;
  int num_classes = 0;  // K
  ModelMode mode = ModelMode::k_class;
  ActiveHead head = ActiveHead::global;
  int image_size = 0;

  int categories() const { return classifier.categories; }
  int feature_size() const { return extractor.out_size(image_size); }
  void validate() const;
};

DualHeadModel init_model(const ArchitectureSpec& arch, int num_classes, ModelMode mode, int image_size, Rng& rng);

/// FNV-1a over every weight byte (extractor then classifier).
std::uint64_t parameter_checksum(const DualHeadModel& model);

// ---- forward/backward plumbing shared by training, CAM and ODIN ----

struct ForwardCache {
  Tensor input;                                // normalised network input
  std::vector<Tensor> activations;             // post-ReLU output of each layer
  std::vector<FloatBuffer> columns;     // im2col buffers per layer
};

/// Feature maps G for a batch of images (n x 3 x H x W in [0,1]).
Tensor extract_features(const FeatureExtractor& extractor, const Tensor& images, ForwardCache* cache = nullptr);

struct ExtractorGrads {
  std::vector<FloatBuffer> weight;
  std::vector<FloatBuffer> bias;

  static ExtractorGrads zeros_like(const FeatureExtractor& extractor);
};

/// Backpropagates dL/dG. grads may be null; grad_images (w.r.t. the raw [0,1] input) may be null.
void backward_features(const FeatureExtractor& extractor, const ForwardCache& cache, Tensor grad_features,
                       ExtractorGrads* grads, Tensor* grad_images);

/// Spatial mean of sample i of a feature batch.
std::vector<double> global_pool(const Tensor& features, int i = 0);

/// Pre-upsample per-pixel logits, categories x h x w (bias included).
struct LogitMap {
  int categories = 0;
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double at(int k, int y, int x) const { return values[(static_cast<std::size_t>(k) * rows + y) * cols + x]; }
};

LogitMap pixel_logits(const PixelClassifier& classifier, const Tensor& features, int i = 0);

/// Per-pixel category probabilities, categories x H x W.
struct ProbabilityMap {
  int categories = 0;
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double& at(int k, int y, int x) { return values[(static_cast<std::size_t>(k) * rows + y) * cols + x]; }
  double at(int k, int y, int x) const { return values[(static_cast<std::size_t>(k) * rows + y) * cols + x]; }
};

/// Upsample the logit map to rows x cols (corner-aligned bilinear) and softmax per pixel.
ProbabilityMap dense_probabilities(const LogitMap& logits, int rows, int cols);

/// Global head: GAP over G, then the pixel classifier. Image must be 1 x 3 x H x W at the configured size.
std::vector<double> forward_global(const DualHeadModel& model, const Tensor& image);
/// Same as forward_global, also returning the pooled feature vector.
std::vector<double> forward_global(const DualHeadModel& model, const Tensor& image, std::vector<double>& pooled);

/// Dense head: pixel classifier at feature resolution, bilinear upsample to H x W, softmax.
ProbabilityMap forward_dense(const DualHeadModel& model, const Tensor& image);

/// Pre-upsample logit map of the dense head for one image.
LogitMap dense_logits(const DualHeadModel& model, const Tensor& image);

/// Gradient of sum_k grad_logits[k] * l_x[k] with respect to the raw input image.
Tensor global_logits_input_gradient(const DualHeadModel& model, const Tensor& image, std::span<const double> grad_logits);

/// Switches the active head to global pooling. Weights are untouched.
DualHeadModel convert_dense_to_classifier(DualHeadModel model);

void check_image(const DualHeadModel& model, const Tensor& image);

}  // namespace xdom
