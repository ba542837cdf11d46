#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/data_synth.hpp"
#include "xdom/model.hpp"

namespace xdom {

struct TrainConfig {
  int steps = 2000;
  int batch_size = 32;
  double learning_rate = 0.01;
  double momentum = 0.9;
  double weight_decay = 5e-4;
  std::vector<double> decay_at{0.6, 0.9};  // fractions of `steps`
  double decay_factor = 0.1;
  std::uint64_t seed = 0;
  bool flip = true;
  bool scale_aug = false;
  double scale_lo = 0.5;
  double scale_hi = 2.0;
  bool mixup = false;
  double mixup_alpha = 0.1;
  bool deterministic = true;

  void validate() const;
  double learning_rate_at(int step) const;
};

nlohmann::json to_json(const TrainConfig& cfg);
/// `seed` and `deterministic` are not part of the file schema; the run config supplies them.
TrainConfig train_config_from_json(const nlohmann::json& j, TrainConfig defaults = {});

struct TrainResult {
  DualHeadModel model;
  std::vector<double> loss_curve;  // one entry per step
};

/// Called every `progress_every` steps with (step, smoothed loss).
using ProgressFn = std::function<void(int, double)>;

TrainResult train_classifier(const synth::ExampleSet& train, const TrainConfig& cfg, int num_classes,
                             const ArchitectureSpec& arch, const ProgressFn& progress = {});

/// `init`, when given, donates its extractor; the classifier is freshly initialised with K+1 columns.
TrainResult train_dense(const DualHeadModel* init, const synth::ExampleSet& train,
                        const std::vector<Grid<int>>& label_maps, const TrainConfig& cfg, int num_classes,
                        const ArchitectureSpec& arch, const ProgressFn& progress = {});

inline constexpr double kProbabilityFloor = 1e-12;

struct ModelGrads {
  ExtractorGrads extractor;
  FloatBuffer classifier_weight;
  FloatBuffer classifier_bias;

  static ModelGrads zeros_like(const DualHeadModel& model);
};

/// Mean softmax cross-entropy of the global head against (possibly soft) targets; accumulates into grads.
double classifier_batch_loss(const DualHeadModel& model, const Tensor& images,
                             const std::vector<std::vector<double>>& targets, ModelGrads* grads);

/// Mean pixel cross-entropy of the dense head; label maps must match the image size.
double dense_batch_loss(const DualHeadModel& model, const Tensor& images, std::span<const Grid<int>> labels,
                        ModelGrads* grads);

/// Mean over pixels of -log(max(p[label], floor)).
double pixel_ce_loss(const ProbabilityMap& pred, const Grid<int>& labels);

/// Analytic dL/d(pre-upsample logits) of pixel_ce_loss(dense_probabilities(logits), labels).
std::vector<double> pixel_ce_logit_gradient(const LogitMap& logits, const Grid<int>& labels);

}  // namespace xdom
