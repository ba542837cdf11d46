#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/data_synth.hpp"
#include "xdom/model.hpp"
#include "xdom/tensor.hpp"

namespace xdom::masks {

struct AttentionMap {
  Grid<double> values;
  int cls = 0;
  bool normalized = false;
};

enum class ThresholdMode { fixed, mean };

struct MaskConfig {
  std::vector<double> scales{0.5, 1.0, 1.5, 2.0};
  bool use_flips = true;
  double gaussian_sigma = 1.0;
  ThresholdMode threshold_mode = ThresholdMode::fixed;
  double theta = 0.5;

  void validate() const;
};

nlohmann::json to_json(const MaskConfig& cfg);
MaskConfig mask_config_from_json(const nlohmann::json& j);

/// Per-position dot product of classifier column `cls` with the feature
/// vector (no bias), resized bilinearly to out_h x out_w.
AttentionMap cam_from_features(const PixelClassifier& classifier, const Tensor& features, int cls, int out_h,
                               int out_w);

/// CAM of a K-class model for a square image of any size; output matches the image size.
AttentionMap cam(const DualHeadModel& model, const Tensor& image, int cls);

/// Mean CAM over every (scale, flip) variant, resized to the input size, then Gaussian-smoothed.
AttentionMap multiscale_cam(const DualHeadModel& model, const Tensor& image, int cls, const MaskConfig& cfg);

/// (v - min) / (max - min); a constant map becomes all zeros.
AttentionMap normalize_map(AttentionMap map);

/// 1 where value >= threshold. Fixed mode uses theta, mean mode the map mean.
Grid<std::uint8_t> threshold_mask(const AttentionMap& map, const MaskConfig& cfg);

/// Foreground pixels get `cls`, background pixels the extra index K.
Grid<int> build_label_map(const Grid<std::uint8_t>& mask, int cls, int num_classes);

/// |A and B| / |A or B|, with two empty masks scoring 1.
double mask_iou(const Grid<std::uint8_t>& pred, const Grid<std::uint8_t>& truth);

Grid<std::uint8_t> pseudo_mask(const DualHeadModel& model, const Tensor& image, int cls, const MaskConfig& cfg);

/// Pseudo-masks for every example (uses the example label as the CAM class).
std::vector<Grid<std::uint8_t>> pseudo_masks_for(const DualHeadModel& model, const synth::ExampleSet& set,
                                                 const MaskConfig& cfg);

struct StoredMask {
  std::string id;
  int label = 0;
  Grid<std::uint8_t> mask;
};

/// masks/<id>.pgm (0 / 255) plus manifest.json with id -> file, label, K and the mask config.
void save_pseudo_masks(const std::filesystem::path& dir, const synth::ExampleSet& set,
                       const std::vector<Grid<std::uint8_t>>& masks, int num_classes, const MaskConfig& cfg,
                       const nlohmann::json& extra = nlohmann::json::object());
std::vector<StoredMask> load_pseudo_masks(const std::filesystem::path& dir, int* num_classes = nullptr);

}  // namespace xdom::masks
