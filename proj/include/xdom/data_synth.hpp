#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/tensor.hpp"

namespace xdom::synth {

enum class SplitTag { id_train, id_test, ood_semantic, ood_domain, ood_both };
enum class OodKind { semantic, domain, both };

std::string_view to_string(SplitTag tag);
SplitTag split_from_string(std::string_view name);
SplitTag split_for(OodKind kind);

inline constexpr int kNoLabel = -1;

struct DatasetSpec {
  int num_classes = 4;
  int image_size = 32;
  std::vector<std::string> shapes_per_class{"square", "circle", "triangle", "cross"};
  std::vector<std::string> id_texture_ids{"noise_gray", "stripes_h_blue", "checker_green"};
  double fg_fraction_lo = 0.10;
  double fg_fraction_hi = 0.35;
  int n_train = 2000;
  int n_test = 1000;
  std::uint64_t seed = 0;

  /// Throws a config error when an invariant is violated.
  void validate() const;
};

nlohmann::json to_json(const DatasetSpec& spec);
DatasetSpec dataset_spec_from_json(const nlohmann::json& j);

/// Top-left corner and side length of the square box the shape is inscribed in.
struct Placement {
  int x0 = 0;
  int y0 = 0;
  int size = 0;
};

struct LabeledExample {
  std::string id;
  Tensor image;                  // 1x3xHxW, values are multiples of 1/255
  int label = kNoLabel;          // kNoLabel for shapes outside the ID vocabulary
  Grid<std::uint8_t> true_mask;  // 0/1 raster
  SplitTag split = SplitTag::id_train;
  std::string shape;
  std::string texture;
  Placement placement;
};

struct ExampleSet {
  SplitTag split = SplitTag::id_train;
  std::vector<LabeledExample> examples;

  std::size_t size() const { return examples.size(); }
};

std::span<const std::string_view> shape_catalog();
std::span<const std::string_view> texture_catalog();
bool is_known_shape(std::string_view shape);
bool is_known_texture(std::string_view texture);

/// Shape raster in a size x size local frame (1 = covered).
Grid<std::uint8_t> rasterize_local(std::string_view shape, int size);

struct Rendered {
  Tensor image;
  Grid<std::uint8_t> mask;
};

/// Empty `shape` renders background only (all-zero mask).
Rendered render_example(std::string_view shape, std::string_view texture, const Placement& placement, int image_size,
                        std::uint64_t seed);

std::pair<ExampleSet, ExampleSet> gen_id_dataset(const DatasetSpec& spec);
ExampleSet gen_ood_dataset(OodKind kind, const DatasetSpec& spec, int n);

std::vector<std::string> held_out_shapes(const DatasetSpec& spec);
std::vector<std::string> held_out_textures(const DatasetSpec& spec);

/// Dataset directory: manifest.json plus images/<id>.ppm and masks/<id>.pgm (0 / 255).
void save_dataset(const std::filesystem::path& dir, const DatasetSpec& spec, std::span<const ExampleSet> sets);
std::map<SplitTag, ExampleSet> load_dataset(const std::filesystem::path& dir);

}  // namespace xdom::synth
