#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/data_synth.hpp"
#include "xdom/model.hpp"
#include "xdom/pseudo_mask.hpp"
#include "xdom/scoring.hpp"
#include "xdom/train.hpp"

namespace xdom {

struct EvalConfig {
  int histogram_bins = 30;
  std::string histogram_scorer = "energy";
  std::vector<double> temperature_sweep{1.0, 2.5, 5.0, 10.0};
  double tpr_level = 0.95;

  void validate() const;
};

nlohmann::json to_json(const EvalConfig& cfg);
EvalConfig eval_config_from_json(const nlohmann::json& j);

struct RunConfig {
  synth::DatasetSpec dataset;
  int n_ood = 1000;  // per OOD split
  ArchitectureSpec model;
  TrainConfig train_cls;
  TrainConfig train_dense;
  masks::MaskConfig mask;
  std::vector<scoring::ScorerSpec> scorers;
  scoring::FusionConfig fusion;
  EvalConfig eval;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  bool deterministic = true;

  void validate() const;
  /// Pushes the global seed and determinism flag into the nested configs.
  void propagate_seed();
};

RunConfig default_run_config();

/// Relative output directories resolve against `base_dir`. Unknown keys are config errors.
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace xdom
