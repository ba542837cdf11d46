#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/config.hpp"
#include "xdom/metrics.hpp"

namespace xdom::pipeline {

enum class Stage { synth, train_cls, masks, train_dense, convert, score, eval, plot };

inline constexpr std::array kStages{Stage::synth,   Stage::train_cls, Stage::masks, Stage::train_dense,
                                    Stage::convert, Stage::score,     Stage::eval,  Stage::plot};

/// CLI spelling: synth, train-cls, masks, train-dense, convert, score, eval, plot.
std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view name);
std::vector<Stage> prerequisites(Stage stage);

struct RunLayout {
  std::filesystem::path root;

  std::filesystem::path manifest() const { return root / "manifest.json"; }
  std::filesystem::path config_echo() const { return root / "config.json"; }
  std::filesystem::path datasets() const { return root / "datasets"; }
  std::filesystem::path checkpoints() const { return root / "checkpoints"; }
  std::filesystem::path classifier_ckpt() const { return checkpoints() / "classifier.ckpt"; }
  std::filesystem::path dense_ckpt() const { return checkpoints() / "dense.ckpt"; }
  std::filesystem::path converted_ckpt() const { return checkpoints() / "converted.ckpt"; }
  std::filesystem::path masks() const { return root / "masks"; }
  std::filesystem::path scores() const { return root / "scores"; }
  std::filesystem::path score_file(const std::string& scorer) const { return scores() / (scorer + ".csv"); }
  std::filesystem::path baseline_score_file(const std::string& scorer) const {
    return scores() / ("baseline_" + scorer + ".csv");
  }
  std::filesystem::path report() const { return root / "report.json"; }
  std::filesystem::path plots() const { return root / "plots"; }
};

struct StageRecord {
  std::string config_hash;
  std::uint64_t generation = 0;
  std::map<std::string, std::uint64_t> upstream;  // prerequisite -> generation consumed
  std::vector<std::string> artifacts;             // relative to the run root
  std::string completed_at;
  double seconds = 0.0;
};

struct RunManifest {
  std::map<std::string, StageRecord> stages;
  std::uint64_t next_generation = 1;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

enum class StageState { complete, missing, stale };

struct StageStatus {
  StageState state = StageState::missing;
  Stage culprit = Stage::synth;  // first stage responsible for a non-complete state
  std::string reason;
};

/// Single-writer driver for one run directory.
class Runner {
 public:
  explicit Runner(RunConfig cfg, std::ostream* log = nullptr);

  const RunConfig& config() const { return cfg_; }
  const RunLayout& layout() const { return layout_; }
  const RunManifest& manifest() const { return manifest_; }

  std::string stage_hash(Stage stage) const;
  StageStatus status(Stage stage) const;

  /// Runs one stage if it is not complete (or when forced). Prerequisites must be complete:
  /// a missing one raises a dependency error, a drifted one a stale-artifact error.
  /// Returns whether the stage executed.
  bool run_stage(Stage stage, bool force = false);

  /// Every stage in dependency order; `force` re-executes that stage and therefore everything downstream.
  metrics::EvalReport run_all(std::optional<Stage> force = std::nullopt);

  /// Stages executed by this runner, in order.
  const std::vector<Stage>& executed() const { return executed_; }

 private:
  void execute(Stage stage);
  void save_manifest() const;
  std::ostream& log() const;

  void do_synth();
  void do_train_cls();
  void do_masks();
  void do_train_dense();
  void do_convert();
  void do_score();
  void do_eval();
  void do_plot();

  RunConfig cfg_;
  RunLayout layout_;
  RunManifest manifest_;
  std::vector<Stage> executed_;
  std::vector<std::string> artifacts_;  // filled by the executing stage
  std::ostream* log_ = nullptr;
};

/// The report with the run-specific parts (output directory) removed from the config echo.
nlohmann::json report_config_echo(const RunConfig& cfg);

}  // namespace xdom::pipeline
