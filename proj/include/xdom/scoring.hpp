#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "xdom/data_synth.hpp"
#include "xdom/model.hpp"

namespace xdom::scoring {

enum class ScorerKind { msp, maxlogit, odin, energy, vim };
enum class ValueType { softmax_based, logit_based };

std::string_view to_string(ScorerKind kind);
std::string_view to_string(ValueType type);
ScorerKind scorer_kind_from_string(std::string_view name);

struct ScorerSpec {
  ScorerKind kind = ScorerKind::msp;
  double odin_temperature = 1000.0;
  double odin_epsilon = 0.0014;
  int vim_dim = 16;

  ValueType value_type() const;
  std::string id() const { return std::string(to_string(kind)); }
  void validate() const;
};

nlohmann::json to_json(const ScorerSpec& spec);
ScorerSpec scorer_spec_from_json(const nlohmann::json& j);

struct FusionConfig {
  double temperature = 2.5;
  double domain_floor = 1e-6;

  void validate() const;
};

nlohmann::json to_json(const FusionConfig& cfg);
FusionConfig fusion_config_from_json(const nlohmann::json& j);

// ---- semantic scorers (higher = more in-distribution) ----

/// First K entries of a (K+1)-logit vector; a K-logit vector passes through unchanged.
std::vector<double> semantic_logits(std::span<const double> logits, int num_classes);

double msp(std::span<const double> logits);
double maxlogit(std::span<const double> logits);
/// log sum exp, max-subtracted.
double energy(std::span<const double> logits);

/// Anything that maps an image to logits, optionally with input gradients.
struct LogitModel {
  std::function<std::vector<double>(const Tensor&)> logits;
  /// Gradient w.r.t. the image of sum_k weights[k] * logits[k]. Empty when unsupported.
  std::function<Tensor(const Tensor&, std::span<const double>)> input_gradient;
};

LogitModel as_logit_model(const DualHeadModel& model);

/// sign(d/dx log max_k softmax(semantic_logits(x) / tau)), the ODIN step direction.
Tensor odin_direction(const LogitModel& model, const Tensor& image, double temperature, int num_classes);

/// Max softmax of semantic logits / tau at x + eps * odin_direction(x).
double odin(const LogitModel& model, const Tensor& image, const ScorerSpec& spec, int num_classes);
double odin(const DualHeadModel& model, const Tensor& image, const ScorerSpec& spec);

struct VimParams {
  Eigen::VectorXd offset;          // C
  Eigen::MatrixXd residual_basis;  // C x (C - d), orthonormal columns
  double alpha = 1.0;
  int dim = 0;
};

/// features: N x C pooled training features; weight: C x K; bias: K.
VimParams fit_vim(const Eigen::MatrixXd& features, const Eigen::MatrixXd& weight, const Eigen::VectorXd& bias, int dim);
/// Semantic columns (first K) of a model's classifier as (weight, bias).
std::pair<Eigen::MatrixXd, Eigen::VectorXd> semantic_classifier(const PixelClassifier& classifier, int num_classes);

double vim_residual(const VimParams& params, std::span<const double> feature);
/// energy(logits) - alpha * residual(feature)
double vim_score(const VimParams& params, std::span<const double> feature, std::span<const double> logits);

// ---- domain score and fusion ----

/// The background (index K) logit of a (K+1)-logit vector.
double domain_score(std::span<const double> logits, int num_classes);

/// softmax_based: S_h + log(max(S_d, floor)) / T; logit_based: S_h + S_d / T.
double fuse(double semantic, double domain, ValueType type, const FusionConfig& cfg, bool* clamped = nullptr);

// ---- score sets and files ----

struct ScoreRecord {
  std::string id;
  synth::SplitTag split = synth::SplitTag::id_test;
  double semantic = 0.0;
  double domain = 0.0;
  double fused = 0.0;
};

struct ScoreSet {
  std::string scorer_id;
  ValueType value_type = ValueType::logit_based;
  FusionConfig fusion;
  std::vector<ScoreRecord> records;
  int clamp_events = 0;

  /// Recomputes every fused score (and the clamp count) under a new fusion config.
  void refuse(const FusionConfig& cfg);
};

/// CSV with header id,split,scorer,value_type,S_h,S_d,S,temperature,domain_floor.
void write_score_file(const std::filesystem::path& path, const ScoreSet& set);
ScoreSet read_score_file(const std::filesystem::path& path);

}  // namespace xdom::scoring
