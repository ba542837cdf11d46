#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xdom/data_synth.hpp"
#include "xdom/model.hpp"

namespace xdom::metrics {

// Conventions: ID is the positive class and higher scores mean "more ID".
// AUROC counts ties as 1/2; thresholds include the boundary (score >= t is ID).

double auroc(std::span<const double> id_scores, std::span<const double> ood_scores);

/// Average precision over the descending-score sweep (step-wise, ties grouped).
double aupr(std::span<const double> id_scores, std::span<const double> ood_scores);

/// Largest t with fraction(id >= t) >= level.
double tpr_threshold(std::span<const double> id_scores, double level);

/// fraction(ood >= tpr_threshold(id, level)).
double fpr_at_tpr(std::span<const double> id_scores, std::span<const double> ood_scores, double level = 0.95);

/// 1 (OOD) iff score < threshold.
int detect(double score, double threshold);

/// Argmax over the first K logits against the label; unlabeled examples are skipped.
double top1_accuracy(const DualHeadModel& model, const synth::ExampleSet& set, int num_classes);

struct DetectionMetrics {
  double fpr95 = 0.0;
  double auroc = 0.0;
  double aupr = 0.0;
};

DetectionMetrics evaluate(std::span<const double> id_scores, std::span<const double> ood_scores);

struct Histogram {
  std::vector<double> edges;  // bins + 1
  std::vector<int> counts;
};

/// Equal-width bins spanning [min, max] of the data.
Histogram histogram(std::span<const double> scores, int bins);
/// Equal-width bins over an explicit range; values outside are clamped into the end bins.
Histogram histogram(std::span<const double> scores, int bins, double lo, double hi);

nlohmann::json to_json(const DetectionMetrics& m);
nlohmann::json to_json(const Histogram& h);
Histogram histogram_from_json(const nlohmann::json& j);

/// Per-run evaluation summary. Serialised with a stable key order.
struct EvalReport {
  // split -> row label (e.g. "energy", "energy+DOM", "DOM") -> metrics
  std::map<std::string, std::map<std::string, DetectionMetrics>> detection;
  double id_top1_k_class = 0.0;
  double id_top1_converted = 0.0;
  int clamp_event_count = 0;
  // split -> "S_h" / "S_d" -> {"id", "ood"} histograms on a shared range
  std::map<std::string, std::map<std::string, std::map<std::string, Histogram>>> histograms;
  std::string histogram_scorer;
  nlohmann::json extras = nlohmann::json::object();
  nlohmann::json config_echo = nlohmann::json::object();
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
};

}  // namespace xdom::metrics
