#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "argmine/features.hpp"
#include "argmine/graph.hpp"
#include "argmine/segment.hpp"

namespace argmine {

enum class Task { Adu, ClaimPremise, Relation };

const char* to_string(Task task);
Task task_from_string(std::string_view name);

/// Multinomial logistic regression parameters. Any model honoring the
/// predict-with-probability contract can stand in behind the same file
/// format; this is the reference implementation.
struct LinearModel {
  Task task = Task::Adu;
  Language language = Language::EN;
  std::string feature_schema_id;
  std::vector<std::vector<double>> weights;  // class_count x dimension
  std::vector<double> bias;                  // class_count

  std::size_t class_count() const { return weights.size(); }
  std::size_t feature_dimension() const {
    return weights.empty() ? 0 : weights.front().size();
  }
};

struct LabeledExample {
  std::vector<double> features;
  int label = 0;
};
using Dataset = std::vector<LabeledExample>;

struct TrainConfig {
  double learning_rate = 0.5;
  double l2 = 1e-4;
  std::size_t epochs = 300;
  std::uint64_t seed = 0;
};

/// Mean cross-entropy plus (l2/2)*||W||^2; the bias is not regularized.
double logistic_loss(const LinearModel& model, const Dataset& data, double l2);

struct LossGradient {
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
};
LossGradient logistic_gradient(const LinearModel& model, const Dataset& data,
                               double l2);

/// Full-batch gradient descent; deterministic for a fixed seed. Throws on an
/// empty dataset, a class without examples, or inconsistent dimensions. When
/// loss_trace is given it receives the loss after every epoch.
LinearModel train_logistic(const Dataset& data, std::size_t class_count,
                           const TrainConfig& config, Task task,
                           std::string feature_schema_id, Language language,
                           std::vector<double>* loss_trace = nullptr);

struct Prediction {
  int cls = 0;
  double probability = 0.5;  // probability of the predicted class
};

std::vector<double> predict_probabilities(const LinearModel& model,
                                          std::span<const double> features);

/// Argmax with ties resolved to the lower class index.
Prediction predict(const LinearModel& model, std::span<const double> features);

enum class AduLabel { NonArgumentative = 0, Argumentative = 1 };
enum class RoleBinary { Premise = 0, Claim = 1 };

struct AduPrediction {
  AduLabel label = AduLabel::NonArgumentative;
  double probability = 0.5;
};
struct RolePrediction {
  RoleBinary label = RoleBinary::Premise;
  double probability = 0.5;
};

/// Both classifiers check the task tag and the feature schema id and throw
/// std::invalid_argument on a mismatch. A probability of exactly 0.5 resolves
/// to the negative class (NonArgumentative respectively Premise).
AduPrediction classify_adu(const FeatureVector& features,
                           const LinearModel& model);
RolePrediction classify_claim_premise(const FeatureVector& features,
                                      const LinearModel& model);

struct RelationPrediction {
  Stance stance = Stance::Support;
  double probability = 0.5;
  bool neutral = false;
};

/// Pair encoding fed to the relation model: premise, claim and their
/// difference concatenated. Keeps the premise-to-claim direction observable.
std::vector<double> relation_features(std::span<const double> premise_embedding,
                                      std::span<const double> claim_embedding);
std::string relation_schema_id(std::size_t embedding_dimension);

/// Predicts the stance of premise -> claim. Predictions whose max-class
/// probability falls below neutral_threshold are coerced to Support with the
/// original probability kept and the neutral flag set; a threshold of 1.0
/// therefore forces Support for every input and every model.
RelationPrediction classify_relation(std::span<const double> premise_embedding,
                                     std::span<const double> claim_embedding,
                                     const LinearModel& model,
                                     double neutral_threshold);

struct EvalStats {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

EvalStats stats_from_counts(std::size_t tp, std::size_t fp, std::size_t fn,
                            std::size_t tn);

/// Accuracy, precision, recall and F1 with the given positive class (class 1
/// by default: Argumentative, Claim or Attack depending on the task).
EvalStats evaluate(const LinearModel& model, const Dataset& test,
                   int positive_class = 1);

/// Seeded shuffle split; train gets round(ratio * n) examples.
std::pair<Dataset, Dataset> split_train_test(const Dataset& data, double ratio,
                                             std::uint64_t seed);

/// Stratified k folds: per-class counts differ by at most one across folds.
/// Throws if any class has fewer members than k.
std::vector<Dataset> stratified_folds(const Dataset& data, std::size_t k,
                                      std::uint64_t seed);

/// Versioned JSON model files; save/load round-trips weights bit-exactly.
void save_model(const LinearModel& model, const std::filesystem::path& path);
LinearModel load_model(const std::filesystem::path& path);

/// Matrix of pairwise relation predictions over one document's units,
/// indexed by unit position. The diagonal stays empty.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t unit_count)
      : unit_count_(unit_count), cells_(unit_count * unit_count) {}

  std::size_t unit_count() const { return unit_count_; }
  void set(std::size_t from, std::size_t to, RelationPrediction prediction);
  const RelationPrediction* get(std::size_t from, std::size_t to) const;

 private:
  std::size_t unit_count_ = 0;
  std::vector<std::optional<RelationPrediction>> cells_;
};

}  // namespace argmine
