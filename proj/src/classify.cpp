#include "argmine/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace argmine {

using nlohmann::json;

const char* to_string(Task task) {
  switch (task) {
    case Task::Adu: return "adu";
    case Task::ClaimPremise: return "claim-premise";
    default: return "relation";
  }
}

Task task_from_string(std::string_view name) {
  if (name == "adu") return Task::Adu;
  if (name == "claim-premise") return Task::ClaimPremise;
  if (name == "relation") return Task::Relation;
  throw std::invalid_argument("unknown task: " + std::string(name));
}

namespace {

void check_dataset(const Dataset& data, std::size_t class_count) {
  if (data.empty()) throw std::invalid_argument("dataset must not be empty");
  if (class_count < 2) throw std::invalid_argument("need at least two classes");
  const std::size_t dim = data.front().features.size();
  std::vector<std::size_t> counts(class_count, 0);
  for (const auto& ex : data) {
    if (ex.features.size() != dim)
      throw std::invalid_argument("inconsistent feature dimensions");
    if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= class_count)
      throw std::invalid_argument("label outside class range");
    ++counts[static_cast<std::size_t>(ex.label)];
  }
  for (std::size_t c = 0; c < class_count; ++c)
    if (counts[c] == 0)
      throw std::invalid_argument("class " + std::to_string(c) +
                                  " has no examples");
}

std::vector<double> softmax(std::vector<double> logits) {
  const double peak = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (auto& v : logits) {
    v = std::exp(v - peak);
    sum += v;
  }
  for (auto& v : logits) v /= sum;
  return logits;
}

std::vector<double> logits_of(const LinearModel& model,
                              std::span<const double> x) {
  std::vector<double> out(model.class_count());
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    double acc = model.bias[c];
    const auto& row = model.weights[c];
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * x[i];
    out[c] = acc;
  }
  return out;
}

void check_model_input(const LinearModel& model, std::span<const double> x) {
  if (model.weights.empty())
    throw std::invalid_argument("model has no weights");
  if (x.size() != model.feature_dimension())
    throw std::invalid_argument(
        "feature dimension " + std::to_string(x.size()) +
        " does not match model dimension " +
        std::to_string(model.feature_dimension()));
}

constexpr double kProbabilityFloor = 1e-12;

}  // namespace

double logistic_loss(const LinearModel& model, const Dataset& data, double l2) {
  if (data.empty()) throw std::invalid_argument("dataset must not be empty");
  double loss = 0.0;
  for (const auto& ex : data) {
    const auto probs = softmax(logits_of(model, ex.features));
    loss -= std::log(std::max(probs[static_cast<std::size_t>(ex.label)],
                              kProbabilityFloor));
  }
  loss /= static_cast<double>(data.size());
  double penalty = 0.0;
  for (const auto& row : model.weights)
    for (double w : row) penalty += w * w;
  return loss + 0.5 * l2 * penalty;
}

LossGradient logistic_gradient(const LinearModel& model, const Dataset& data,
                               double l2) {
  if (data.empty()) throw std::invalid_argument("dataset must not be empty");
  const std::size_t classes = model.class_count();
  const std::size_t dim = model.feature_dimension();
  LossGradient grad;
  grad.weights.assign(classes, std::vector<double>(dim, 0.0));
  grad.bias.assign(classes, 0.0);

  for (const auto& ex : data) {
    const auto probs = softmax(logits_of(model, ex.features));
    for (std::size_t c = 0; c < classes; ++c) {
      const double delta =
          probs[c] - (static_cast<std::size_t>(ex.label) == c ? 1.0 : 0.0);
      grad.bias[c] += delta;
      for (std::size_t i = 0; i < dim; ++i)
        grad.weights[c][i] += delta * ex.features[i];
    }
  }
  const double inv = 1.0 / static_cast<double>(data.size());
  for (std::size_t c = 0; c < classes; ++c) {
    grad.bias[c] *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      grad.weights[c][i] *= inv;
      grad.weights[c][i] += l2 * model.weights[c][i];
    }
  }
  return grad;
}

LinearModel train_logistic(const Dataset& data, std::size_t class_count,
                           const TrainConfig& config, Task task,
                           std::string feature_schema_id, Language language,
                           std::vector<double>* loss_trace) {
  check_dataset(data, class_count);
  const std::size_t dim = data.front().features.size();

  LinearModel model;
  model.task = task;
  model.language = language;
  model.feature_schema_id = std::move(feature_schema_id);
  model.bias.assign(class_count, 0.0);
  model.weights.assign(class_count, std::vector<double>(dim, 0.0));

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> init(0.0, 1e-3);
  for (auto& row : model.weights)
    for (auto& w : row) w = init(rng);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const LossGradient grad = logistic_gradient(model, data, config.l2);
    for (std::size_t c = 0; c < class_count; ++c) {
      model.bias[c] -= config.learning_rate * grad.bias[c];
      for (std::size_t i = 0; i < dim; ++i)
        model.weights[c][i] -= config.learning_rate * grad.weights[c][i];
    }
    if (loss_trace)
      loss_trace->push_back(logistic_loss(model, data, config.l2));
  }
  return model;
}

std::vector<double> predict_probabilities(const LinearModel& model,
                                          std::span<const double> features) {
  check_model_input(model, features);
  return softmax(logits_of(model, features));
}

Prediction predict(const LinearModel& model, std::span<const double> features) {
  const auto probs = predict_probabilities(model, features);
  std::size_t best = 0;
  for (std::size_t c = 1; c < probs.size(); ++c)
    if (probs[c] > probs[best]) best = c;
  return {static_cast<int>(best), probs[best]};
}

namespace {

void check_task_and_schema(const LinearModel& model, Task expected,
                           const std::string& schema_id) {
  if (model.task != expected)
    throw std::invalid_argument(std::string("model trained for task ") +
                                to_string(model.task) + ", expected " +
                                to_string(expected));
  if (model.feature_schema_id != schema_id)
    throw std::invalid_argument("feature schema mismatch: model has \"" +
                                model.feature_schema_id + "\", input has \"" +
                                schema_id + "\"");
}

}  // namespace

AduPrediction classify_adu(const FeatureVector& features,
                           const LinearModel& model) {
  check_task_and_schema(model, Task::Adu, features.schema_id);
  const Prediction p = predict(model, features.dense());
  return {static_cast<AduLabel>(p.cls), p.probability};
}

RolePrediction classify_claim_premise(const FeatureVector& features,
                                      const LinearModel& model) {
  check_task_and_schema(model, Task::ClaimPremise, features.schema_id);
  const Prediction p = predict(model, features.dense());
  return {static_cast<RoleBinary>(p.cls), p.probability};
}

std::vector<double> relation_features(std::span<const double> premise_embedding,
                                      std::span<const double> claim_embedding) {
  if (premise_embedding.size() != claim_embedding.size())
    throw std::invalid_argument("relation embeddings differ in dimension");
  std::vector<double> out;
  out.reserve(premise_embedding.size() * 3);
  out.insert(out.end(), premise_embedding.begin(), premise_embedding.end());
  out.insert(out.end(), claim_embedding.begin(), claim_embedding.end());
  for (std::size_t i = 0; i < premise_embedding.size(); ++i)
    out.push_back(premise_embedding[i] - claim_embedding[i]);
  return out;
}

std::string relation_schema_id(std::size_t embedding_dimension) {
  return "rel-v1/d" + std::to_string(3 * embedding_dimension);
}

RelationPrediction classify_relation(std::span<const double> premise_embedding,
                                     std::span<const double> claim_embedding,
                                     const LinearModel& model,
                                     double neutral_threshold) {
  if (neutral_threshold < 0.5 || neutral_threshold > 1.0)
    throw std::invalid_argument("neutral threshold must lie in [0.5, 1.0]");
  if (model.task != Task::Relation)
    throw std::invalid_argument("model is not a relation model");
  const auto features = relation_features(premise_embedding, claim_embedding);
  const Prediction p = predict(model, features);

  RelationPrediction out;
  out.stance = p.cls == 1 ? Stance::Attack : Stance::Support;
  out.probability = p.probability;
  // Threshold 1.0 must force Support even for a fully confident model.
  out.neutral = neutral_threshold >= 1.0 || p.probability < neutral_threshold;
  if (out.neutral) out.stance = Stance::Support;
  return out;
}

EvalStats stats_from_counts(std::size_t tp, std::size_t fp, std::size_t fn,
                            std::size_t tn) {
  const double total = static_cast<double>(tp + fp + fn + tn);
  EvalStats s;
  s.accuracy = total > 0 ? static_cast<double>(tp + tn) / total : 0.0;
  s.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  s.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

EvalStats evaluate(const LinearModel& model, const Dataset& test,
                   int positive_class) {
  if (test.empty()) throw std::invalid_argument("test set must not be empty");
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (const auto& ex : test) {
    const Prediction p = predict(model, ex.features);
    const bool predicted = p.cls == positive_class;
    const bool actual = ex.label == positive_class;
    if (predicted && actual) ++tp;
    else if (predicted && !actual) ++fp;
    else if (!predicted && actual) ++fn;
    else ++tn;
  }
  return stats_from_counts(tp, fp, fn, tn);
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& data, double ratio,
                                             std::uint64_t seed) {
  if (data.empty()) throw std::invalid_argument("dataset must not be empty");
  if (ratio <= 0.0 || ratio >= 1.0)
    throw std::invalid_argument("ratio must lie strictly between 0 and 1");
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const auto train_size = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(data.size())));
  Dataset train, test;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < train_size ? train : test).push_back(data[order[i]]);
  return {std::move(train), std::move(test)};
}

std::vector<Dataset> stratified_folds(const Dataset& data, std::size_t k,
                                      std::uint64_t seed) {
  if (data.empty()) throw std::invalid_argument("dataset must not be empty");
  if (k < 2) throw std::invalid_argument("need at least two folds");

  std::unordered_map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < data.size(); ++i)
    by_class[data[i].label].push_back(i);

  std::vector<int> labels;
  for (const auto& [label, members] : by_class) labels.push_back(label);
  std::sort(labels.begin(), labels.end());

  std::mt19937_64 rng(seed);
  std::vector<Dataset> folds(k);
  for (int label : labels) {
    auto& members = by_class[label];
    if (members.size() < k)
      throw std::invalid_argument("class " + std::to_string(label) +
                                  " has fewer members than folds");
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 0; i < members.size(); ++i)
      folds[i % k].push_back(data[members[i]]);
  }
  return folds;
}

void save_model(const LinearModel& model, const std::filesystem::path& path) {
  json doc;
  doc["format"] = "argmine-model";
  doc["version"] = 1;
  doc["task"] = to_string(model.task);
  doc["language"] = to_string(model.language);
  doc["featureSchema"] = model.feature_schema_id;
  doc["weights"] = model.weights;
  doc["bias"] = model.bias;

  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write model file: " + path.string());
  out << doc.dump(2) << "\n";
  if (!out)
    throw std::runtime_error("failed writing model file: " + path.string());
}

namespace {

// Schema ids carry the expected dimension as a "/dN" suffix.
std::optional<std::size_t> schema_dimension(const std::string& schema_id) {
  const auto pos = schema_id.rfind("/d");
  if (pos == std::string::npos) return std::nullopt;
  const std::string digits = schema_id.substr(pos + 2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return static_cast<std::size_t>(std::stoull(digits));
}

}  // namespace

LinearModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read model file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error("corrupt model file " + path.string() + ": " +
                             e.what());
  }
  if (doc.value("format", std::string{}) != "argmine-model")
    throw std::runtime_error("not a model file: " + path.string());
  if (doc.value("version", 0) != 1)
    throw std::runtime_error("unsupported model version in " + path.string());

  LinearModel model;
  try {
    model.task = task_from_string(doc.at("task").get<std::string>());
    model.language = language_from_string(doc.at("language").get<std::string>());
    model.feature_schema_id = doc.at("featureSchema").get<std::string>();
    model.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
    model.bias = doc.at("bias").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw std::runtime_error("corrupt model file " + path.string() + ": " +
                             e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("corrupt model file " + path.string() + ": " +
                             e.what());
  }

  if (model.weights.empty() || model.bias.size() != model.weights.size())
    throw std::runtime_error("model shape mismatch in " + path.string());
  const std::size_t dim = model.weights.front().size();
  for (const auto& row : model.weights)
    if (row.size() != dim || dim == 0)
      throw std::runtime_error("model shape mismatch in " + path.string());
  if (auto expected = schema_dimension(model.feature_schema_id);
      expected && *expected != dim)
    throw std::runtime_error(
        "model dimension " + std::to_string(dim) +
        " does not match feature schema " + model.feature_schema_id);
  return model;
}

void RelationMatrix::set(std::size_t from, std::size_t to,
                         RelationPrediction prediction) {
  if (from == to)
    throw std::invalid_argument("relation matrix diagonal must stay empty");
  if (from >= unit_count_ || to >= unit_count_)
    throw std::invalid_argument("relation matrix index out of range");
  if (prediction.probability < 0.0 || prediction.probability > 1.0)
    throw std::invalid_argument("relation probability outside [0, 1]");
  cells_[from * unit_count_ + to] = prediction;
}

const RelationPrediction* RelationMatrix::get(std::size_t from,
                                              std::size_t to) const {
  if (from >= unit_count_ || to >= unit_count_ || from == to) return nullptr;
  const auto& cell = cells_[from * unit_count_ + to];
  return cell ? &*cell : nullptr;
}

}  // namespace argmine
