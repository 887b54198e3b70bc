#include "argmine/majorclaim.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace argmine {

namespace {

void require_nonempty(std::span<const Adu> adus) {
  if (adus.empty()) throw std::invalid_argument("ADU list must not be empty");
}

// Shared argmax with earliest-position tie rule.
std::size_t best_index(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i] > scores[best]) best = i;
  return best;
}

}  // namespace

std::size_t mc_first(std::span<const Adu> adus) {
  require_nonempty(adus);
  for (std::size_t i = 0; i < adus.size(); ++i)
    if (adus[i].role == AduRole::Claim || adus[i].role == AduRole::MajorClaim)
      return i;
  return 0;
}

std::size_t mc_centroid(std::span<const Adu> adus) {
  require_nonempty(adus);
  const std::size_t dim = adus.front().embedding.values.size();
  std::vector<double> centroid(dim, 0.0);
  bool any_nonzero = false;
  for (const auto& adu : adus) {
    if (adu.embedding.values.size() != dim)
      throw std::invalid_argument("embeddings differ in dimension");
    for (std::size_t i = 0; i < dim; ++i)
      centroid[i] += adu.embedding.values[i];
    for (double v : adu.embedding.values)
      if (v != 0.0) any_nonzero = true;
  }
  if (!any_nonzero)
    throw std::invalid_argument("all embeddings are zero");
  for (auto& v : centroid) v /= static_cast<double>(adus.size());

  std::vector<double> scores(adus.size());
  for (std::size_t i = 0; i < adus.size(); ++i)
    scores[i] = cosine(adus[i].embedding.values, centroid);
  return best_index(scores);
}

std::size_t mc_pairwise(std::span<const Adu> adus) {
  require_nonempty(adus);
  if (adus.size() == 1) return 0;
  std::vector<double> scores(adus.size(), 0.0);
  for (std::size_t i = 0; i < adus.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < adus.size(); ++j) {
      if (i == j) continue;
      sum += cosine(adus[i].embedding.values, adus[j].embedding.values);
    }
    scores[i] = sum / static_cast<double>(adus.size() - 1);
  }
  return best_index(scores);
}

ProbabilityDirection probability_direction_from_string(std::string_view name) {
  if (name == "incoming") return ProbabilityDirection::Incoming;
  if (name == "both") return ProbabilityDirection::Both;
  throw std::invalid_argument("unknown probability direction: " +
                              std::string(name));
}

namespace {

std::size_t probability_argmax(
    std::span<const Adu> adus, ProbabilityDirection direction,
    const std::function<const RelationPrediction*(std::size_t, std::size_t)>&
        prediction) {
  std::vector<double> scores(adus.size(), 0.0);
  for (std::size_t candidate = 0; candidate < adus.size(); ++candidate) {
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t other = 0; other < adus.size(); ++other) {
      if (other == candidate) continue;
      if (const auto* p = prediction(other, candidate); p && !p->neutral) {
        sum += p->probability;
        ++used;
      }
      if (direction == ProbabilityDirection::Both) {
        if (const auto* p = prediction(candidate, other); p && !p->neutral) {
          sum += p->probability;
          ++used;
        }
      }
    }
    scores[candidate] = used > 0 ? sum / static_cast<double>(used) : 0.0;
  }
  return best_index(scores);
}

}  // namespace

std::size_t mc_probability(std::span<const Adu> adus,
                           const LinearModel& relation_model,
                           double neutral_threshold,
                           ProbabilityDirection direction) {
  require_nonempty(adus);
  if (adus.size() == 1) return 0;

  std::vector<RelationPrediction> cache(adus.size() * adus.size());
  std::vector<bool> cached(adus.size() * adus.size(), false);
  auto lookup = [&](std::size_t from, std::size_t to) -> const RelationPrediction* {
    const std::size_t key = from * adus.size() + to;
    if (!cached[key]) {
      cache[key] =
          classify_relation(adus[from].embedding.values,
                            adus[to].embedding.values, relation_model,
                            neutral_threshold);
      cached[key] = true;
    }
    return &cache[key];
  };
  return probability_argmax(adus, direction, lookup);
}

std::size_t mc_probability(std::span<const Adu> adus,
                           const RelationMatrix& relations,
                           ProbabilityDirection direction) {
  require_nonempty(adus);
  if (adus.size() == 1) return 0;
  if (relations.unit_count() != adus.size())
    throw std::invalid_argument("relation matrix size does not match ADU list");
  auto lookup = [&](std::size_t from, std::size_t to) {
    return relations.get(from, to);
  };
  return probability_argmax(adus, direction, lookup);
}

std::size_t select_major_claim(std::string_view method,
                               std::span<const Adu> adus,
                               const RelationMatrix& relations,
                               ProbabilityDirection direction) {
  if (method == "first") return mc_first(adus);
  if (method == "centroid") return mc_centroid(adus);
  if (method == "pairwise") return mc_pairwise(adus);
  if (method == "probability") return mc_probability(adus, relations, direction);
  throw std::invalid_argument("unknown major claim method: " +
                              std::string(method));
}

}  // namespace argmine
