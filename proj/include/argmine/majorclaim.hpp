#pragma once

#include <cstddef>
#include <span>

#include "argmine/classify.hpp"
#include "argmine/features.hpp"
#include "argmine/segment.hpp"

namespace argmine {

/// One classified argumentative discourse unit.
struct Adu {
  SentenceSpan span;
  AduRole role = AduRole::Premise;
  SentenceEmbedding embedding;
  FeatureVector features;
};

/// Earliest claim by text position; if no unit is a claim, the earliest unit
/// overall. Throws on an empty list.
std::size_t mc_first(std::span<const Adu> adus);

/// Unit whose embedding has the highest cosine similarity to the mean of all
/// embeddings; ties go to the earlier unit. Throws on an empty list or when
/// every embedding is zero.
std::size_t mc_centroid(std::span<const Adu> adus);

/// Unit with the highest mean cosine similarity to every other unit; ties go
/// to the earlier unit. A singleton returns itself.
std::size_t mc_pairwise(std::span<const Adu> adus);

/// Which predictions count toward a candidate's score: only pairs where the
/// candidate is the claim, or additionally pairs where it is the premise.
enum class ProbabilityDirection { Incoming, Both };

ProbabilityDirection probability_direction_from_string(std::string_view name);

/// Unit with the highest mean relation probability over its non-neutral
/// pair predictions; units with only neutral predictions score 0. Ties go to
/// the earlier unit.
std::size_t mc_probability(std::span<const Adu> adus,
                           const LinearModel& relation_model,
                           double neutral_threshold,
                           ProbabilityDirection direction =
                               ProbabilityDirection::Incoming);

/// Same scoring over an already computed prediction matrix (indexed like the
/// adus list).
std::size_t mc_probability(std::span<const Adu> adus,
                           const RelationMatrix& relations,
                           ProbabilityDirection direction =
                               ProbabilityDirection::Incoming);

/// Dispatch by configured name: "first", "centroid", "pairwise" or
/// "probability".
std::size_t select_major_claim(std::string_view method, std::span<const Adu> adus,
                               const RelationMatrix& relations,
                               ProbabilityDirection direction);

}  // namespace argmine
