#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argmine/segment.hpp"

namespace argmine {

/// Word vectors loaded from a text file (one token plus D decimals per
/// line). Lookup is case-normalized; read-only after construction.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(std::size_t dimension,
                 std::unordered_map<std::string, std::vector<double>> entries);

  /// Throws on unreadable files, files without vectors, dimension mismatches
  /// between lines (or against expected_dimension) and non-numeric fields.
  /// Duplicate tokens keep the first occurrence.
  static EmbeddingTable load(const std::filesystem::path& path,
                             std::optional<std::size_t> expected_dimension = {});

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<double>* find(std::string_view token) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

/// Lowercased word tokens; punctuation is dropped.
std::vector<std::string> tokenize(std::string_view text);

/// Mean of the word vectors found in the table. Tokens missing from the
/// table are skipped; if nothing matches, the zero vector is returned with
/// all_oov set.
struct SentenceEmbedding {
  std::vector<double> values;
  bool all_oov = false;
};

SentenceEmbedding sentence_embedding(const std::vector<std::string>& tokens,
                                     const EmbeddingTable& table);

/// Cosine similarity in [-1, 1]. Throws on dimension mismatch; returns 0
/// when either vector is zero.
double cosine(std::span<const double> a, std::span<const double> b);

/// Phrase and token lists backing the indicator features.
struct IndicatorLexicons {
  std::vector<std::string> claim;
  std::vector<std::string> premise;
  std::vector<std::string> first_person;
  std::vector<std::string> modal;
  static IndicatorLexicons defaults(Language language);
};

/// Per-sentence features. The two syntactic entries are proxies computed
/// from surface cues (bracket nesting, commas and subordinating
/// conjunctions) instead of a constituency parse; the slots keep the same
/// meaning so a parser-backed extractor can slot in later.
struct FeatureVector {
  double punctuation_count = 0;
  double token_count = 0;
  double sentence_index = 0;
  double relative_position = 0;  // in [0, 1]
  bool claim_indicator = false;
  bool premise_indicator = false;
  bool first_person = false;
  bool modal_verb = false;
  double clause_count_proxy = 0;
  double token_depth_proxy = 0;
  SentenceEmbedding embedding;
  std::string schema_id;

  /// Numeric layout consumed by the classifiers: the ten scalar features
  /// above followed by the embedding components.
  std::vector<double> dense() const;
};

/// Schema tag for ADU-level feature vectors over a D-dimensional table.
std::string feature_schema_id(std::size_t embedding_dimension);

FeatureVector extract_features(const SentenceSpan& span,
                               std::size_t doc_sentence_count,
                               const EmbeddingTable& table, Language language);
FeatureVector extract_features(const SentenceSpan& span,
                               std::size_t doc_sentence_count,
                               const EmbeddingTable& table, Language language,
                               const IndicatorLexicons& lexicons);

}  // namespace argmine
