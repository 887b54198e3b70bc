#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/classify.hpp"
#include "argmine/construct.hpp"
#include "argmine/features.hpp"
#include "argmine/graph.hpp"
#include "argmine/majorclaim.hpp"
#include "argmine/segment.hpp"

namespace argmine {

enum class PipelineMode { EndToEnd, PresetAdus };

const char* to_string(PipelineMode mode);
PipelineMode pipeline_mode_from_string(std::string_view name);

/// Per-language word lists used by segmentation and feature extraction.
/// from_directory expects abbreviations.txt, claim_indicators.txt,
/// premise_indicators.txt, first_person.txt and modal_verbs.txt.
struct LexiconSet {
  SegmenterOptions segmenter;
  IndicatorLexicons indicators;
  static LexiconSet defaults(Language language);
  static LexiconSet from_directory(const std::filesystem::path& dir);
};

struct PipelineConfig {
  Language language = Language::EN;
  PipelineMode mode = PipelineMode::EndToEnd;
  std::string mc_method = "centroid";        // first|centroid|pairwise|probability
  std::string constructor_name = "flat";     // flat|position|pairwise
  double neutral_threshold = 0.6;            // in [0.5, 1.0]
  double bound_factor = 0.98;
  bool relative_bound = true;
  std::size_t max_iterations = 10;
  ProbabilityDirection mc_probability_direction = ProbabilityDirection::Incoming;
  bool inode_length_weighted = true;
  std::size_t workers = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 0;

  std::filesystem::path vectors_path;
  std::filesystem::path adu_model_path;
  std::filesystem::path claim_premise_model_path;
  std::filesystem::path relation_model_path;
  std::filesystem::path lexicon_dir;

  /// Throws std::invalid_argument when a range or name constraint is broken.
  void check() const;

  PairwiseOptions pairwise_options() const {
    return {bound_factor, relative_bound, max_iterations};
  }
};

/// Reads the flat key-value config format ("key = value" lines, '#'
/// comments, mandatory "version = 1"). Relative paths resolve against the
/// config file's directory. Unknown keys are rejected.
PipelineConfig load_config(const std::filesystem::path& path);

/// Applies one "key=value" override (same keys as the config file).
void apply_config_entry(PipelineConfig& config, std::string_view key,
                        std::string_view value,
                        const std::filesystem::path& base_dir = {});

/// Everything loaded from disk before processing starts. Loading happens
/// once; the instance is immutable afterwards and may be shared across
/// worker threads.
struct PipelineModels {
  EmbeddingTable vectors;
  std::optional<LinearModel> adu_model;           // end-to-end mode only
  std::optional<LinearModel> claim_premise_model; // end-to-end mode only
  LinearModel relation_model;
  LexiconSet lexicons;

  /// Loads the files named by the config and cross-checks languages and
  /// feature schema dimensions against the vector table.
  static PipelineModels load(const PipelineConfig& config);
};

/// How often each stage ran during one pipeline invocation. Preset runs keep
/// the segmentation, ADU classification and major claim counters at zero.
struct StageCounts {
  std::size_t segment_calls = 0;
  std::size_t adu_classifications = 0;
  std::size_t role_classifications = 0;
  std::size_t mc_selections = 0;
  std::size_t relation_predictions = 0;
};

struct PipelineArtifacts {
  std::vector<Adu> units;  // major claim included
  std::size_t major_claim_index = 0;
  RelationMatrix relations;
  std::vector<std::string> unit_inode_ids;
};

struct PipelineResult {
  std::optional<ArgumentGraph> graph;  // empty = no argument found
  double elapsed_s = 0.0;              // excludes model/vector loading
  StageCounts counts;
  PipelineArtifacts artifacts;

  bool no_argument() const { return !graph.has_value(); }
};

class Pipeline {
 public:
  Pipeline(PipelineConfig config, std::shared_ptr<const PipelineModels> models);

  /// End-to-end: segment, classify, pick the major claim, construct.
  /// Sentences classified non-argumentative are dropped; when none survive
  /// the result reports no argument instead of failing.
  PipelineResult run_text(std::string_view text) const;

  /// Preset mode: benchmark units, roles and major claim are taken as given;
  /// only relation typing and construction run.
  PipelineResult run_preset(const std::vector<PresetAdu>& adus) const;

  const PipelineConfig& config() const { return config_; }
  const PipelineModels& models() const { return *models_; }

 private:
  PipelineResult finish(std::vector<Adu> units, std::size_t mc_index,
                        RelationMatrix relations, StageCounts counts,
                        std::chrono::steady_clock::time_point started) const;

  PipelineConfig config_;
  std::shared_ptr<const PipelineModels> models_;
};

}  // namespace argmine
