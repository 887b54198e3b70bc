#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "argmine/graph.hpp"
#include "argmine/segment.hpp"

namespace argmine {

struct CorpusCase {
  std::string id;
  std::optional<std::string> text;
  std::vector<PresetAdu> preset_adus;  // derived from the benchmark graph
  std::optional<ArgumentGraph> benchmark;
  bool benchmark_missing = false;  // text present, benchmark absent
};

enum class CorpusLayout { AifJson, PlainTextPairs };

CorpusLayout corpus_layout_from_string(std::string_view name);

/// AifJson pairs <id>.txt with <id>.json benchmarks; a text without a
/// benchmark is loaded flagged, a benchmark without its text is an error.
/// PlainTextPairs loads every .txt as a mining-only case. Cases come back
/// sorted by id.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& directory,
                                    CorpusLayout layout);

/// Unit texts plus roles read off the benchmark structure: the annotated
/// major claim, claims (I-nodes one S-node away from it) and premises.
std::vector<PresetAdu> derive_preset_adus(const ArgumentGraph& benchmark);

struct CorpusStats {
  std::size_t cases = 0;
  std::size_t with_benchmark = 0;
  std::size_t inodes = 0;
  std::size_t snodes = 0;
  std::size_t edges = 0;
};

CorpusStats corpus_stats(const std::vector<CorpusCase>& cases);

}  // namespace argmine
