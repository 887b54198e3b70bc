#include "argmine/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace argmine {

CorpusLayout corpus_layout_from_string(std::string_view name) {
  if (name == "aif" || name == "aif-json") return CorpusLayout::AifJson;
  if (name == "text" || name == "plain-text") return CorpusLayout::PlainTextPairs;
  throw std::invalid_argument("unknown corpus layout: " + std::string(name));
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::vector<PresetAdu> derive_preset_adus(const ArgumentGraph& benchmark) {
  std::unordered_set<std::string> claims;
  if (benchmark.has_major_claim()) {
    // Claims sit one S-node away from the major claim.
    for (const auto& snode : benchmark.snodes()) {
      bool feeds_mc = false;
      for (const auto& e : benchmark.edges())
        if (e.from == snode.id && e.to == benchmark.major_claim()) feeds_mc = true;
      if (!feeds_mc) continue;
      for (const auto& e : benchmark.edges())
        if (e.to == snode.id && benchmark.is_inode(e.from)) claims.insert(e.from);
    }
  }

  std::vector<PresetAdu> adus;
  adus.reserve(benchmark.inodes().size());
  for (const auto& node : benchmark.inodes()) {
    AduRole role = AduRole::Premise;
    if (benchmark.has_major_claim() && node.id == benchmark.major_claim())
      role = AduRole::MajorClaim;
    else if (claims.count(node.id))
      role = AduRole::Claim;
    adus.push_back({node.text, role});
  }
  return adus;
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& directory,
                                    CorpusLayout layout) {
  if (!std::filesystem::is_directory(directory))
    throw std::runtime_error("not a corpus directory: " + directory.string());

  std::map<std::string, std::pair<std::filesystem::path, std::filesystem::path>>
      stems;  // id -> (txt, json)
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    const std::string stem = entry.path().stem().string();
    if (ext == ".txt") stems[stem].first = entry.path();
    else if (ext == ".json") stems[stem].second = entry.path();
  }

  std::vector<CorpusCase> cases;
  for (const auto& [stem, paths] : stems) {
    const auto& [txt, json] = paths;
    CorpusCase item;
    item.id = stem;

    if (layout == CorpusLayout::PlainTextPairs) {
      if (txt.empty()) continue;
      item.text = read_file(txt);
      item.benchmark_missing = true;
      cases.push_back(std::move(item));
      continue;
    }

    if (!json.empty() && txt.empty())
      throw std::runtime_error("orphan benchmark without text: " +
                               json.string());
    if (txt.empty()) continue;
    item.text = read_file(txt);
    if (json.empty()) {
      item.benchmark_missing = true;
    } else {
      try {
        item.benchmark = ArgumentGraph::from_aif_json(
            read_file(json), /*require_major_claim=*/false);
      } catch (const std::exception& e) {
        throw std::runtime_error("malformed graph file " + json.string() +
                                 ": " + e.what());
      }
      item.preset_adus = derive_preset_adus(*item.benchmark);
    }
    cases.push_back(std::move(item));
  }
  return cases;  // std::map iteration keeps ids sorted
}

CorpusStats corpus_stats(const std::vector<CorpusCase>& cases) {
  CorpusStats stats;
  stats.cases = cases.size();
  for (const auto& item : cases) {
    if (!item.benchmark) continue;
    ++stats.with_benchmark;
    stats.inodes += item.benchmark->inodes().size();
    stats.snodes += item.benchmark->snodes().size();
    stats.edges += item.benchmark->edges().size();
  }
  return stats;
}

}  // namespace argmine
