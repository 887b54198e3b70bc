#include "argmine/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace argmine {

const char* to_string(PipelineMode mode) {
  return mode == PipelineMode::EndToEnd ? "end-to-end" : "preset";
}

PipelineMode pipeline_mode_from_string(std::string_view name) {
  if (name == "end-to-end" || name == "e2e") return PipelineMode::EndToEnd;
  if (name == "preset" || name == "preset-adus") return PipelineMode::PresetAdus;
  throw std::invalid_argument("unknown pipeline mode: " + std::string(name));
}

LexiconSet LexiconSet::defaults(Language language) {
  return {SegmenterOptions::defaults(language),
          IndicatorLexicons::defaults(language)};
}

LexiconSet LexiconSet::from_directory(const std::filesystem::path& dir) {
  LexiconSet set;
  set.segmenter.abbreviations = load_lexicon(dir / "abbreviations.txt");
  set.indicators.claim = load_lexicon(dir / "claim_indicators.txt");
  set.indicators.premise = load_lexicon(dir / "premise_indicators.txt");
  set.indicators.first_person = load_lexicon(dir / "first_person.txt");
  set.indicators.modal = load_lexicon(dir / "modal_verbs.txt");
  return set;
}

void PipelineConfig::check() const {
  if (neutral_threshold < 0.5 || neutral_threshold > 1.0)
    throw std::invalid_argument("neutral_threshold must lie in [0.5, 1.0]");
  if (bound_factor <= 0.0 || bound_factor > 1.0)
    throw std::invalid_argument("bound_factor must lie in (0, 1]");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be at least 1");
  static const char* mc_methods[] = {"first", "centroid", "pairwise",
                                     "probability"};
  if (std::find(std::begin(mc_methods), std::end(mc_methods), mc_method) ==
      std::end(mc_methods))
    throw std::invalid_argument("unknown major claim method: " + mc_method);
  static const char* constructors[] = {"flat", "position", "pairwise"};
  if (std::find(std::begin(constructors), std::end(constructors),
                constructor_name) == std::end(constructors))
    throw std::invalid_argument("unknown graph constructor: " +
                                constructor_name);
}

namespace {

bool parse_bool(std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("expected a boolean, got: " + std::string(value));
}

double parse_double(std::string_view value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw std::invalid_argument("expected a number, got: " + std::string(value));
  return out;
}

std::uint64_t parse_unsigned(std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw std::invalid_argument("expected an unsigned integer, got: " +
                                std::string(value));
  return out;
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (!base.empty() && p.is_relative()) return base / p;
  return p;
}

}  // namespace

void apply_config_entry(PipelineConfig& config, std::string_view key,
                        std::string_view value,
                        const std::filesystem::path& base_dir) {
  if (key == "language") config.language = language_from_string(value);
  else if (key == "mode") config.mode = pipeline_mode_from_string(value);
  else if (key == "mc_method") config.mc_method = std::string(value);
  else if (key == "constructor") config.constructor_name = std::string(value);
  else if (key == "neutral_threshold") config.neutral_threshold = parse_double(value);
  else if (key == "bound_factor") config.bound_factor = parse_double(value);
  else if (key == "bound_mode") {
    if (value == "relative") config.relative_bound = true;
    else if (value == "absolute") config.relative_bound = false;
    else throw std::invalid_argument("bound_mode must be relative or absolute");
  }
  else if (key == "max_iterations") config.max_iterations = parse_unsigned(value);
  else if (key == "mc_probability_direction")
    config.mc_probability_direction = probability_direction_from_string(value);
  else if (key == "inode_weighted") config.inode_length_weighted = parse_bool(value);
  else if (key == "workers") config.workers = parse_unsigned(value);
  else if (key == "seed") config.seed = parse_unsigned(value);
  else if (key == "vectors") config.vectors_path = resolve(base_dir, value);
  else if (key == "adu_model") config.adu_model_path = resolve(base_dir, value);
  else if (key == "claim_premise_model")
    config.claim_premise_model_path = resolve(base_dir, value);
  else if (key == "relation_model")
    config.relation_model_path = resolve(base_dir, value);
  else if (key == "lexicon_dir") config.lexicon_dir = resolve(base_dir, value);
  else throw std::invalid_argument("unknown config key: " + std::string(key));
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read config file: " + path.string());

  PipelineConfig config;
  const std::filesystem::path base = path.parent_path();
  bool version_seen = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t'))
      view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;

    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected key = value");
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
      return s;
    };
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key == "version") {
      if (value != "1")
        throw std::runtime_error("unsupported config version: " +
                                 std::string(value));
      version_seen = true;
      continue;
    }
    try {
      apply_config_entry(config, key, value, base);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  if (!version_seen)
    throw std::runtime_error(path.string() + ": missing version key");
  config.check();
  return config;
}

PipelineModels PipelineModels::load(const PipelineConfig& config) {
  config.check();
  PipelineModels models;
  if (config.vectors_path.empty())
    throw std::invalid_argument("config does not name a vector file");
  models.vectors = EmbeddingTable::load(config.vectors_path);

  models.lexicons = config.lexicon_dir.empty()
                        ? LexiconSet::defaults(config.language)
                        : LexiconSet::from_directory(config.lexicon_dir);

  auto load_checked = [&](const std::filesystem::path& path, Task task,
                          const std::string& expected_schema) {
    LinearModel model = load_model(path);
    if (model.task != task)
      throw std::runtime_error(path.string() + ": expected a " +
                               std::string(to_string(task)) + " model, found " +
                               to_string(model.task));
    if (model.language != config.language)
      throw std::runtime_error(path.string() + ": model language " +
                               to_string(model.language) +
                               " does not match configured language " +
                               to_string(config.language));
    if (model.feature_schema_id != expected_schema)
      throw std::runtime_error(path.string() + ": feature schema " +
                               model.feature_schema_id + " does not match " +
                               expected_schema +
                               " derived from the vector table");
    return model;
  };

  const std::string adu_schema = feature_schema_id(models.vectors.dimension());
  const std::string rel_schema = relation_schema_id(models.vectors.dimension());
  if (!config.adu_model_path.empty())
    models.adu_model = load_checked(config.adu_model_path, Task::Adu, adu_schema);
  if (!config.claim_premise_model_path.empty())
    models.claim_premise_model = load_checked(config.claim_premise_model_path,
                                              Task::ClaimPremise, adu_schema);
  if (config.relation_model_path.empty())
    throw std::invalid_argument("config does not name a relation model");
  models.relation_model =
      load_checked(config.relation_model_path, Task::Relation, rel_schema);
  return models;
}

Pipeline::Pipeline(PipelineConfig config,
                   std::shared_ptr<const PipelineModels> models)
    : config_(std::move(config)), models_(std::move(models)) {
  config_.check();
  if (!models_) throw std::invalid_argument("pipeline needs loaded models");
}

PipelineResult Pipeline::finish(
    std::vector<Adu> units, std::size_t mc_index, RelationMatrix relations,
    StageCounts counts,
    std::chrono::steady_clock::time_point started) const {
  BuiltGraph built = build_graph(config_.constructor_name, units, mc_index,
                                 relations, config_.pairwise_options());

  PipelineResult result;
  result.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  result.graph = std::move(built.graph);
  result.counts = counts;
  result.artifacts = {std::move(units), mc_index, std::move(relations),
                      std::move(built.unit_inode_ids)};
  return result;
}

PipelineResult Pipeline::run_text(std::string_view text) const {
  if (!models_->adu_model || !models_->claim_premise_model)
    throw std::invalid_argument(
        "end-to-end mode needs an ADU model and a claim-premise model");

  const auto started = std::chrono::steady_clock::now();
  StageCounts counts;

  ++counts.segment_calls;
  const auto spans = segment(text, models_->lexicons.segmenter);

  std::vector<Adu> units;
  for (const auto& span : spans) {
    FeatureVector features =
        extract_features(span, spans.size(), models_->vectors,
                         config_.language, models_->lexicons.indicators);
    ++counts.adu_classifications;
    const AduPrediction adu = classify_adu(features, *models_->adu_model);
    if (adu.label != AduLabel::Argumentative) continue;

    ++counts.role_classifications;
    const RolePrediction role =
        classify_claim_premise(features, *models_->claim_premise_model);

    Adu unit;
    unit.span = span;
    unit.role = role.label == RoleBinary::Claim ? AduRole::Claim
                                                : AduRole::Premise;
    unit.embedding = features.embedding;
    unit.features = std::move(features);
    units.push_back(std::move(unit));
  }

  if (units.empty()) {
    PipelineResult result;
    result.elapsed_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
    result.counts = counts;
    return result;  // no argument found
  }

  RelationMatrix relations = predict_relations(
      units, models_->relation_model, config_.neutral_threshold);
  counts.relation_predictions += units.size() * (units.size() - 1);

  ++counts.mc_selections;
  std::size_t mc_index = 0;
  if (units.size() > 1) {
    // The centroid heuristic rejects all-zero embeddings; fall back to text
    // order when the vocabulary fully misses the document.
    const bool any_embedding =
        std::any_of(units.begin(), units.end(),
                    [](const Adu& u) { return !u.embedding.all_oov; });
    std::string method = config_.mc_method;
    if (!any_embedding && method == "centroid") method = "first";
    mc_index = select_major_claim(method, units, relations,
                                  config_.mc_probability_direction);
  }

  return finish(std::move(units), mc_index, std::move(relations), counts,
                started);
}

PipelineResult Pipeline::run_preset(const std::vector<PresetAdu>& adus) const {
  const auto started = std::chrono::steady_clock::now();
  StageCounts counts;

  const auto spans = preset_segments(adus);
  std::vector<Adu> units;
  units.reserve(adus.size());
  std::size_t mc_index = 0;
  bool mc_seen = false;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    Adu unit;
    unit.span = spans[i];
    unit.features = extract_features(spans[i], spans.size(), models_->vectors,
                                     config_.language,
                                     models_->lexicons.indicators);
    unit.embedding = unit.features.embedding;
    if (adus[i].role == AduRole::MajorClaim && !mc_seen) {
      mc_index = i;
      mc_seen = true;
      unit.role = AduRole::MajorClaim;
    } else {
      unit.role = adus[i].role == AduRole::Premise ? AduRole::Premise
                                                   : AduRole::Claim;
    }
    units.push_back(std::move(unit));
  }

  RelationMatrix relations = predict_relations(
      units, models_->relation_model, config_.neutral_threshold);
  counts.relation_predictions += units.size() * (units.size() - 1);

  return finish(std::move(units), mc_index, std::move(relations), counts,
                started);
}

}  // namespace argmine
