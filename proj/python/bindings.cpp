#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "argmine/evaluation.hpp"
#include "argmine/metrics.hpp"
#include "argmine/pipeline.hpp"

namespace py = pybind11;
using namespace argmine;

// std::span parameters are re-exposed through vector-taking lambdas below.

PYBIND11_MODULE(_core, m) {
  m.doc() = "Argument graph mining core: segmentation, classification, "
            "major claim detection, graph construction and agreement metrics";

  py::enum_<Language>(m, "Language")
      .value("EN", Language::EN)
      .value("DE", Language::DE);
  py::enum_<Stance>(m, "Stance")
      .value("SUPPORT", Stance::Support)
      .value("ATTACK", Stance::Attack);
  py::enum_<AduRole>(m, "AduRole")
      .value("MAJOR_CLAIM", AduRole::MajorClaim)
      .value("CLAIM", AduRole::Claim)
      .value("PREMISE", AduRole::Premise);
  py::enum_<Task>(m, "Task")
      .value("ADU", Task::Adu)
      .value("CLAIM_PREMISE", Task::ClaimPremise)
      .value("RELATION", Task::Relation);
  py::enum_<PipelineMode>(m, "PipelineMode")
      .value("END_TO_END", PipelineMode::EndToEnd)
      .value("PRESET_ADUS", PipelineMode::PresetAdus);
  py::enum_<ProbabilityDirection>(m, "ProbabilityDirection")
      .value("INCOMING", ProbabilityDirection::Incoming)
      .value("BOTH", ProbabilityDirection::Both);
  py::enum_<AduLabel>(m, "AduLabel")
      .value("NON_ARGUMENTATIVE", AduLabel::NonArgumentative)
      .value("ARGUMENTATIVE", AduLabel::Argumentative);
  py::enum_<RoleBinary>(m, "RoleBinary")
      .value("PREMISE", RoleBinary::Premise)
      .value("CLAIM", RoleBinary::Claim);
  py::enum_<CorpusLayout>(m, "CorpusLayout")
      .value("AIF_JSON", CorpusLayout::AifJson)
      .value("PLAIN_TEXT", CorpusLayout::PlainTextPairs);

  py::class_<SourceSpan>(m, "SourceSpan")
      .def(py::init<std::size_t, std::size_t>(), py::arg("start"), py::arg("end"))
      .def_readonly("start", &SourceSpan::start)
      .def_readonly("end", &SourceSpan::end);

  py::class_<Inode>(m, "Inode")
      .def_readonly("id", &Inode::id)
      .def_readonly("text", &Inode::text)
      .def_readonly("span", &Inode::span);

  py::class_<Snode>(m, "Snode")
      .def_readonly("id", &Snode::id)
      .def_readonly("stance", &Snode::stance)
      .def_readonly("probability", &Snode::probability);

  py::class_<GraphEdge>(m, "GraphEdge")
      .def_readonly("source", &GraphEdge::from)
      .def_readonly("target", &GraphEdge::to);

  py::class_<Violation>(m, "Violation")
      .def_readonly("subject", &Violation::subject)
      .def_readonly("rule", &Violation::rule)
      .def_readonly("message", &Violation::message)
      .def("__repr__", [](const Violation& v) {
        return "Violation(" + v.rule + ": " + v.subject + ")";
      });

  py::class_<ArgumentGraph>(m, "ArgumentGraph")
      .def_static("with_major_claim", &ArgumentGraph::with_major_claim,
                  py::arg("text"), py::arg("span") = std::nullopt)
      .def_static("from_aif_json", &ArgumentGraph::from_aif_json,
                  py::arg("data"), py::arg("require_major_claim") = true)
      .def(
          "add_argument",
          [](const ArgumentGraph& g, const std::string& text, Stance stance,
             std::optional<double> probability, const std::string& claim_id,
             const std::string& premise_id) {
            return g.add_argument({premise_id, text, {}}, stance, probability,
                                  claim_id);
          },
          py::arg("text"), py::arg("stance"), py::arg("probability"),
          py::arg("claim_id"), py::arg("premise_id") = std::string{})
      .def_property_readonly("inodes", &ArgumentGraph::inodes)
      .def_property_readonly("snodes", &ArgumentGraph::snodes)
      .def_property_readonly("edges", &ArgumentGraph::edges)
      .def_property_readonly("major_claim", &ArgumentGraph::major_claim)
      .def_property_readonly("has_major_claim", &ArgumentGraph::has_major_claim)
      .def("validate", &ArgumentGraph::validate)
      .def("depth", &ArgumentGraph::depth)
      .def("to_aif_json", &ArgumentGraph::to_aif_json, py::arg("indent") = 2)
      .def("to_dot", &ArgumentGraph::to_dot);

  m.def("structurally_equal", &structurally_equal);

  py::class_<SentenceSpan>(m, "SentenceSpan")
      .def(py::init([](std::size_t index, std::size_t start, std::size_t end,
                       std::string text) {
             return SentenceSpan{index, start, end, std::move(text)};
           }),
           py::arg("index"), py::arg("start"), py::arg("end"), py::arg("text"))
      .def_readonly("index", &SentenceSpan::index)
      .def_readonly("start", &SentenceSpan::start)
      .def_readonly("end", &SentenceSpan::end)
      .def_readonly("text", &SentenceSpan::text)
      .def("__repr__", [](const SentenceSpan& s) {
        return "SentenceSpan(" + std::to_string(s.index) + ", \"" + s.text +
               "\")";
      });

  m.def("segment",
        py::overload_cast<std::string_view, Language>(&segment),
        py::arg("text"), py::arg("language") = Language::EN);
  m.def(
      "segment_with_abbreviations",
      [](std::string_view text, std::vector<std::string> abbreviations) {
        SegmenterOptions options;
        options.abbreviations = std::move(abbreviations);
        return segment(text, options);
      },
      py::arg("text"), py::arg("abbreviations"));

  py::class_<PresetAdu>(m, "PresetAdu")
      .def(py::init([](std::string text, AduRole role) {
             return PresetAdu{std::move(text), role};
           }),
           py::arg("text"), py::arg("role"))
      .def_readonly("text", &PresetAdu::text)
      .def_readonly("role", &PresetAdu::role);

  m.def("preset_segments", &preset_segments, py::arg("adus"));
  m.def("load_lexicon", &load_lexicon, py::arg("path"));

  py::class_<EmbeddingTable>(m, "EmbeddingTable")
      .def(py::init<std::size_t,
                    std::unordered_map<std::string, std::vector<double>>>(),
           py::arg("dimension"), py::arg("entries"))
      .def_static("load", &EmbeddingTable::load, py::arg("path"),
                  py::arg("expected_dimension") = std::nullopt)
      .def_property_readonly("dimension", &EmbeddingTable::dimension)
      .def("__len__", &EmbeddingTable::size)
      .def("find", [](const EmbeddingTable& t, std::string_view token)
                       -> std::optional<std::vector<double>> {
        if (const auto* v = t.find(token)) return *v;
        return std::nullopt;
      });

  m.def("tokenize", &tokenize, py::arg("text"));

  py::class_<SentenceEmbedding>(m, "SentenceEmbedding")
      .def_readonly("values", &SentenceEmbedding::values)
      .def_readonly("all_oov", &SentenceEmbedding::all_oov);

  m.def("sentence_embedding", &sentence_embedding, py::arg("tokens"),
        py::arg("table"));
  m.def(
      "cosine",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return cosine(a, b);
      },
      py::arg("a"), py::arg("b"));

  py::class_<IndicatorLexicons>(m, "IndicatorLexicons")
      .def_static("defaults", &IndicatorLexicons::defaults, py::arg("language"))
      .def_readwrite("claim", &IndicatorLexicons::claim)
      .def_readwrite("premise", &IndicatorLexicons::premise)
      .def_readwrite("first_person", &IndicatorLexicons::first_person)
      .def_readwrite("modal", &IndicatorLexicons::modal);

  py::class_<FeatureVector>(m, "FeatureVector")
      .def(py::init<>())
      .def_readwrite("punctuation_count", &FeatureVector::punctuation_count)
      .def_readwrite("token_count", &FeatureVector::token_count)
      .def_readwrite("sentence_index", &FeatureVector::sentence_index)
      .def_readwrite("relative_position", &FeatureVector::relative_position)
      .def_readwrite("claim_indicator", &FeatureVector::claim_indicator)
      .def_readwrite("premise_indicator", &FeatureVector::premise_indicator)
      .def_readwrite("first_person", &FeatureVector::first_person)
      .def_readwrite("modal_verb", &FeatureVector::modal_verb)
      .def_readwrite("clause_count_proxy", &FeatureVector::clause_count_proxy)
      .def_readwrite("token_depth_proxy", &FeatureVector::token_depth_proxy)
      .def_readwrite("embedding", &FeatureVector::embedding)
      .def_readwrite("schema_id", &FeatureVector::schema_id)
      .def("dense", &FeatureVector::dense);

  m.def("feature_schema_id", &feature_schema_id, py::arg("embedding_dimension"));
  m.def("extract_features",
        py::overload_cast<const SentenceSpan&, std::size_t,
                          const EmbeddingTable&, Language>(&extract_features),
        py::arg("span"), py::arg("doc_sentence_count"), py::arg("table"),
        py::arg("language") = Language::EN);

  py::class_<LinearModel>(m, "LinearModel")
      .def(py::init<>())
      .def_readwrite("task", &LinearModel::task)
      .def_readwrite("language", &LinearModel::language)
      .def_readwrite("feature_schema_id", &LinearModel::feature_schema_id)
      .def_readwrite("weights", &LinearModel::weights)
      .def_readwrite("bias", &LinearModel::bias)
      .def_property_readonly("class_count", &LinearModel::class_count)
      .def_property_readonly("feature_dimension", &LinearModel::feature_dimension);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init([](double lr, double l2, std::size_t epochs,
                       std::uint64_t seed) {
             return TrainConfig{lr, l2, epochs, seed};
           }),
           py::arg("learning_rate") = 0.5, py::arg("l2") = 1e-4,
           py::arg("epochs") = 300, py::arg("seed") = 0)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("l2", &TrainConfig::l2)
      .def_readwrite("epochs", &TrainConfig::epochs)
      .def_readwrite("seed", &TrainConfig::seed);

  m.def(
      "train_logistic",
      [](const std::vector<std::vector<double>>& features,
         const std::vector<int>& labels, std::size_t class_count,
         const TrainConfig& config, Task task, std::string schema,
         Language language) {
        if (features.size() != labels.size())
          throw std::invalid_argument("features and labels differ in length");
        Dataset data;
        data.reserve(features.size());
        for (std::size_t i = 0; i < features.size(); ++i)
          data.push_back({features[i], labels[i]});
        return train_logistic(data, class_count, config, task,
                              std::move(schema), language);
      },
      py::arg("features"), py::arg("labels"), py::arg("class_count") = 2,
      py::arg("config") = TrainConfig{}, py::arg("task") = Task::Adu,
      py::arg("schema") = std::string{"custom"},
      py::arg("language") = Language::EN);

  py::class_<Prediction>(m, "Prediction")
      .def_readonly("cls", &Prediction::cls)
      .def_readonly("probability", &Prediction::probability);
  m.def(
      "predict",
      [](const LinearModel& model, const std::vector<double>& x) {
        return predict(model, x);
      },
      py::arg("model"), py::arg("features"));

  py::class_<AduPrediction>(m, "AduPrediction")
      .def_readonly("label", &AduPrediction::label)
      .def_readonly("probability", &AduPrediction::probability);
  py::class_<RolePrediction>(m, "RolePrediction")
      .def_readonly("label", &RolePrediction::label)
      .def_readonly("probability", &RolePrediction::probability);
  py::class_<RelationPrediction>(m, "RelationPrediction")
      .def(py::init([](Stance stance, double probability, bool neutral) {
             return RelationPrediction{stance, probability, neutral};
           }),
           py::arg("stance"), py::arg("probability"), py::arg("neutral") = false)
      .def_readonly("stance", &RelationPrediction::stance)
      .def_readonly("probability", &RelationPrediction::probability)
      .def_readonly("neutral", &RelationPrediction::neutral);

  m.def("classify_adu", &classify_adu, py::arg("features"), py::arg("model"));
  m.def("classify_claim_premise", &classify_claim_premise, py::arg("features"),
        py::arg("model"));
  m.def(
      "classify_relation",
      [](const std::vector<double>& premise, const std::vector<double>& claim,
         const LinearModel& model, double neutral_threshold) {
        return classify_relation(premise, claim, model, neutral_threshold);
      },
      py::arg("premise_embedding"), py::arg("claim_embedding"), py::arg("model"),
      py::arg("neutral_threshold"));
  m.def("relation_schema_id", &relation_schema_id, py::arg("embedding_dimension"));

  py::class_<EvalStats>(m, "EvalStats")
      .def_readonly("accuracy", &EvalStats::accuracy)
      .def_readonly("precision", &EvalStats::precision)
      .def_readonly("recall", &EvalStats::recall)
      .def_readonly("f1", &EvalStats::f1);
  m.def("stats_from_counts", &stats_from_counts, py::arg("tp"), py::arg("fp"),
        py::arg("fn"), py::arg("tn"));
  m.def(
      "evaluate_dataset",
      [](const LinearModel& model, const std::vector<std::vector<double>>& X,
         const std::vector<int>& y, int positive_class) {
        if (X.size() != y.size())
          throw std::invalid_argument("features and labels differ in length");
        Dataset data;
        for (std::size_t i = 0; i < X.size(); ++i) data.push_back({X[i], y[i]});
        return evaluate(model, data, positive_class);
      },
      py::arg("model"), py::arg("features"), py::arg("labels"),
      py::arg("positive_class") = 1);

  m.def("save_model", &save_model, py::arg("model"), py::arg("path"));
  m.def("load_model", &load_model, py::arg("path"));

  py::class_<Adu>(m, "Adu")
      .def(py::init([](SentenceSpan span, AduRole role,
                       std::vector<double> embedding) {
             Adu adu;
             adu.span = std::move(span);
             adu.role = role;
             adu.embedding.values = std::move(embedding);
             return adu;
           }),
           py::arg("span"), py::arg("role"), py::arg("embedding"))
      .def_readonly("span", &Adu::span)
      .def_readonly("role", &Adu::role)
      .def_readonly("embedding", &Adu::embedding)
      .def_readonly("features", &Adu::features);

  m.def("mc_first",
        [](const std::vector<Adu>& adus) { return mc_first(adus); });
  m.def("mc_centroid",
        [](const std::vector<Adu>& adus) { return mc_centroid(adus); });
  m.def("mc_pairwise",
        [](const std::vector<Adu>& adus) { return mc_pairwise(adus); });
  m.def(
      "mc_probability",
      [](const std::vector<Adu>& adus, const LinearModel& model,
         double neutral_threshold, ProbabilityDirection direction) {
        return mc_probability(adus, model, neutral_threshold, direction);
      },
      py::arg("adus"), py::arg("relation_model"), py::arg("neutral_threshold"),
      py::arg("direction") = ProbabilityDirection::Incoming);

  py::class_<RelationMatrix>(m, "RelationMatrix")
      .def(py::init<std::size_t>(), py::arg("unit_count"))
      .def_property_readonly("unit_count", &RelationMatrix::unit_count)
      .def("set", &RelationMatrix::set, py::arg("source"), py::arg("target"),
           py::arg("prediction"))
      .def("get",
           [](const RelationMatrix& matrix, std::size_t from, std::size_t to)
               -> std::optional<RelationPrediction> {
             if (const auto* p = matrix.get(from, to)) return *p;
             return std::nullopt;
           });

  m.def(
      "predict_relations",
      [](const std::vector<Adu>& units, const LinearModel& model,
         double neutral_threshold) {
        return predict_relations(units, model, neutral_threshold);
      },
      py::arg("units"), py::arg("relation_model"), py::arg("neutral_threshold"));

  py::class_<PairwiseOptions>(m, "PairwiseOptions")
      .def(py::init([](double bound_factor, bool relative_bound,
                       std::size_t max_iterations) {
             return PairwiseOptions{bound_factor, relative_bound, max_iterations};
           }),
           py::arg("bound_factor") = 0.98, py::arg("relative_bound") = true,
           py::arg("max_iterations") = 10)
      .def_readwrite("bound_factor", &PairwiseOptions::bound_factor)
      .def_readwrite("relative_bound", &PairwiseOptions::relative_bound)
      .def_readwrite("max_iterations", &PairwiseOptions::max_iterations);

  py::class_<BuiltGraph>(m, "BuiltGraph")
      .def_readonly("graph", &BuiltGraph::graph)
      .def_readonly("unit_inode_ids", &BuiltGraph::unit_inode_ids);

  m.def(
      "build_flat_tree",
      [](const std::vector<Adu>& units, std::size_t mc_index,
         const RelationMatrix& relations) {
        return build_flat_tree(units, mc_index, relations);
      },
      py::arg("units"), py::arg("major_claim_index"), py::arg("relations"));
  m.def(
      "build_adu_position",
      [](const std::vector<Adu>& units, std::size_t mc_index,
         const RelationMatrix& relations) {
        return build_adu_position(units, mc_index, relations);
      },
      py::arg("units"), py::arg("major_claim_index"), py::arg("relations"));
  m.def(
      "build_pairwise",
      [](const std::vector<Adu>& units, std::size_t mc_index,
         const RelationMatrix& relations, const PairwiseOptions& options) {
        return build_pairwise(units, mc_index, relations, options);
      },
      py::arg("units"), py::arg("major_claim_index"), py::arg("relations"),
      py::arg("options") = PairwiseOptions{});

  m.def("levenshtein", &levenshtein, py::arg("a"), py::arg("b"));
  m.def("node_similarity", &node_similarity, py::arg("a"), py::arg("b"));

  py::class_<NodeMapping::Entry>(m, "MappingEntry")
      .def_readonly("benchmark_id", &NodeMapping::Entry::benchmark_id)
      .def_readonly("generated_id", &NodeMapping::Entry::generated_id)
      .def_readonly("similarity", &NodeMapping::Entry::similarity);
  py::class_<NodeMapping>(m, "NodeMapping")
      .def_readonly("entries", &NodeMapping::entries);

  m.def("build_mapping", &build_mapping, py::arg("benchmark"),
        py::arg("generated"));
  m.def("inode_agreement", &inode_agreement, py::arg("mapping"),
        py::arg("benchmark"), py::arg("length_weighted") = true);
  m.def("major_claim_agreement", &major_claim_agreement, py::arg("mapping"),
        py::arg("benchmark"), py::arg("generated"));
  m.def("snode_agreement",
        py::overload_cast<const NodeMapping&, const ArgumentGraph&,
                          const ArgumentGraph&>(&snode_agreement),
        py::arg("mapping"), py::arg("benchmark"), py::arg("generated"));
  m.def("edge_agreement", &edge_agreement, py::arg("mapping"),
        py::arg("benchmark"), py::arg("generated"));

  py::class_<AgreementReport>(m, "AgreementReport")
      .def_readonly("inode_agreement", &AgreementReport::inode_agreement)
      .def_readonly("major_claim_agreement",
                    &AgreementReport::major_claim_agreement)
      .def_readonly("snode_agreement", &AgreementReport::snode_agreement)
      .def_readonly("edge_agreement", &AgreementReport::edge_agreement)
      .def_readonly("time_s", &AgreementReport::time_s);

  m.def("evaluate_pair", &evaluate_pair, py::arg("benchmark"),
        py::arg("generated"), py::arg("elapsed_s") = 0.0);

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("language", &PipelineConfig::language)
      .def_readwrite("mode", &PipelineConfig::mode)
      .def_readwrite("mc_method", &PipelineConfig::mc_method)
      .def_readwrite("constructor_name", &PipelineConfig::constructor_name)
      .def_readwrite("neutral_threshold", &PipelineConfig::neutral_threshold)
      .def_readwrite("bound_factor", &PipelineConfig::bound_factor)
      .def_readwrite("relative_bound", &PipelineConfig::relative_bound)
      .def_readwrite("max_iterations", &PipelineConfig::max_iterations)
      .def_readwrite("mc_probability_direction",
                     &PipelineConfig::mc_probability_direction)
      .def_readwrite("inode_length_weighted",
                     &PipelineConfig::inode_length_weighted)
      .def_readwrite("workers", &PipelineConfig::workers)
      .def_readwrite("seed", &PipelineConfig::seed)
      .def_readwrite("vectors_path", &PipelineConfig::vectors_path)
      .def_readwrite("adu_model_path", &PipelineConfig::adu_model_path)
      .def_readwrite("claim_premise_model_path",
                     &PipelineConfig::claim_premise_model_path)
      .def_readwrite("relation_model_path", &PipelineConfig::relation_model_path)
      .def_readwrite("lexicon_dir", &PipelineConfig::lexicon_dir)
      .def("check", &PipelineConfig::check);

  m.def("load_config", &load_config, py::arg("path"));

  py::class_<PipelineModels, std::shared_ptr<PipelineModels>>(m, "PipelineModels")
      .def_static("load", &PipelineModels::load, py::arg("config"))
      .def_readonly("vectors", &PipelineModels::vectors)
      .def_readonly("relation_model", &PipelineModels::relation_model);

  py::class_<StageCounts>(m, "StageCounts")
      .def_readonly("segment_calls", &StageCounts::segment_calls)
      .def_readonly("adu_classifications", &StageCounts::adu_classifications)
      .def_readonly("role_classifications", &StageCounts::role_classifications)
      .def_readonly("mc_selections", &StageCounts::mc_selections)
      .def_readonly("relation_predictions", &StageCounts::relation_predictions);

  py::class_<PipelineArtifacts>(m, "PipelineArtifacts")
      .def_readonly("units", &PipelineArtifacts::units)
      .def_readonly("major_claim_index", &PipelineArtifacts::major_claim_index)
      .def_readonly("relations", &PipelineArtifacts::relations)
      .def_readonly("unit_inode_ids", &PipelineArtifacts::unit_inode_ids);

  py::class_<PipelineResult>(m, "PipelineResult")
      .def_readonly("graph", &PipelineResult::graph)
      .def_readonly("elapsed_s", &PipelineResult::elapsed_s)
      .def_readonly("counts", &PipelineResult::counts)
      .def_readonly("artifacts", &PipelineResult::artifacts)
      .def_property_readonly("no_argument", &PipelineResult::no_argument);

  py::class_<Pipeline>(m, "Pipeline")
      .def(py::init([](PipelineConfig config,
                       std::shared_ptr<PipelineModels> models) {
             return Pipeline(std::move(config),
                             std::shared_ptr<const PipelineModels>(models));
           }),
           py::arg("config"), py::arg("models"))
      .def("run_text", &Pipeline::run_text, py::arg("text"),
           py::call_guard<py::gil_scoped_release>())
      .def("run_preset", &Pipeline::run_preset, py::arg("adus"),
           py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("config", &Pipeline::config);

  py::class_<CorpusCase>(m, "CorpusCase")
      .def_readonly("id", &CorpusCase::id)
      .def_readonly("text", &CorpusCase::text)
      .def_readonly("preset_adus", &CorpusCase::preset_adus)
      .def_readonly("benchmark", &CorpusCase::benchmark)
      .def_readonly("benchmark_missing", &CorpusCase::benchmark_missing);

  py::class_<CorpusStats>(m, "CorpusStats")
      .def_readonly("cases", &CorpusStats::cases)
      .def_readonly("with_benchmark", &CorpusStats::with_benchmark)
      .def_readonly("inodes", &CorpusStats::inodes)
      .def_readonly("snodes", &CorpusStats::snodes)
      .def_readonly("edges", &CorpusStats::edges);

  m.def("load_corpus", &load_corpus, py::arg("directory"),
        py::arg("layout") = CorpusLayout::AifJson);
  m.def("corpus_stats", &corpus_stats, py::arg("cases"));
  m.def("derive_preset_adus", &derive_preset_adus, py::arg("benchmark"));

  py::class_<EvalGrid>(m, "EvalGrid")
      .def(py::init<>())
      .def_static("single", &EvalGrid::single, py::arg("config"))
      .def_static("standard", &EvalGrid::standard)
      .def_readwrite("modes", &EvalGrid::modes)
      .def_readwrite("mc_methods", &EvalGrid::mc_methods)
      .def_readwrite("constructors", &EvalGrid::constructors)
      .def_readwrite("thresholds", &EvalGrid::thresholds);

  py::class_<CaseRow>(m, "CaseRow")
      .def_readonly("case_id", &CaseRow::case_id)
      .def_readonly("mode", &CaseRow::mode)
      .def_readonly("mc_method", &CaseRow::mc_method)
      .def_readonly("constructor_name", &CaseRow::constructor_name)
      .def_readonly("threshold", &CaseRow::threshold)
      .def_readonly("report", &CaseRow::report)
      .def_readonly("no_argument", &CaseRow::no_argument);

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("rows", &EvalReport::rows)
      .def("to_csv", &EvalReport::to_csv)
      .def("aggregate_json", &EvalReport::aggregate_json, py::arg("indent") = 2);

  m.def(
      "run_evaluation",
      [](const std::vector<CorpusCase>& cases, const PipelineConfig& base,
         const EvalGrid& grid, std::shared_ptr<PipelineModels> models) {
        return run_evaluation(cases, base, grid,
                              std::shared_ptr<const PipelineModels>(models));
      },
      py::arg("cases"), py::arg("config"), py::arg("grid"), py::arg("models"),
      py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "0.1.0";

}
