#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "argmine/evaluation.hpp"
#include "argmine/metrics.hpp"
#include "support/testutil.hpp"

using namespace argmine;

namespace {

EmbeddingTable test_vectors() {
  return EmbeddingTable(4, {
      {"alpha",   {1.0, 0.1, 0.0, 0.2}},
      {"beta",    {0.0, 1.0, 0.3, 0.0}},
      {"gamma",   {0.2, 0.0, 1.0, 0.1}},
      {"delta",   {0.0, 0.3, 0.0, 1.0}},
      {"epsilon", {0.7, 0.7, 0.0, 0.1}},
      {"zeta",    {0.1, 0.0, 0.8, 0.6}},
      {"eta",     {0.5, 0.2, 0.4, 0.3}},
      {"theta",   {0.3, 0.6, 0.1, 0.9}},
      {"therefore", {0.2, 0.2, 0.2, 0.2}},
      {"because",   {0.4, 0.1, 0.1, 0.4}},
  });
}

LinearModel blank(Task task, std::size_t dim, const std::string& schema) {
  LinearModel model;
  model.task = task;
  model.feature_schema_id = schema;
  model.weights.assign(2, std::vector<double>(dim, 0.0));
  model.bias.assign(2, 0.0);
  return model;
}

// Argumentative iff the sentence holds more than three tokens.
LinearModel adu_stub() {
  auto model = blank(Task::Adu, 14, feature_schema_id(4));
  model.bias[1] = -3.5;
  model.weights[1][1] = 1.0;  // token count
  return model;
}

// Claim iff a claim indicator phrase occurs.
LinearModel claim_premise_stub() {
  auto model = blank(Task::ClaimPremise, 14, feature_schema_id(4));
  model.bias[1] = -1.0;
  model.weights[1][4] = 4.0;  // claim indicator flag
  return model;
}

// Stance varies with the premise-minus-claim difference components.
LinearModel relation_stub() {
  auto model = blank(Task::Relation, 12, relation_schema_id(4));
  model.weights[1][8] = 3.0;
  model.weights[1][9] = -2.0;
  model.weights[1][10] = 1.5;
  model.weights[1][11] = -1.0;
  return model;
}

std::shared_ptr<const PipelineModels> test_models() {
  auto models = std::make_shared<PipelineModels>();
  models->vectors = test_vectors();
  models->adu_model = adu_stub();
  models->claim_premise_model = claim_premise_stub();
  models->relation_model = relation_stub();
  models->lexicons = LexiconSet::defaults(Language::EN);
  return models;
}

PipelineConfig base_config() {
  PipelineConfig config;
  config.language = Language::EN;
  config.mc_method = "centroid";
  config.constructor_name = "flat";
  config.neutral_threshold = 0.6;
  return config;
}

const char* kSampleText =
    "Alpha beta gamma delta epsilon. "
    "Therefore zeta eta theta alpha holds. "
    "Beta gamma delta because epsilon zeta. "
    "Eta theta alpha beta gamma.";

}  // namespace

TEST_CASE("end-to-end run produces a valid deterministic graph") {
  const Pipeline pipeline(base_config(), test_models());
  const auto result = pipeline.run_text(kSampleText);
  REQUIRE_FALSE(result.no_argument());
  CHECK(result.graph->validate().empty());
  CHECK(result.elapsed_s < 2.0);
  CHECK(result.counts.segment_calls == 1);
  CHECK(result.counts.adu_classifications == 4);
  CHECK(result.counts.mc_selections == 1);
  CHECK(result.artifacts.units.size() == result.graph->inodes().size());

  const auto again = pipeline.run_text(kSampleText);
  CHECK(structurally_equal(*result.graph, *again.graph));
  CHECK(result.graph->to_aif_json() == again.graph->to_aif_json());
}

TEST_CASE("short sentences are dropped as non-argumentative") {
  const Pipeline pipeline(base_config(), test_models());
  const auto result = pipeline.run_text(
      "Alpha beta gamma delta epsilon. Beta gamma. "
      "Therefore zeta eta theta alpha.");
  REQUIRE_FALSE(result.no_argument());
  // "Beta gamma." has two tokens and falls below the stub threshold.
  CHECK(result.artifacts.units.size() == 2);
  CHECK(result.counts.adu_classifications == 3);
  CHECK(result.counts.role_classifications == 2);
}

TEST_CASE("no argument found outcome") {
  const Pipeline pipeline(base_config(), test_models());
  const auto empty = pipeline.run_text("");
  CHECK(empty.no_argument());
  const auto all_short = pipeline.run_text("Alpha beta. Gamma delta.");
  CHECK(all_short.no_argument());
  CHECK(all_short.counts.adu_classifications == 2);
}

TEST_CASE("preset mode honors roles and skips early stages") {
  PipelineConfig config = base_config();
  config.mode = PipelineMode::PresetAdus;
  config.constructor_name = "position";
  const Pipeline pipeline(config, test_models());

  const std::vector<PresetAdu> adus = {
      {"Eta theta alpha beta gamma", AduRole::Claim},
      {"Alpha beta gamma delta epsilon", AduRole::MajorClaim},
      {"Beta gamma delta because epsilon zeta", AduRole::Premise},
  };
  const auto result = pipeline.run_preset(adus);
  REQUIRE_FALSE(result.no_argument());
  CHECK(result.graph->validate().empty());

  // The major claim is the annotated unit, not a heuristic pick.
  CHECK(result.artifacts.major_claim_index == 1);
  const auto* mc = result.graph->find_inode(result.graph->major_claim());
  REQUIRE(mc != nullptr);
  CHECK(mc->text == "Alpha beta gamma delta epsilon");

  // Preset mode must not touch segmentation, ADU filtering or MC detection.
  CHECK(result.counts.segment_calls == 0);
  CHECK(result.counts.adu_classifications == 0);
  CHECK(result.counts.role_classifications == 0);
  CHECK(result.counts.mc_selections == 0);
  CHECK(result.counts.relation_predictions == 6);
}

TEST_CASE("threshold 1.0 forces support stances throughout") {
  PipelineConfig config = base_config();
  config.neutral_threshold = 1.0;
  const Pipeline pipeline(config, test_models());
  const auto result = pipeline.run_text(kSampleText);
  REQUIRE_FALSE(result.no_argument());
  for (const auto& snode : result.graph->snodes())
    CHECK(snode.stance == Stance::Support);
}

TEST_CASE("models load from disk with consistency checks") {
  argmine::test::TempDir dir;
  dir.write("vectors.txt",
            "alpha 1.0 0.1 0.0 0.2\nbeta 0.0 1.0 0.3 0.0\n"
            "gamma 0.2 0.0 1.0 0.1\ntherefore 0.2 0.2 0.2 0.2\n");
  save_model(adu_stub(), dir.path() / "adu.json");
  save_model(claim_premise_stub(), dir.path() / "cp.json");
  save_model(relation_stub(), dir.path() / "rel.json");

  PipelineConfig config = base_config();
  config.vectors_path = dir.path() / "vectors.txt";
  config.adu_model_path = dir.path() / "adu.json";
  config.claim_premise_model_path = dir.path() / "cp.json";
  config.relation_model_path = dir.path() / "rel.json";
  const PipelineModels models = PipelineModels::load(config);
  CHECK(models.vectors.dimension() == 4);
  CHECK(models.adu_model.has_value());

  // A German config rejects the English models.
  PipelineConfig german = config;
  german.language = Language::DE;
  CHECK_THROWS_WITH_AS(PipelineModels::load(german),
                       doctest::Contains("language"), std::runtime_error);

  // A vector table of another dimension rejects the models.
  dir.write("vectors2.txt", "alpha 1.0 0.0\nbeta 0.0 1.0\n");
  PipelineConfig narrow = config;
  narrow.vectors_path = dir.path() / "vectors2.txt";
  CHECK_THROWS_WITH_AS(PipelineModels::load(narrow),
                       doctest::Contains("schema"), std::runtime_error);

  // The relation model is mandatory.
  PipelineConfig missing = config;
  missing.relation_model_path.clear();
  CHECK_THROWS_AS(PipelineModels::load(missing), std::invalid_argument);
}

TEST_CASE("config files parse, resolve paths and reject junk") {
  argmine::test::TempDir dir;
  dir.write("vectors.txt", "alpha 1.0 0.1\n");
  const auto path = dir.write("run.conf",
                              "# sample\n"
                              "version = 1\n"
                              "language = de\n"
                              "mc_method = pairwise\n"
                              "constructor = position\n"
                              "neutral_threshold = 0.7\n"
                              "bound_mode = absolute\n"
                              "vectors = vectors.txt\n");
  const PipelineConfig config = load_config(path);
  CHECK(config.language == Language::DE);
  CHECK(config.mc_method == "pairwise");
  CHECK(config.constructor_name == "position");
  CHECK(config.neutral_threshold == doctest::Approx(0.7));
  CHECK_FALSE(config.relative_bound);
  CHECK(config.vectors_path == dir.path() / "vectors.txt");

  const auto unknown = dir.write("bad.conf", "version = 1\nwat = 1\n");
  CHECK_THROWS_WITH_AS(load_config(unknown), doctest::Contains("unknown config key"),
                       std::runtime_error);
  const auto unversioned = dir.write("old.conf", "language = en\n");
  CHECK_THROWS_WITH_AS(load_config(unversioned), doctest::Contains("version"),
                       std::runtime_error);
  const auto out_of_range = dir.write("range.conf",
                                      "version = 1\nneutral_threshold = 0.2\n");
  CHECK_THROWS_AS(load_config(out_of_range), std::invalid_argument);

  PipelineConfig overridden = config;
  apply_config_entry(overridden, "neutral_threshold", "0.9");
  CHECK(overridden.neutral_threshold == doctest::Approx(0.9));
  CHECK_THROWS_AS(apply_config_entry(overridden, "nope", "1"),
                  std::invalid_argument);
}

TEST_CASE("corpus loading pairs texts with benchmarks") {
  argmine::test::TempDir dir;
  auto graph = ArgumentGraph::with_major_claim("Alpha beta gamma delta epsilon.");
  graph = graph.add_argument({"", "Beta gamma delta because epsilon zeta.", {}},
                             Stance::Support, 0.9, graph.major_claim());
  dir.write("case01.txt", "irrelevant");
  dir.write("case01.json", graph.to_aif_json());
  dir.write("case02.txt", "text only");

  const auto cases = load_corpus(dir.path(), CorpusLayout::AifJson);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].id == "case01");
  REQUIRE(cases[0].benchmark.has_value());
  CHECK_FALSE(cases[0].benchmark_missing);
  REQUIRE(cases[0].preset_adus.size() == 2);
  CHECK(cases[0].preset_adus[0].role == AduRole::MajorClaim);
  CHECK(cases[0].preset_adus[1].role == AduRole::Claim);
  CHECK(cases[1].benchmark_missing);

  const auto stats = corpus_stats(cases);
  CHECK(stats.cases == 2);
  CHECK(stats.with_benchmark == 1);
  CHECK(stats.inodes == 2);
  CHECK(stats.snodes == 1);
  CHECK(stats.edges == 2);

  // An orphan benchmark is an error.
  argmine::test::TempDir orphan;
  orphan.write("lone.json", graph.to_aif_json());
  CHECK_THROWS_WITH_AS(load_corpus(orphan.path(), CorpusLayout::AifJson),
                       doctest::Contains("orphan"), std::runtime_error);

  // Plain text layout loads everything as mining-only cases.
  const auto texts = load_corpus(dir.path(), CorpusLayout::PlainTextPairs);
  CHECK(texts.size() == 2);
  CHECK(texts[0].benchmark_missing);
}

TEST_CASE("a single argumentative sentence yields a single-node graph") {
  const Pipeline pipeline(base_config(), test_models());
  const auto result = pipeline.run_text("Alpha beta gamma delta epsilon zeta.");
  REQUIRE_FALSE(result.no_argument());
  CHECK(result.graph->inodes().size() == 1);
  CHECK(result.graph->snodes().empty());
  CHECK(result.graph->validate().empty());
  CHECK(result.graph->depth() == 1);
}

TEST_CASE("malformed benchmark files fail corpus loading with context") {
  argmine::test::TempDir dir;
  dir.write("broken.txt", "some text");
  dir.write("broken.json", "{not json");
  CHECK_THROWS_WITH_AS(load_corpus(dir.path(), CorpusLayout::AifJson),
                       doctest::Contains("malformed graph file"),
                       std::runtime_error);
}

TEST_CASE("derive_preset_adus distinguishes claims from premises") {
  auto graph = ArgumentGraph::with_major_claim("root");
  graph = graph.add_argument({"", "a claim", {}}, Stance::Support, {},
                             graph.major_claim());
  const std::string claim_id = graph.inodes().back().id;
  graph = graph.add_argument({"", "a premise", {}}, Stance::Attack, {}, claim_id);

  const auto adus = derive_preset_adus(graph);
  REQUIRE(adus.size() == 3);
  CHECK(adus[0].role == AduRole::MajorClaim);
  CHECK(adus[1].role == AduRole::Claim);
  CHECK(adus[2].role == AduRole::Premise);
}

TEST_CASE("evaluation against the pipeline's own output is perfect") {
  const Pipeline pipeline(base_config(), test_models());
  const auto mined = pipeline.run_text(kSampleText);
  REQUIRE_FALSE(mined.no_argument());

  argmine::test::TempDir dir;
  dir.write("self.txt", kSampleText);
  dir.write("self.json", mined.graph->to_aif_json());
  const auto cases = load_corpus(dir.path(), CorpusLayout::AifJson);

  PipelineConfig config = base_config();
  config.workers = 2;
  const auto report = run_evaluation(cases, config, EvalGrid::single(config),
                                     test_models());
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows.front();
  CHECK(row.report.inode_agreement == doctest::Approx(1.0));
  CHECK(row.report.major_claim_agreement == 1);
  CHECK(row.report.snode_agreement == doctest::Approx(1.0));
  CHECK(row.report.edge_agreement == doctest::Approx(1.0));

  // Preset mode over the flat benchmark reproduces the same graph.
  PipelineConfig preset = config;
  preset.mode = PipelineMode::PresetAdus;
  const auto preset_report =
      run_evaluation(cases, preset, EvalGrid::single(preset), test_models());
  REQUIRE(preset_report.rows.size() == 1);
  CHECK(preset_report.rows.front().report.edge_agreement == doctest::Approx(1.0));
}

TEST_CASE("evaluation guards its preconditions") {
  CHECK_THROWS_WITH_AS(run_evaluation({}, base_config(),
                                      EvalGrid::single(base_config()),
                                      test_models()),
                       doctest::Contains("empty"), std::invalid_argument);
  CorpusCase no_benchmark;
  no_benchmark.id = "x";
  no_benchmark.text = "Alpha beta gamma delta.";
  no_benchmark.benchmark_missing = true;
  CHECK_THROWS_WITH_AS(run_evaluation({no_benchmark}, base_config(),
                                      EvalGrid::single(base_config()),
                                      test_models()),
                       doctest::Contains("benchmark"), std::invalid_argument);
}

TEST_CASE("german pipeline uses the german lexicons") {
  auto models = std::make_shared<PipelineModels>();
  models->vectors = EmbeddingTable(
      3, {{"straße", {1.0, 0.0, 0.2}},
          {"stadt", {0.0, 1.0, 0.1}},
          {"viele", {0.3, 0.2, 1.0}},
          {"menschen", {0.6, 0.1, 0.4}},
          {"fahren", {0.2, 0.8, 0.3}},
          {"täglich", {0.7, 0.3, 0.2}},
          {"dorthin", {0.1, 0.5, 0.9}}});
  auto adu = blank(Task::Adu, 13, feature_schema_id(3));
  adu.language = Language::DE;
  adu.bias[1] = 2.0;  // keep everything
  models->adu_model = adu;
  auto role = blank(Task::ClaimPremise, 13, feature_schema_id(3));
  role.language = Language::DE;
  role.weights[1][4] = 4.0;
  role.bias[1] = -1.0;
  models->claim_premise_model = role;
  auto relation = blank(Task::Relation, 9, relation_schema_id(3));
  relation.language = Language::DE;
  models->relation_model = relation;
  models->lexicons = LexiconSet::defaults(Language::DE);

  PipelineConfig config = base_config();
  config.language = Language::DE;
  config.mc_method = "first";
  const Pipeline pipeline(config, models);

  // "z.B." must not split; "Deshalb" marks the claim via the DE lexicon.
  const auto result = pipeline.run_text(
      "Viele Menschen fahren z.B. täglich dorthin. "
      "Deshalb fahren viele Menschen täglich. "
      "Viele fahren in die Stadt.");
  REQUIRE_FALSE(result.no_argument());
  CHECK(result.artifacts.units.size() == 3);
  std::size_t claims = 0;
  for (const auto& unit : result.artifacts.units)
    if (unit.role == AduRole::Claim) ++claims;
  CHECK(claims == 1);
  // First heuristic lands on the claim sentence.
  CHECK(result.artifacts.major_claim_index == 1);
}

TEST_CASE("worker errors propagate out of run_evaluation") {
  // A case with a benchmark but no text fails inside the pool in
  // end-to-end mode; the error must surface, not hang or vanish.
  const Pipeline pipeline(base_config(), test_models());
  const auto mined = pipeline.run_text(kSampleText);
  CorpusCase broken;
  broken.id = "broken";
  broken.benchmark = *mined.graph;
  broken.preset_adus = derive_preset_adus(*mined.graph);

  PipelineConfig config = base_config();
  config.workers = 4;
  CHECK_THROWS_WITH_AS(run_evaluation({broken}, config,
                                      EvalGrid::single(config), test_models()),
                       doctest::Contains("lacks source text"),
                       std::runtime_error);

  // The same case evaluates fine in preset mode.
  PipelineConfig preset = config;
  preset.mode = PipelineMode::PresetAdus;
  const auto report =
      run_evaluation({broken}, preset, EvalGrid::single(preset), test_models());
  CHECK(report.rows.size() == 1);
}

TEST_CASE("a wide grid over many workers stays deterministic") {
  const Pipeline pipeline(base_config(), test_models());
  const auto mined = pipeline.run_text(kSampleText);

  argmine::test::TempDir dir;
  for (int i = 0; i < 6; ++i) {
    const std::string id = "case" + std::to_string(i);
    dir.write(id + ".txt", kSampleText);
    dir.write(id + ".json", mined.graph->to_aif_json());
  }
  const auto cases = load_corpus(dir.path(), CorpusLayout::AifJson);

  EvalGrid grid;
  grid.modes = {PipelineMode::EndToEnd, PipelineMode::PresetAdus};
  grid.mc_methods = {"first", "probability"};
  grid.constructors = {"flat", "position", "pairwise"};
  grid.thresholds = {0.5, 0.8, 1.0};

  PipelineConfig many = base_config();
  many.workers = 8;
  PipelineConfig solo = base_config();
  solo.workers = 1;
  const auto parallel = run_evaluation(cases, many, grid, test_models());
  const auto serial = run_evaluation(cases, solo, grid, test_models());
  REQUIRE(parallel.rows.size() == 216);
  REQUIRE(serial.rows.size() == 216);
  for (std::size_t i = 0; i < parallel.rows.size(); ++i) {
    const auto& a = parallel.rows[i];
    const auto& b = serial.rows[i];
    CHECK(a.case_id == b.case_id);
    CHECK(a.report.inode_agreement == b.report.inode_agreement);
    CHECK(a.report.major_claim_agreement == b.report.major_claim_agreement);
    CHECK(a.report.snode_agreement == b.report.snode_agreement);
    CHECK(a.report.edge_agreement == b.report.edge_agreement);
  }
}

TEST_CASE("csv rows and aggregates stay consistent") {
  const Pipeline pipeline(base_config(), test_models());
  const auto mined = pipeline.run_text(kSampleText);

  argmine::test::TempDir dir;
  dir.write("a.txt", kSampleText);
  dir.write("a.json", mined.graph->to_aif_json());
  dir.write("b.txt", kSampleText);
  dir.write("b.json", mined.graph->to_aif_json());
  const auto cases = load_corpus(dir.path(), CorpusLayout::AifJson);

  PipelineConfig config = base_config();
  EvalGrid grid;
  grid.modes = {PipelineMode::EndToEnd};
  grid.mc_methods = {"centroid"};
  grid.constructors = {"flat"};
  grid.thresholds = {0.5, 1.0};
  const auto report = run_evaluation(cases, config, grid, test_models());
  REQUIRE(report.rows.size() == 4);

  const std::string csv = report.to_csv();
  CHECK(csv.find("case_id,mode,mc_method,constructor,threshold,inode,"
                 "major_claim,snode,edge,time_s") == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 5);  // header + one row per case and threshold

  // The aggregate equals the arithmetic mean of the matching rows.
  const auto doc = nlohmann::json::parse(report.aggregate_json());
  double manual = 0.0;
  std::size_t count = 0;
  for (const auto& row : report.rows) {
    if (row.threshold == 1.0) {
      manual += row.report.snode_agreement;
      ++count;
    }
  }
  CHECK(doc["snode_by_threshold"]["end-to-end"]["1.00"].get<double>() ==
        doctest::Approx(manual / count));
  CHECK(doc["case_count"].get<std::size_t>() == 2);
}
