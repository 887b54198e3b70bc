// argmine command line: mine argument graphs from text, evaluate them
// against benchmark corpora, train the reference classifiers and convert
// graph files to DOT.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "argmine/evaluation.hpp"
#include "argmine/metrics.hpp"
#include "argmine/pipeline.hpp"

namespace {

using namespace argmine;

struct CommonFlags {
  std::string config_path;
  std::string language;
  std::string mc_method;
  std::string constructor_name;
  std::optional<double> threshold;
  std::optional<double> bound_factor;
  std::string bound_mode;
  std::optional<std::size_t> max_iterations;
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
  bool preset_adus = false;
  std::string vectors, adu_model, claim_premise_model, relation_model, lexicons;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "Pipeline config file (flat key = value format)");
    cmd->add_option("--lang", language, "Language: en or de")
        ->check(CLI::IsMember({"en", "de"}));
    cmd->add_option("--mc", mc_method,
                    "Major claim method: first|centroid|pairwise|probability")
        ->check(CLI::IsMember({"first", "centroid", "pairwise", "probability"}));
    cmd->add_option("--construct", constructor_name,
                    "Graph constructor: flat|position|pairwise")
        ->check(CLI::IsMember({"flat", "position", "pairwise"}));
    cmd->add_option("--threshold", threshold,
                    "Neutral threshold for relation typing, in [0.5, 1.0]")
        ->check(CLI::Range(0.5, 1.0));
    cmd->add_option("--bound-factor", bound_factor,
                    "Pairwise constructor lower bound factor")
        ->check(CLI::Range(1e-9, 1.0));
    cmd->add_option("--bound-mode", bound_mode,
                    "Pairwise bound mode: relative|absolute")
        ->check(CLI::IsMember({"relative", "absolute"}));
    cmd->add_option("--max-iterations", max_iterations,
                    "Pairwise constructor iteration cap");
    cmd->add_option("--workers", workers,
                    "Concurrent corpus workers (0 = hardware)");
    cmd->add_option("--seed", seed, "Random seed for training and splits");
    cmd->add_flag("--preset-adus", preset_adus,
                  "Take units, roles and major claim from the benchmark");
    cmd->add_option("--vectors", vectors, "Word vector file");
    cmd->add_option("--adu-model", adu_model, "ADU classifier model file");
    cmd->add_option("--claim-premise-model", claim_premise_model,
                    "Claim/premise classifier model file");
    cmd->add_option("--relation-model", relation_model,
                    "Relation classifier model file");
    cmd->add_option("--lexicons", lexicons, "Lexicon directory");
  }

  PipelineConfig to_config() const {
    PipelineConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (!language.empty())
      apply_config_entry(config, "language", language);
    if (!mc_method.empty()) apply_config_entry(config, "mc_method", mc_method);
    if (!constructor_name.empty())
      apply_config_entry(config, "constructor", constructor_name);
    if (threshold) config.neutral_threshold = *threshold;
    if (bound_factor) config.bound_factor = *bound_factor;
    if (!bound_mode.empty()) apply_config_entry(config, "bound_mode", bound_mode);
    if (max_iterations) config.max_iterations = *max_iterations;
    if (workers) config.workers = *workers;
    if (seed) config.seed = *seed;
    if (preset_adus) config.mode = PipelineMode::PresetAdus;
    if (!vectors.empty()) config.vectors_path = vectors;
    if (!adu_model.empty()) config.adu_model_path = adu_model;
    if (!claim_premise_model.empty())
      config.claim_premise_model_path = claim_premise_model;
    if (!relation_model.empty()) config.relation_model_path = relation_model;
    if (!lexicons.empty()) config.lexicon_dir = lexicons;
    config.check();
    return config;
  }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

int run_mine(const CommonFlags& flags, const std::string& input,
             const std::string& out_path, const std::string& dot_path) {
  const PipelineConfig config = flags.to_config();
  auto models = std::make_shared<const PipelineModels>(PipelineModels::load(config));
  const Pipeline pipeline(config, models);

  PipelineResult result;
  if (config.mode == PipelineMode::PresetAdus) {
    const auto benchmark = ArgumentGraph::from_aif_json(read_file(input));
    result = pipeline.run_preset(derive_preset_adus(benchmark));
  } else {
    result = pipeline.run_text(read_file(input));
  }

  if (result.no_argument()) {
    std::cerr << "argmine: no argument found in input\n";
    return 2;
  }
  write_output(out_path, result.graph->to_aif_json());
  if (!dot_path.empty()) write_output(dot_path, result.graph->to_dot());
  std::fprintf(stderr, "argmine: processed in %.3f s (initialization excluded)\n",
               result.elapsed_s);
  return 0;
}

int run_evaluate(const CommonFlags& flags, const std::string& corpus_dir,
                 const std::string& layout_name, bool full_grid,
                 const std::string& csv_path, const std::string& out_path) {
  const PipelineConfig config = flags.to_config();
  const auto cases =
      load_corpus(corpus_dir, corpus_layout_from_string(layout_name));
  const auto stats = corpus_stats(cases);
  std::fprintf(stderr,
               "argmine: corpus %s: %zu cases (%zu with benchmark), "
               "%zu I-nodes, %zu S-nodes, %zu edges\n",
               corpus_dir.c_str(), stats.cases, stats.with_benchmark,
               stats.inodes, stats.snodes, stats.edges);

  auto models = std::make_shared<const PipelineModels>(PipelineModels::load(config));
  const EvalGrid grid = full_grid ? EvalGrid::standard() : EvalGrid::single(config);
  const EvalReport report = run_evaluation(cases, config, grid, models);
  if (!csv_path.empty()) write_output(csv_path, report.to_csv());
  write_output(out_path, report.aggregate_json());
  std::fprintf(stderr, "argmine: %zu evaluation rows\n", report.rows.size());
  return 0;
}

int label_for(Task task, const std::string& tag) {
  std::string lower = tag;
  std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
  switch (task) {
    case Task::Adu:
      if (lower == "argumentative") return 1;
      if (lower == "non-argumentative" || lower == "nonargumentative") return 0;
      break;
    case Task::ClaimPremise:
      if (lower == "claim") return 1;
      if (lower == "premise") return 0;
      break;
    case Task::Relation:
      if (lower == "attack") return 1;
      if (lower == "support") return 0;
      break;
  }
  throw std::runtime_error("unknown label \"" + tag + "\" for task " +
                           to_string(task));
}

int run_train(const CommonFlags& flags, const std::string& task_name,
              const std::string& data_path, const std::string& out_path,
              double learning_rate, double l2, std::size_t epochs,
              double split_ratio) {
  const Task task = task_from_string(task_name);
  PipelineConfig config = flags.to_config();
  if (config.vectors_path.empty())
    throw std::runtime_error("training needs --vectors (or a config with one)");
  const EmbeddingTable vectors = EmbeddingTable::load(config.vectors_path);
  const LexiconSet lexicons = config.lexicon_dir.empty()
                                  ? LexiconSet::defaults(config.language)
                                  : LexiconSet::from_directory(config.lexicon_dir);

  // One example per line: label TAB text, or label TAB premise TAB claim
  // for the relation task.
  std::ifstream in(data_path);
  if (!in) throw std::runtime_error("cannot read training data: " + data_path);
  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    const auto where = data_path + ":" + std::to_string(line_no);
    LabeledExample example;
    example.label = label_for(task, fields.at(0));
    if (task == Task::Relation) {
      if (fields.size() != 3)
        throw std::runtime_error(where + ": expected label, premise, claim");
      const auto premise = sentence_embedding(tokenize(fields[1]), vectors);
      const auto claim = sentence_embedding(tokenize(fields[2]), vectors);
      example.features = relation_features(premise.values, claim.values);
    } else {
      if (fields.size() != 2)
        throw std::runtime_error(where + ": expected label and text");
      SentenceSpan span{0, 0, fields[1].size(), fields[1]};
      example.features = extract_features(span, 1, vectors, config.language,
                                          lexicons.indicators)
                             .dense();
    }
    data.push_back(std::move(example));
  }
  if (data.empty()) throw std::runtime_error("no training examples");

  Dataset train = data, test;
  if (split_ratio < 1.0)
    std::tie(train, test) = split_train_test(data, split_ratio, config.seed);

  const std::string schema = task == Task::Relation
                                 ? relation_schema_id(vectors.dimension())
                                 : feature_schema_id(vectors.dimension());
  const TrainConfig train_config{learning_rate, l2, epochs, config.seed};
  const LinearModel model = train_logistic(train, 2, train_config, task, schema,
                                           config.language);
  save_model(model, out_path);

  if (!test.empty()) {
    const EvalStats stats = evaluate(model, test);
    std::fprintf(stderr,
                 "argmine: %s model on held-out %zu examples: "
                 "A=%.3f P=%.3f R=%.3f F1=%.3f\n",
                 to_string(task), test.size(), stats.accuracy, stats.precision,
                 stats.recall, stats.f1);
  }
  std::fprintf(stderr, "argmine: model written to %s\n", out_path.c_str());
  return 0;
}

int run_convert(const std::string& input, const std::string& out_path) {
  const auto graph = ArgumentGraph::from_aif_json(read_file(input));
  write_output(out_path, graph.to_dot());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"argmine: mine argument graphs from text and evaluate them"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* mine = app.add_subcommand("mine", "Transform a text file into an argument graph");
  std::string mine_input, mine_out, mine_dot;
  mine->add_option("input", mine_input, "Text file (or AIF JSON with --preset-adus); - for stdin")
      ->required();
  mine->add_option("--out", mine_out, "Graph JSON output path (default stdout)");
  mine->add_option("--dot", mine_dot, "Also write a Graphviz DOT rendering");
  flags.attach(mine);

  auto* evaluate = app.add_subcommand("evaluate",
                                      "Score generated graphs against a benchmark corpus");
  std::string eval_dir, eval_layout = "aif", eval_csv, eval_out;
  bool eval_grid = false;
  evaluate->add_option("corpus", eval_dir, "Corpus directory")->required();
  evaluate->add_option("--layout", eval_layout, "Corpus layout: aif|text")
      ->check(CLI::IsMember({"aif", "text"}));
  evaluate->add_flag("--grid", eval_grid,
                     "Sweep modes, methods, constructors and thresholds");
  evaluate->add_option("--csv", eval_csv, "Write per-case CSV rows here");
  evaluate->add_option("--out", eval_out, "Aggregate JSON path (default stdout)");
  flags.attach(evaluate);

  auto* train = app.add_subcommand("train", "Train a reference classifier from TSV data");
  std::string train_task, train_data, train_out;
  double train_lr = 0.5, train_l2 = 1e-4, train_split = 0.9;
  std::size_t train_epochs = 300;
  train->add_option("task", train_task, "adu | claim-premise | relation")
      ->required()
      ->check(CLI::IsMember({"adu", "claim-premise", "relation"}));
  train->add_option("data", train_data, "TSV training file")->required();
  train->add_option("--out", train_out, "Model output path")->required();
  train->add_option("--lr", train_lr, "Learning rate")
      ->check(CLI::PositiveNumber);
  train->add_option("--l2", train_l2, "L2 penalty weight")
      ->check(CLI::NonNegativeNumber);
  train->add_option("--epochs", train_epochs, "Training epochs");
  train->add_option("--split", train_split,
                    "Train fraction for the held-out report (1.0 = train on all)")
      ->check(CLI::Range(1e-9, 1.0));
  flags.attach(train);

  auto* convert = app.add_subcommand("convert", "Render a graph JSON file as Graphviz DOT");
  std::string convert_input, convert_out;
  convert->add_option("input", convert_input, "Graph JSON file; - for stdin")->required();
  convert->add_option("--out", convert_out, "DOT output path (default stdout)");
  flags.attach(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit code 1
  }

  try {
    if (mine->parsed()) return run_mine(flags, mine_input, mine_out, mine_dot);
    if (evaluate->parsed())
      return run_evaluate(flags, eval_dir, eval_layout, eval_grid, eval_csv,
                          eval_out);
    if (train->parsed())
      return run_train(flags, train_task, train_data, train_out, train_lr,
                       train_l2, train_epochs, train_split);
    if (convert->parsed()) return run_convert(convert_input, convert_out);
  } catch (const std::exception& e) {
    std::cerr << "argmine: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
