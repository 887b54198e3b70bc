#include "argmine/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace argmine {

EvalGrid EvalGrid::single(const PipelineConfig& config) {
  return {{config.mode},
          {config.mc_method},
          {config.constructor_name},
          {config.neutral_threshold}};
}

EvalGrid EvalGrid::standard() {
  return {{PipelineMode::EndToEnd, PipelineMode::PresetAdus},
          {"first", "centroid", "pairwise", "probability"},
          {"flat", "position", "pairwise"},
          {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}};
}

namespace {

std::string format_double(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Stance lookup backed by the pipeline's relation matrix, keyed by the
// generated I-node ids the constructor assigned.
StanceOracle matrix_oracle(const PipelineArtifacts& artifacts) {
  auto index_of = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < artifacts.unit_inode_ids.size(); ++i)
    (*index_of)[artifacts.unit_inode_ids[i]] = i;
  const RelationMatrix* relations = &artifacts.relations;
  return [index_of, relations](const std::string& from,
                               const std::string& to) -> std::optional<Stance> {
    const auto fi = index_of->find(from);
    const auto ti = index_of->find(to);
    if (fi == index_of->end() || ti == index_of->end()) return std::nullopt;
    if (const auto* p = relations->get(fi->second, ti->second))
      return p->stance;
    return std::nullopt;
  };
}

struct TaskSpec {
  std::size_t case_index;
  PipelineMode mode;
  std::string mc_method;
  std::string constructor_name;
  double threshold;
};

}  // namespace

EvalReport run_evaluation(const std::vector<CorpusCase>& cases,
                          const PipelineConfig& base, const EvalGrid& grid,
                          std::shared_ptr<const PipelineModels> models) {
  if (cases.empty()) throw std::invalid_argument("empty corpus");
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (cases[i].benchmark) usable.push_back(i);
  if (usable.empty())
    throw std::invalid_argument("no corpus case provides a benchmark graph");

  std::vector<TaskSpec> tasks;
  for (std::size_t index : usable)
    for (PipelineMode mode : grid.modes)
      for (const auto& mc : grid.mc_methods)
        for (const auto& ctor : grid.constructors)
          for (double threshold : grid.thresholds)
            tasks.push_back({index, mode, mc, ctor, threshold});

  std::vector<CaseRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    while (true) {
      const std::size_t task_index = next.fetch_add(1);
      if (task_index >= tasks.size()) return;
      const TaskSpec& task = tasks[task_index];
      const CorpusCase& item = cases[task.case_index];
      try {
        PipelineConfig config = base;
        config.mode = task.mode;
        config.mc_method = task.mc_method;
        config.constructor_name = task.constructor_name;
        config.neutral_threshold = task.threshold;
        Pipeline pipeline(config, models);

        PipelineResult result;
        if (task.mode == PipelineMode::PresetAdus) {
          result = pipeline.run_preset(item.preset_adus);
        } else {
          if (!item.text)
            throw std::runtime_error("case " + item.id + " lacks source text");
          result = pipeline.run_text(*item.text);
        }

        CaseRow row;
        row.case_id = item.id;
        row.mode = task.mode;
        row.mc_method = task.mc_method;
        row.constructor_name = task.constructor_name;
        row.threshold = task.threshold;
        if (result.no_argument()) {
          row.no_argument = true;
          row.report.time_s = result.elapsed_s;
        } else {
          const NodeMapping mapping =
              build_mapping(*item.benchmark, *result.graph);
          row.report.inode_agreement = inode_agreement(
              mapping, *item.benchmark, config.inode_length_weighted);
          row.report.major_claim_agreement =
              major_claim_agreement(mapping, *item.benchmark, *result.graph);
          row.report.snode_agreement = snode_agreement(
              mapping, *item.benchmark, matrix_oracle(result.artifacts));
          row.report.edge_agreement =
              edge_agreement(mapping, *item.benchmark, *result.graph);
          row.report.time_s = result.elapsed_s;
        }
        rows[task_index] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::size_t worker_count = base.workers > 0
                                 ? base.workers
                                 : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min(worker_count, tasks.size());
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::size_t i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::sort(rows.begin(), rows.end(), [](const CaseRow& a, const CaseRow& b) {
    return std::tie(a.case_id, a.mode, a.mc_method, a.constructor_name,
                    a.threshold) < std::tie(b.case_id, b.mode, b.mc_method,
                                            b.constructor_name, b.threshold);
  });
  return {std::move(rows)};
}

std::string EvalReport::to_csv() const {
  std::string out =
      "case_id,mode,mc_method,constructor,threshold,inode,major_claim,snode,"
      "edge,time_s\n";
  for (const auto& row : rows) {
    out += csv_field(row.case_id);
    out += ',';
    out += to_string(row.mode);
    out += ',';
    out += row.mc_method;
    out += ',';
    out += row.constructor_name;
    out += ',';
    out += format_double(row.threshold, 2);
    out += ',';
    out += format_double(row.report.inode_agreement, 6);
    out += ',';
    out += std::to_string(row.report.major_claim_agreement);
    out += ',';
    out += format_double(row.report.snode_agreement, 6);
    out += ',';
    out += format_double(row.report.edge_agreement, 6);
    out += ',';
    out += format_double(row.report.time_s, 6);
    out += '\n';
  }
  return out;
}

std::string EvalReport::aggregate_json(int indent) const {
  using nlohmann::ordered_json;

  struct Mean {
    double sum = 0.0;
    std::size_t count = 0;
    void add(double v) {
      sum += v;
      ++count;
    }
    double value() const { return count > 0 ? sum / count : 0.0; }
  };

  std::map<std::string, Mean> inode_by_mode;
  std::map<std::string, std::map<std::string, Mean>> mc_by_method;
  std::map<std::string, std::map<std::string, Mean>> snode_by_threshold;
  std::map<std::string, std::map<std::string, Mean>> edge_by_constructor;
  Mean time_mean;
  std::set<std::string> case_ids;

  for (const auto& row : rows) {
    const std::string mode = to_string(row.mode);
    case_ids.insert(row.case_id);
    inode_by_mode[mode].add(row.report.inode_agreement);
    mc_by_method[mode][row.mc_method].add(row.report.major_claim_agreement);
    snode_by_threshold[mode][format_double(row.threshold, 2)].add(
        row.report.snode_agreement);
    edge_by_constructor[mode][row.constructor_name].add(
        row.report.edge_agreement);
    time_mean.add(row.report.time_s);
  }

  auto to_object = [](const std::map<std::string, Mean>& means) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, mean] : means) obj[key] = mean.value();
    return obj;
  };
  auto nested = [&](const std::map<std::string, std::map<std::string, Mean>>& groups) {
    ordered_json obj = ordered_json::object();
    for (const auto& [mode, means] : groups) obj[mode] = to_object(means);
    return obj;
  };

  ordered_json doc;
  doc["case_count"] = case_ids.size();
  doc["row_count"] = rows.size();
  doc["inode_mean"] = to_object(inode_by_mode);
  doc["major_claim_by_method"] = nested(mc_by_method);
  doc["snode_by_threshold"] = nested(snode_by_threshold);
  doc["edge_by_constructor"] = nested(edge_by_constructor);
  doc["time_mean_s"] = time_mean.value();
  return doc.dump(indent) + "\n";
}

}  // namespace argmine
