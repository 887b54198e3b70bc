#pragma once

#include <memory>
#include <string>
#include <vector>

#include "argmine/corpus.hpp"
#include "argmine/metrics.hpp"
#include "argmine/pipeline.hpp"

namespace argmine {

/// Parameter axes swept by run_evaluation; the cartesian product is run per
/// corpus case.
struct EvalGrid {
  std::vector<PipelineMode> modes;
  std::vector<std::string> mc_methods;
  std::vector<std::string> constructors;
  std::vector<double> thresholds;

  /// Exactly the combination named by the config.
  static EvalGrid single(const PipelineConfig& config);

  /// Full sweep: both modes, all four major claim methods, all three
  /// constructors, thresholds 0.5 through 1.0.
  static EvalGrid standard();
};

struct CaseRow {
  std::string case_id;
  PipelineMode mode = PipelineMode::EndToEnd;
  std::string mc_method;
  std::string constructor_name;
  double threshold = 0.6;
  AgreementReport report;
  bool no_argument = false;
};

struct EvalReport {
  std::vector<CaseRow> rows;

  /// One row per case and configuration:
  /// case_id,mode,mc_method,constructor,threshold,inode,major_claim,snode,edge,time_s
  std::string to_csv() const;

  /// Per-slice arithmetic means shaped for the usual comparison tables:
  /// overall I-node agreement per mode, major claim agreement by method,
  /// S-node agreement by threshold and edge agreement by constructor.
  std::string aggregate_json(int indent = 2) const;
};

/// Runs every grid combination over every case carrying a benchmark and
/// scores the generated graphs. Cases without benchmarks are skipped. Cases
/// are processed concurrently (config.workers, 0 = hardware concurrency);
/// rows come back sorted. Throws when the corpus is empty or no case has a
/// benchmark.
EvalReport run_evaluation(const std::vector<CorpusCase>& cases,
                          const PipelineConfig& base, const EvalGrid& grid,
                          std::shared_ptr<const PipelineModels> models);

}  // namespace argmine
