#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argmine/graph.hpp"

namespace argmine {

/// Edit distance over unicode codepoints (insert, delete, substitute).
std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - levenshtein(a, b) / max(|a|, |b|); two empty strings score 1.
double node_similarity(std::string_view a, std::string_view b);

/// Injective assignment of benchmark I-nodes to generated I-nodes, greedy by
/// descending text similarity. Benchmark nodes left over when the generated
/// graph is smaller stay unmapped with similarity 0.
struct NodeMapping {
  struct Entry {
    std::string benchmark_id;
    std::optional<std::string> generated_id;
    double similarity = 0.0;
  };
  std::vector<Entry> entries;  // one per benchmark I-node, document order

  const Entry* find(std::string_view benchmark_id) const;
};

/// Throws std::invalid_argument when the generated graph has no I-nodes.
/// Ties resolve by document order, benchmark node first, then generated.
NodeMapping build_mapping(const ArgumentGraph& benchmark,
                          const ArgumentGraph& generated);

/// Mean mapped similarity over benchmark I-nodes, weighted by their text
/// length (codepoints) unless length_weighted is false. Unmapped nodes
/// contribute 0.
double inode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark,
                       bool length_weighted = true);

/// 1 when the benchmark major claim maps onto the generated major claim, or
/// when the benchmark defines none; 0 otherwise.
int major_claim_agreement(const NodeMapping& mapping,
                          const ArgumentGraph& benchmark,
                          const ArgumentGraph& generated);

/// Stance assigned by the generated side to an ordered pair of generated
/// I-node ids, or nullopt when it assigns none.
using StanceOracle = std::function<std::optional<Stance>(
    const std::string& from_id, const std::string& to_id)>;

/// Fraction of benchmark S-node (in, out) tuples whose mapped pair carries
/// the same stance on the generated side. No tuples means agreement 1.
double snode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark,
                       const StanceOracle& oracle);
double snode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark,
                       const ArgumentGraph& generated);

/// Fraction of benchmark edges covered by mapped I-node pairs that are
/// connected (in any direction, stance ignored) in the generated graph.
/// No benchmark edges means agreement 1.
double edge_agreement(const NodeMapping& mapping,
                      const ArgumentGraph& benchmark,
                      const ArgumentGraph& generated);

struct AgreementReport {
  double inode_agreement = 0.0;
  int major_claim_agreement = 0;
  double snode_agreement = 0.0;
  double edge_agreement = 0.0;
  double time_s = 0.0;  // processing time, initialization excluded
};

/// Bundles the four agreements plus the caller-measured processing time.
AgreementReport evaluate_pair(const ArgumentGraph& benchmark,
                              const ArgumentGraph& generated,
                              double elapsed_s = 0.0);

}  // namespace argmine
