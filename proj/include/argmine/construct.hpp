#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "argmine/classify.hpp"
#include "argmine/graph.hpp"
#include "argmine/majorclaim.hpp"

namespace argmine {

/// Fills the pairwise relation matrix over a document's units by running the
/// relation classifier on every ordered pair.
RelationMatrix predict_relations(std::span<const Adu> units,
                                 const LinearModel& relation_model,
                                 double neutral_threshold);

/// Constructed graph plus the I-node id assigned to each input unit (indexed
/// like the units list).
struct BuiltGraph {
  ArgumentGraph graph;
  std::vector<std::string> unit_inode_ids;
};

/// Every unit becomes an I-node attached directly to the major claim through
/// one S-node; two layers (one when the major claim is the only unit).
/// All constructors take the full unit list with the major claim at
/// major_claim_index and a relation matrix indexed the same way.
BuiltGraph build_flat_tree(std::span<const Adu> units,
                           std::size_t major_claim_index,
                           const RelationMatrix& relations);

/// Claims attach to the major claim; each premise attaches to the claim
/// nearest by sentence index (ties to the earlier claim). Without any claim
/// the premises attach directly to the major claim. Two or three layers.
BuiltGraph build_adu_position(std::span<const Adu> units,
                              std::size_t major_claim_index,
                              const RelationMatrix& relations);

struct PairwiseOptions {
  /// Per-unit attachment bound: relative multiplies the unit's maximum pair
  /// probability, absolute uses bound_factor itself.
  double bound_factor = 0.98;
  bool relative_bound = true;
  std::size_t max_iterations = 10;
};

/// Probability driven construction. Units scoring at least their bound
/// toward the major claim attach first (or, failing that, the first unit in
/// text order). Remaining units attach iteratively to every already placed
/// I-node meeting their bound, so an I-node may gain several outgoing edges.
/// Units still unplaced after max_iterations attach to the major claim with
/// a Support S-node.
BuiltGraph build_pairwise(std::span<const Adu> units,
                          std::size_t major_claim_index,
                          const RelationMatrix& relations,
                          const PairwiseOptions& options = {});

/// Dispatch by configured name: "flat", "position" or "pairwise".
BuiltGraph build_graph(std::string_view constructor_name,
                       std::span<const Adu> units,
                       std::size_t major_claim_index,
                       const RelationMatrix& relations,
                       const PairwiseOptions& options = {});

}  // namespace argmine
