#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argmine {

/// Polarity of a scheme node: a premise either supports or attacks its claim.
enum class Stance { Support, Attack };

const char* to_string(Stance stance);

/// Character offsets [start, end) into the source document.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Information node: holds the text of one argumentative discourse unit.
struct Inode {
  std::string id;
  std::string text;
  std::optional<SourceSpan> span;
};

/// Scheme node: encodes a support or attack relation between I-nodes.
struct Snode {
  std::string id;
  Stance stance = Stance::Support;
  std::optional<double> probability;  // classifier confidence, when known
};

struct GraphEdge {
  std::string from;
  std::string to;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// One broken well-formedness rule, reported by ArgumentGraph::validate().
struct Violation {
  std::string subject;  // node id or "from->to" for edges
  std::string rule;
  std::string message;
};

/// A rooted argument graph: I-nodes and S-nodes joined by directed edges,
/// with one I-node designated as the major claim (the root).
///
/// Graphs are immutable values; mutating operations return a new graph.
/// Node ids are monotonically increasing integers rendered as strings, so
/// identical construction sequences yield identical graphs.
class ArgumentGraph {
 public:
  ArgumentGraph() = default;

  /// Single-node graph holding only the major claim.
  static ArgumentGraph with_major_claim(std::string text,
                                        std::optional<SourceSpan> span = {});

  /// Copy of this graph extended by one premise I-node, one S-node and the
  /// two edges premise -> S-node -> claim. If premise.id is empty a fresh id
  /// is assigned. Throws std::invalid_argument on an unknown claim id, a
  /// duplicate premise id, or empty premise text.
  ArgumentGraph add_argument(const Inode& premise, Stance stance,
                             std::optional<double> probability,
                             const std::string& claim_id) const;

  const std::vector<Inode>& inodes() const { return inodes_; }
  const std::vector<Snode>& snodes() const { return snodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  bool has_major_claim() const { return !major_claim_.empty(); }
  const std::string& major_claim() const { return major_claim_; }

  const Inode* find_inode(std::string_view id) const;
  const Snode* find_snode(std::string_view id) const;
  bool is_inode(std::string_view id) const;

  /// All well-formedness violations; empty iff the graph is valid.
  std::vector<Violation> validate() const;

  /// Number of I-node layers on the longest I-node path to the major claim;
  /// the major claim alone is depth 1. Throws std::invalid_argument if the
  /// graph is not valid.
  std::size_t depth() const;

  /// AIF-style JSON: nodes [{id, type in {"I","RA","CA"}, text}], edges
  /// [{from, to}], top-level "majorClaim". Source spans and S-node
  /// probabilities are carried in optional fields. Throws on invalid graphs.
  std::string to_aif_json(int indent = 2) const;

  /// Parses the schema written by to_aif_json. Also accepts the field
  /// spellings nodeID/fromID/toID/majorClaimID seen in other AIF exports.
  /// With require_major_claim=false a missing major claim annotation is
  /// tolerated (used when reading third-party benchmark files).
  static ArgumentGraph from_aif_json(std::string_view bytes,
                                     bool require_major_claim = true);

  /// Graphviz DOT rendering. The major claim is highlighted and support and
  /// attack S-nodes use distinct colors. Throws on invalid graphs.
  std::string to_dot() const;

  friend class GraphBuilder;

 private:
  std::string fresh_id();
  void note_external_id(const std::string& id);

  std::vector<Inode> inodes_;
  std::vector<Snode> snodes_;
  std::vector<GraphEdge> edges_;
  std::string major_claim_;
  std::uint64_t next_id_ = 1;
};

/// Equality on logical content (node ids, texts, spans, stances,
/// probabilities, edges, major claim) irrespective of storage order.
bool structurally_equal(const ArgumentGraph& a, const ArgumentGraph& b);

/// Incremental assembly used by the graph constructors. Unlike add_argument
/// it permits linking one child to several parents.
class GraphBuilder {
 public:
  std::string add_inode(std::string text, std::optional<SourceSpan> span = {});
  std::string add_snode(Stance stance, std::optional<double> probability = {});
  void add_edge(std::string from, std::string to);

  /// Adds an S-node plus the edges child -> S-node -> parent; returns the
  /// S-node id.
  std::string link(const std::string& child_inode, Stance stance,
                   std::optional<double> probability,
                   const std::string& parent_inode);

  void set_major_claim(const std::string& inode_id);

  const ArgumentGraph& graph() const { return graph_; }
  ArgumentGraph take() { return std::move(graph_); }

 private:
  ArgumentGraph graph_;
};

}  // namespace argmine
