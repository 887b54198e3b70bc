#include "argmine/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace argmine {

using nlohmann::ordered_json;

const char* to_string(Stance stance) {
  return stance == Stance::Support ? "support" : "attack";
}

std::string ArgumentGraph::fresh_id() { return std::to_string(next_id_++); }

void ArgumentGraph::note_external_id(const std::string& id) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), value);
  if (ec == std::errc() && ptr == id.data() + id.size() && value >= next_id_)
    next_id_ = value + 1;
}

ArgumentGraph ArgumentGraph::with_major_claim(std::string text,
                                              std::optional<SourceSpan> span) {
  if (text.empty())
    throw std::invalid_argument("major claim text must not be empty");
  ArgumentGraph g;
  Inode node{g.fresh_id(), std::move(text), span};
  g.major_claim_ = node.id;
  g.inodes_.push_back(std::move(node));
  return g;
}

ArgumentGraph ArgumentGraph::add_argument(const Inode& premise, Stance stance,
                                          std::optional<double> probability,
                                          const std::string& claim_id) const {
  const Inode* claim = find_inode(claim_id);
  if (claim == nullptr)
    throw std::invalid_argument("unknown claim id: " + claim_id);
  if (premise.text.empty())
    throw std::invalid_argument("premise text must not be empty");
  if (!premise.id.empty() &&
      (find_inode(premise.id) != nullptr || find_snode(premise.id) != nullptr))
    throw std::invalid_argument("duplicate node id: " + premise.id);

  ArgumentGraph g = *this;
  Inode node = premise;
  if (node.id.empty())
    node.id = g.fresh_id();
  else
    g.note_external_id(node.id);
  Snode scheme{g.fresh_id(), stance, probability};
  g.edges_.push_back({node.id, scheme.id});
  g.edges_.push_back({scheme.id, claim_id});
  g.inodes_.push_back(std::move(node));
  g.snodes_.push_back(std::move(scheme));
  return g;
}

const Inode* ArgumentGraph::find_inode(std::string_view id) const {
  for (const auto& n : inodes_)
    if (n.id == id) return &n;
  return nullptr;
}

const Snode* ArgumentGraph::find_snode(std::string_view id) const {
  for (const auto& n : snodes_)
    if (n.id == id) return &n;
  return nullptr;
}

bool ArgumentGraph::is_inode(std::string_view id) const {
  return find_inode(id) != nullptr;
}

namespace {

// Kahn topological check on the edge list; returns false if a cycle exists.
bool is_acyclic(const std::vector<GraphEdge>& edges,
                const std::unordered_set<std::string>& nodes) {
  std::unordered_map<std::string, int> indegree;
  std::unordered_map<std::string, std::vector<std::string>> out;
  for (const auto& id : nodes) indegree[id] = 0;
  for (const auto& e : edges) {
    if (!nodes.count(e.from) || !nodes.count(e.to)) continue;
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<std::string> queue;
  for (const auto& [id, deg] : indegree)
    if (deg == 0) queue.push_back(id);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::string id = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& next : out[id])
      if (--indegree[next] == 0) queue.push_back(next);
  }
  return seen == nodes.size();
}

}  // namespace

std::vector<Violation> ArgumentGraph::validate() const {
  std::vector<Violation> out;
  std::unordered_set<std::string> ids;

  for (const auto& n : inodes_) {
    if (!ids.insert(n.id).second)
      out.push_back({n.id, "duplicate id", "node id used more than once"});
    if (n.text.empty())
      out.push_back({n.id, "empty text", "I-node text must not be empty"});
    if (n.span && n.span->start >= n.span->end)
      out.push_back({n.id, "bad span", "span start must precede span end"});
  }
  for (const auto& n : snodes_) {
    if (!ids.insert(n.id).second)
      out.push_back({n.id, "duplicate id", "node id used more than once"});
    if (n.probability && (*n.probability < 0.0 || *n.probability > 1.0))
      out.push_back({n.id, "bad probability", "probability outside [0, 1]"});
  }

  if (major_claim_.empty()) {
    out.push_back({"", "missing major claim", "graph must designate a major claim"});
  } else if (find_inode(major_claim_) == nullptr) {
    out.push_back({major_claim_, "missing major claim",
                   "major claim id does not reference an I-node"});
  }

  std::set<std::pair<std::string, std::string>> seen_edges;
  std::unordered_map<std::string, int> s_in, s_out;
  for (const auto& n : snodes_) s_in[n.id] = s_out[n.id] = 0;

  for (const auto& e : edges_) {
    const std::string subject = e.from + "->" + e.to;
    const bool from_i = is_inode(e.from), to_i = is_inode(e.to);
    const bool from_s = find_snode(e.from) != nullptr;
    const bool to_s = find_snode(e.to) != nullptr;
    if ((!from_i && !from_s) || (!to_i && !to_s)) {
      out.push_back({subject, "dangling edge", "edge endpoint is not a node"});
      continue;
    }
    if (from_i && to_i)
      out.push_back({subject, "edge bypasses scheme node",
                     "I-nodes must be linked through an S-node"});
    if (!seen_edges.insert({e.from, e.to}).second)
      out.push_back({subject, "duplicate edge", "edge stored more than once"});
    if (from_s) ++s_out[e.from];
    if (to_s) ++s_in[e.to];
    if (from_i && e.from == major_claim_)
      out.push_back({subject, "major claim not root",
                     "the major claim must not have outgoing edges"});
  }

  for (const auto& n : snodes_) {
    if (s_in[n.id] < 1)
      out.push_back({n.id, "scheme node without premise",
                     "S-node needs at least one incoming edge"});
    if (s_out[n.id] != 1)
      out.push_back({n.id, "scheme node fan-out",
                     "S-node needs exactly one outgoing edge"});
  }

  std::unordered_set<std::string> nodes;
  for (const auto& n : inodes_) nodes.insert(n.id);
  for (const auto& n : snodes_) nodes.insert(n.id);
  if (!is_acyclic(edges_, nodes))
    out.push_back({"", "cycle", "graph must be acyclic"});

  // Every node must reach the major claim (the root of the whole graph).
  if (!major_claim_.empty() && find_inode(major_claim_) != nullptr &&
      is_acyclic(edges_, nodes)) {
    std::unordered_map<std::string, std::vector<std::string>> reverse;
    for (const auto& e : edges_) reverse[e.to].push_back(e.from);
    std::unordered_set<std::string> reachable{major_claim_};
    std::vector<std::string> stack{major_claim_};
    while (!stack.empty()) {
      std::string id = stack.back();
      stack.pop_back();
      for (const auto& prev : reverse[id])
        if (reachable.insert(prev).second) stack.push_back(prev);
    }
    for (const auto& id : nodes)
      if (!reachable.count(id))
        out.push_back({id, "unreachable node",
                       "node has no path to the major claim"});
  }

  return out;
}

std::size_t ArgumentGraph::depth() const {
  auto violations = validate();
  if (!violations.empty())
    throw std::invalid_argument("invalid graph: " + violations.front().rule +
                                " (" + violations.front().subject + ")");

  std::unordered_map<std::string, std::vector<std::string>> out;
  for (const auto& e : edges_) out[e.from].push_back(e.to);

  // Longest I-node count along any path from a node down to the major claim.
  std::unordered_map<std::string, std::size_t> memo;
  auto walk = [&](auto&& self, const std::string& id) -> std::size_t {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const std::size_t own = is_inode(id) ? 1 : 0;
    std::size_t best = 0;
    if (id != major_claim_)
      for (const auto& next : out[id]) best = std::max(best, self(self, next));
    memo[id] = own + best;
    return own + best;
  };

  std::size_t depth = 0;
  for (const auto& n : inodes_) depth = std::max(depth, walk(walk, n.id));
  return depth;
}

std::string ArgumentGraph::to_aif_json(int indent) const {
  auto violations = validate();
  if (!violations.empty())
    throw std::invalid_argument("cannot serialize invalid graph: " +
                                violations.front().rule);

  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (const auto& n : inodes_) {
    ordered_json node{{"id", n.id}, {"type", "I"}, {"text", n.text}};
    if (n.span) {
      node["spanStart"] = n.span->start;
      node["spanEnd"] = n.span->end;
    }
    doc["nodes"].push_back(std::move(node));
  }
  for (const auto& n : snodes_) {
    ordered_json node{{"id", n.id},
                      {"type", n.stance == Stance::Support ? "RA" : "CA"},
                      {"text", n.stance == Stance::Support ? "Support" : "Attack"}};
    if (n.probability) node["probability"] = *n.probability;
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : edges_)
    doc["edges"].push_back(ordered_json{{"from", e.from}, {"to", e.to}});
  doc["majorClaim"] = major_claim_;
  return doc.dump(indent) + "\n";
}

namespace {

std::string json_string(const ordered_json& node, const char* key,
                        const char* alias) {
  if (node.contains(key) && node[key].is_string())
    return node[key].get<std::string>();
  if (alias && node.contains(alias)) {
    const auto& v = node[alias];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
  }
  if (node.contains(key) && node[key].is_number_integer())
    return std::to_string(node[key].get<long long>());
  return {};
}

}  // namespace

ArgumentGraph ArgumentGraph::from_aif_json(std::string_view bytes,
                                           bool require_major_claim) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("aif parse: malformed JSON: ") +
                             e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw std::runtime_error("aif parse: document must hold a nodes array");

  ArgumentGraph g;
  std::unordered_set<std::string> ids;
  for (const auto& node : doc["nodes"]) {
    const std::string id = json_string(node, "id", "nodeID");
    if (id.empty())
      throw std::runtime_error("aif parse: node without id");
    if (!ids.insert(id).second)
      throw std::runtime_error("aif parse: duplicate node id " + id);
    std::string type = node.value("type", std::string{});
    std::transform(type.begin(), type.end(), type.begin(), ::toupper);
    if (type == "I") {
      Inode n{id, node.value("text", std::string{}), {}};
      if (node.contains("spanStart") && node.contains("spanEnd"))
        n.span = SourceSpan{node["spanStart"].get<std::size_t>(),
                            node["spanEnd"].get<std::size_t>()};
      g.inodes_.push_back(std::move(n));
    } else if (type == "RA" || type == "CA") {
      Snode n{id, type == "RA" ? Stance::Support : Stance::Attack, {}};
      if (node.contains("probability"))
        n.probability = node["probability"].get<double>();
      g.snodes_.push_back(std::move(n));
    } else {
      throw std::runtime_error("aif parse: unknown node type \"" + type +
                               "\" for node " + id);
    }
    g.note_external_id(id);
  }

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      throw std::runtime_error("aif parse: edges must be an array");
    for (const auto& edge : doc["edges"]) {
      const std::string from = json_string(edge, "from", "fromID");
      const std::string to = json_string(edge, "to", "toID");
      if (from.empty() || to.empty())
        throw std::runtime_error("aif parse: edge missing endpoint");
      g.edges_.push_back({from, to});
    }
  }

  std::string mc = json_string(doc, "majorClaim", "majorClaimID");
  if (mc.empty()) {
    if (require_major_claim)
      throw std::runtime_error("aif parse: graph must contain major claim");
  } else if (g.find_inode(mc) == nullptr) {
    throw std::runtime_error("aif parse: major claim " + mc +
                             " is not an I-node");
  }
  g.major_claim_ = std::move(mc);
  return g;
}

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t line = 0;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      line = 0;
      continue;
    }
    out.push_back(c);
    // Soft wrap long labels at word boundaries.
    if (++line > 32 && c == ' ') {
      out += "\\n";
      line = 0;
    }
  }
  return out;
}

}  // namespace

std::string ArgumentGraph::to_dot() const {
  auto violations = validate();
  if (!violations.empty())
    throw std::invalid_argument("cannot render invalid graph: " +
                                violations.front().rule);

  std::ostringstream os;
  os << "digraph argument_graph {\n";
  os << "  rankdir=BT;\n";
  os << "  node [fontname=\"Helvetica\", fontsize=10];\n";
  for (const auto& n : inodes_) {
    os << "  \"" << n.id << "\" [shape=box, style=\"rounded";
    if (n.id == major_claim_) os << ",filled,bold\", fillcolor=\"gold";
    os << "\", label=\"" << dot_escape(n.text) << "\"];\n";
  }
  for (const auto& n : snodes_) {
    const bool support = n.stance == Stance::Support;
    os << "  \"" << n.id << "\" [shape=ellipse, style=filled, fillcolor=\""
       << (support ? "palegreen" : "lightcoral") << "\", label=\""
       << (support ? "RA" : "CA") << "\"];\n";
  }
  for (const auto& e : edges_)
    os << "  \"" << e.from << "\" -> \"" << e.to << "\";\n";
  os << "}\n";
  return os.str();
}

bool structurally_equal(const ArgumentGraph& a, const ArgumentGraph& b) {
  if (a.major_claim() != b.major_claim()) return false;

  auto inode_key = [](const Inode& n) {
    return std::tuple(n.id, n.text, n.span.has_value(),
                      n.span ? n.span->start : 0, n.span ? n.span->end : 0);
  };
  auto snode_key = [](const Snode& n) {
    return std::tuple(n.id, static_cast<int>(n.stance), n.probability.has_value(),
                      n.probability.value_or(0.0));
  };

  auto ai = a.inodes(), bi = b.inodes();
  auto as = a.snodes(), bs = b.snodes();
  auto ae = a.edges(), be = b.edges();
  if (ai.size() != bi.size() || as.size() != bs.size() || ae.size() != be.size())
    return false;

  auto by_inode = [&](const Inode& x, const Inode& y) { return inode_key(x) < inode_key(y); };
  auto by_snode = [&](const Snode& x, const Snode& y) { return snode_key(x) < snode_key(y); };
  auto by_edge = [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  };
  std::sort(ai.begin(), ai.end(), by_inode);
  std::sort(bi.begin(), bi.end(), by_inode);
  std::sort(as.begin(), as.end(), by_snode);
  std::sort(bs.begin(), bs.end(), by_snode);
  std::sort(ae.begin(), ae.end(), by_edge);
  std::sort(be.begin(), be.end(), by_edge);

  for (std::size_t i = 0; i < ai.size(); ++i)
    if (inode_key(ai[i]) != inode_key(bi[i])) return false;
  for (std::size_t i = 0; i < as.size(); ++i)
    if (snode_key(as[i]) != snode_key(bs[i])) return false;
  return ae == be;
}

std::string GraphBuilder::add_inode(std::string text,
                                    std::optional<SourceSpan> span) {
  Inode node{graph_.fresh_id(), std::move(text), span};
  std::string id = node.id;
  graph_.inodes_.push_back(std::move(node));
  return id;
}

std::string GraphBuilder::add_snode(Stance stance,
                                    std::optional<double> probability) {
  Snode node{graph_.fresh_id(), stance, probability};
  std::string id = node.id;
  graph_.snodes_.push_back(std::move(node));
  return id;
}

void GraphBuilder::add_edge(std::string from, std::string to) {
  graph_.edges_.push_back({std::move(from), std::move(to)});
}

std::string GraphBuilder::link(const std::string& child_inode, Stance stance,
                               std::optional<double> probability,
                               const std::string& parent_inode) {
  std::string scheme = add_snode(stance, probability);
  add_edge(child_inode, scheme);
  add_edge(scheme, parent_inode);
  return scheme;
}

void GraphBuilder::set_major_claim(const std::string& inode_id) {
  graph_.major_claim_ = inode_id;
}

}  // namespace argmine
