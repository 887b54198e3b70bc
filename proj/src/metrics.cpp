#include "argmine/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "utf8.hpp"

namespace argmine {

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const auto ca = utf8::decode(a);
  const auto cb = utf8::decode(b);
  if (ca.empty()) return cb.size();
  if (cb.empty()) return ca.size();

  std::vector<std::size_t> row(cb.size() + 1);
  for (std::size_t j = 0; j <= cb.size(); ++j) row[j] = j;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    std::size_t corner = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const std::size_t upper = row[j + 1];
      if (ca[i] == cb[j]) {
        row[j + 1] = corner;
      } else {
        row[j + 1] = 1 + std::min({corner, upper, row[j]});
      }
      corner = upper;
    }
  }
  return row[cb.size()];
}

double node_similarity(std::string_view a, std::string_view b) {
  const std::size_t la = utf8::decode(a).size();
  const std::size_t lb = utf8::decode(b).size();
  if (la == 0 && lb == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) /
                   static_cast<double>(std::max(la, lb));
}

const NodeMapping::Entry* NodeMapping::find(
    std::string_view benchmark_id) const {
  for (const auto& entry : entries)
    if (entry.benchmark_id == benchmark_id) return &entry;
  return nullptr;
}

NodeMapping build_mapping(const ArgumentGraph& benchmark,
                          const ArgumentGraph& generated) {
  if (generated.inodes().empty())
    throw std::invalid_argument("generated graph has no I-nodes");

  const auto& bench = benchmark.inodes();
  const auto& gen = generated.inodes();

  struct Candidate {
    double similarity;
    std::size_t bench_index;
    std::size_t gen_index;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(bench.size() * gen.size());
  for (std::size_t b = 0; b < bench.size(); ++b)
    for (std::size_t g = 0; g < gen.size(); ++g)
      candidates.push_back({node_similarity(bench[b].text, gen[g].text), b, g});
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.similarity != y.similarity) return x.similarity > y.similarity;
              if (x.bench_index != y.bench_index) return x.bench_index < y.bench_index;
              return x.gen_index < y.gen_index;
            });

  std::vector<std::optional<std::size_t>> assigned(bench.size());
  std::vector<double> scores(bench.size(), 0.0);
  std::vector<bool> gen_used(gen.size(), false);
  for (const auto& c : candidates) {
    if (assigned[c.bench_index] || gen_used[c.gen_index]) continue;
    assigned[c.bench_index] = c.gen_index;
    scores[c.bench_index] = c.similarity;
    gen_used[c.gen_index] = true;
  }

  NodeMapping mapping;
  mapping.entries.reserve(bench.size());
  for (std::size_t b = 0; b < bench.size(); ++b) {
    NodeMapping::Entry entry;
    entry.benchmark_id = bench[b].id;
    if (assigned[b]) {
      entry.generated_id = gen[*assigned[b]].id;
      entry.similarity = scores[b];
    }
    mapping.entries.push_back(std::move(entry));
  }
  return mapping;
}

double inode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark, bool length_weighted) {
  if (mapping.entries.empty()) return 1.0;
  double weighted = 0.0, total = 0.0;
  for (const auto& entry : mapping.entries) {
    double weight = 1.0;
    if (length_weighted) {
      const Inode* node = benchmark.find_inode(entry.benchmark_id);
      weight = node ? static_cast<double>(utf8::decode(node->text).size()) : 0.0;
    }
    weighted += weight * entry.similarity;
    total += weight;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

int major_claim_agreement(const NodeMapping& mapping,
                          const ArgumentGraph& benchmark,
                          const ArgumentGraph& generated) {
  if (!benchmark.has_major_claim()) return 1;
  const auto* entry = mapping.find(benchmark.major_claim());
  if (entry == nullptr || !entry->generated_id) return 0;
  return generated.has_major_claim() &&
                 *entry->generated_id == generated.major_claim()
             ? 1
             : 0;
}

namespace {

// (in, out) I-node tuples around one benchmark S-node.
std::vector<std::pair<std::string, std::string>> snode_tuples(
    const ArgumentGraph& graph, const Snode& snode) {
  std::vector<std::string> ins, outs;
  for (const auto& e : graph.edges()) {
    if (e.to == snode.id && graph.is_inode(e.from)) ins.push_back(e.from);
    if (e.from == snode.id && graph.is_inode(e.to)) outs.push_back(e.to);
  }
  std::vector<std::pair<std::string, std::string>> tuples;
  for (const auto& in : ins)
    for (const auto& out : outs) tuples.emplace_back(in, out);
  return tuples;
}

}  // namespace

double snode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark,
                       const StanceOracle& oracle) {
  std::size_t total = 0, correct = 0;
  for (const auto& snode : benchmark.snodes()) {
    for (const auto& [in, out] : snode_tuples(benchmark, snode)) {
      ++total;
      const auto* in_entry = mapping.find(in);
      const auto* out_entry = mapping.find(out);
      if (!in_entry || !out_entry || !in_entry->generated_id ||
          !out_entry->generated_id)
        continue;
      const auto stance = oracle(*in_entry->generated_id, *out_entry->generated_id);
      if (stance && *stance == snode.stance) ++correct;
    }
  }
  return total == 0 ? 1.0
                    : static_cast<double>(correct) / static_cast<double>(total);
}

double snode_agreement(const NodeMapping& mapping,
                       const ArgumentGraph& benchmark,
                       const ArgumentGraph& generated) {
  // All stances the generated graph realizes between ordered I-node pairs.
  std::set<std::tuple<std::string, std::string, Stance>> realized;
  std::unordered_map<std::string, std::vector<std::string>> into_snode, from_snode;
  for (const auto& e : generated.edges()) {
    if (generated.find_snode(e.to) && generated.is_inode(e.from))
      into_snode[e.to].push_back(e.from);
    if (generated.find_snode(e.from) && generated.is_inode(e.to))
      from_snode[e.from].push_back(e.to);
  }
  for (const auto& snode : generated.snodes())
    for (const auto& in : into_snode[snode.id])
      for (const auto& out : from_snode[snode.id])
        realized.insert({in, out, snode.stance});

  std::size_t total = 0, correct = 0;
  for (const auto& snode : benchmark.snodes()) {
    for (const auto& [in, out] : snode_tuples(benchmark, snode)) {
      ++total;
      const auto* in_entry = mapping.find(in);
      const auto* out_entry = mapping.find(out);
      if (!in_entry || !out_entry || !in_entry->generated_id ||
          !out_entry->generated_id)
        continue;
      if (realized.count(
              {*in_entry->generated_id, *out_entry->generated_id, snode.stance}))
        ++correct;
    }
  }
  return total == 0 ? 1.0
                    : static_cast<double>(correct) / static_cast<double>(total);
}

double edge_agreement(const NodeMapping& mapping,
                      const ArgumentGraph& benchmark,
                      const ArgumentGraph& generated) {
  if (benchmark.edges().empty()) return 1.0;

  // Unordered generated I-node pairs connected through some S-node.
  std::set<std::pair<std::string, std::string>> connected;
  {
    std::unordered_map<std::string, std::vector<std::string>> into_snode,
        from_snode;
    for (const auto& e : generated.edges()) {
      if (generated.find_snode(e.to) && generated.is_inode(e.from))
        into_snode[e.to].push_back(e.from);
      if (generated.find_snode(e.from) && generated.is_inode(e.to))
        from_snode[e.from].push_back(e.to);
    }
    for (const auto& snode : generated.snodes())
      for (const auto& in : into_snode[snode.id])
        for (const auto& out : from_snode[snode.id]) {
          connected.insert({in, out});
          connected.insert({out, in});
        }
  }

  auto mapped_id = [&](const std::string& bench_id) -> const std::string* {
    const auto* entry = mapping.find(bench_id);
    return entry && entry->generated_id ? &*entry->generated_id : nullptr;
  };

  // Mark the two edges of every benchmark (in, s, out) triple whose mapped
  // endpoints are connected in the generated graph.
  std::set<std::pair<std::string, std::string>> marked;
  for (const auto& snode : benchmark.snodes()) {
    for (const auto& [in, out] : snode_tuples(benchmark, snode)) {
      const std::string* gen_in = mapped_id(in);
      const std::string* gen_out = mapped_id(out);
      if (!gen_in || !gen_out) continue;
      if (connected.count({*gen_in, *gen_out})) {
        marked.insert({in, snode.id});
        marked.insert({snode.id, out});
      }
    }
  }

  std::size_t hit = 0;
  for (const auto& e : benchmark.edges())
    if (marked.count({e.from, e.to})) ++hit;
  return static_cast<double>(hit) / static_cast<double>(benchmark.edges().size());
}

AgreementReport evaluate_pair(const ArgumentGraph& benchmark,
                              const ArgumentGraph& generated,
                              double elapsed_s) {
  const NodeMapping mapping = build_mapping(benchmark, generated);
  AgreementReport report;
  report.inode_agreement = inode_agreement(mapping, benchmark);
  report.major_claim_agreement = major_claim_agreement(mapping, benchmark, generated);
  report.snode_agreement = snode_agreement(mapping, benchmark, generated);
  report.edge_agreement = edge_agreement(mapping, benchmark, generated);
  report.time_s = elapsed_s;
  return report;
}

}  // namespace argmine
