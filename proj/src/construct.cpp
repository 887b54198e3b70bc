#include "argmine/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace argmine {

RelationMatrix predict_relations(std::span<const Adu> units,
                                 const LinearModel& relation_model,
                                 double neutral_threshold) {
  RelationMatrix matrix(units.size());
  for (std::size_t from = 0; from < units.size(); ++from)
    for (std::size_t to = 0; to < units.size(); ++to) {
      if (from == to) continue;
      matrix.set(from, to,
                 classify_relation(units[from].embedding.values,
                                   units[to].embedding.values, relation_model,
                                   neutral_threshold));
    }
  return matrix;
}

namespace {

void check_units(std::span<const Adu> units, std::size_t major_claim_index,
                 const RelationMatrix& relations) {
  if (units.empty()) throw std::invalid_argument("unit list must not be empty");
  if (major_claim_index >= units.size())
    throw std::invalid_argument("major claim index out of range");
  if (relations.unit_count() != units.size())
    throw std::invalid_argument("relation matrix size does not match units");
  std::unordered_set<std::size_t> seen;
  for (const auto& unit : units)
    if (!seen.insert(unit.span.index).second)
      throw std::invalid_argument("duplicate ADU at sentence index " +
                                  std::to_string(unit.span.index));
}

// Stance and probability for a child -> parent S-node. Pairs missing from
// the matrix fall back to Support without a probability.
std::pair<Stance, std::optional<double>> stance_between(
    const RelationMatrix& relations, std::size_t child, std::size_t parent) {
  if (const auto* p = relations.get(child, parent))
    return {p->stance, p->probability};
  return {Stance::Support, std::nullopt};
}

SourceSpan to_source_span(const SentenceSpan& span) {
  return {span.start, span.end};
}

}  // namespace

BuiltGraph build_flat_tree(std::span<const Adu> units,
                           std::size_t major_claim_index,
                           const RelationMatrix& relations) {
  check_units(units, major_claim_index, relations);

  GraphBuilder builder;
  std::vector<std::string> ids(units.size());
  ids[major_claim_index] =
      builder.add_inode(units[major_claim_index].span.text,
                        to_source_span(units[major_claim_index].span));
  builder.set_major_claim(ids[major_claim_index]);

  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i == major_claim_index) continue;
    ids[i] = builder.add_inode(units[i].span.text, to_source_span(units[i].span));
    const auto [stance, probability] =
        stance_between(relations, i, major_claim_index);
    builder.link(ids[i], stance, probability, ids[major_claim_index]);
  }
  return {builder.take(), std::move(ids)};
}

BuiltGraph build_adu_position(std::span<const Adu> units,
                              std::size_t major_claim_index,
                              const RelationMatrix& relations) {
  check_units(units, major_claim_index, relations);

  GraphBuilder builder;
  std::vector<std::string> ids(units.size());
  ids[major_claim_index] =
      builder.add_inode(units[major_claim_index].span.text,
                        to_source_span(units[major_claim_index].span));
  builder.set_major_claim(ids[major_claim_index]);

  std::vector<std::size_t> claims;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (i != major_claim_index && units[i].role == AduRole::Claim)
      claims.push_back(i);

  for (std::size_t i : claims) {
    ids[i] = builder.add_inode(units[i].span.text, to_source_span(units[i].span));
    const auto [stance, probability] =
        stance_between(relations, i, major_claim_index);
    builder.link(ids[i], stance, probability, ids[major_claim_index]);
  }

  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i == major_claim_index || units[i].role == AduRole::Claim) continue;
    ids[i] = builder.add_inode(units[i].span.text, to_source_span(units[i].span));

    std::size_t parent = major_claim_index;
    if (!claims.empty()) {
      // Nearest claim by sentence index; on a tie the earlier claim wins.
      parent = claims.front();
      auto distance = [&](std::size_t claim) {
        const auto a = units[claim].span.index, b = units[i].span.index;
        return a > b ? a - b : b - a;
      };
      for (std::size_t claim : claims)
        if (distance(claim) < distance(parent)) parent = claim;
    }
    const auto [stance, probability] = stance_between(relations, i, parent);
    builder.link(ids[i], stance, probability, ids[parent]);
  }
  return {builder.take(), std::move(ids)};
}

BuiltGraph build_pairwise(std::span<const Adu> units,
                          std::size_t major_claim_index,
                          const RelationMatrix& relations,
                          const PairwiseOptions& options) {
  check_units(units, major_claim_index, relations);
  if (options.bound_factor <= 0.0 || options.bound_factor > 1.0)
    throw std::invalid_argument("bound factor must lie in (0, 1]");
  if (options.max_iterations < 1)
    throw std::invalid_argument("max iterations must be at least 1");

  GraphBuilder builder;
  std::vector<std::string> ids(units.size());
  ids[major_claim_index] =
      builder.add_inode(units[major_claim_index].span.text,
                        to_source_span(units[major_claim_index].span));
  builder.set_major_claim(ids[major_claim_index]);

  // Per-unit lower bound derived from its best partner probability.
  std::vector<double> bound(units.size(), options.bound_factor);
  if (options.relative_bound) {
    for (std::size_t i = 0; i < units.size(); ++i) {
      double peak = 0.0;
      for (std::size_t j = 0; j < units.size(); ++j)
        if (const auto* p = relations.get(i, j))
          peak = std::max(peak, p->probability);
      bound[i] = options.bound_factor * peak;
    }
  }

  // Processing order follows text position.
  std::vector<std::size_t> doc_order;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (i != major_claim_index) doc_order.push_back(i);
  std::sort(doc_order.begin(), doc_order.end(), [&](std::size_t a, std::size_t b) {
    return units[a].span.index < units[b].span.index;
  });

  std::vector<bool> placed(units.size(), false);
  placed[major_claim_index] = true;
  std::vector<std::size_t> placement_order{major_claim_index};
  auto place = [&](std::size_t unit) {
    ids[unit] =
        builder.add_inode(units[unit].span.text, to_source_span(units[unit].span));
    placed[unit] = true;
    placement_order.push_back(unit);
  };

  bool mc_has_children = false;
  for (std::size_t i : doc_order) {
    const auto* toward_mc = relations.get(i, major_claim_index);
    if (toward_mc && toward_mc->probability >= bound[i]) {
      place(i);
      builder.link(ids[i], toward_mc->stance, toward_mc->probability,
                   ids[major_claim_index]);
      mc_has_children = true;
    }
  }

  if (!mc_has_children && !doc_order.empty()) {
    // Seed the graph with the unit occurring first in the text.
    const std::size_t first = doc_order.front();
    place(first);
    const auto [stance, probability] =
        stance_between(relations, first, major_claim_index);
    builder.link(ids[first], stance, probability, ids[major_claim_index]);
  }

  for (std::size_t pass = 0; pass < options.max_iterations; ++pass) {
    bool progress = false;
    bool all_placed = true;
    for (std::size_t i : doc_order) {
      if (placed[i]) continue;
      // Attach to every already placed I-node meeting the bound.
      std::vector<std::size_t> parents;
      for (std::size_t parent : placement_order)
        if (const auto* p = relations.get(i, parent);
            p && p->probability >= bound[i])
          parents.push_back(parent);
      if (parents.empty()) {
        all_placed = false;
        continue;
      }
      place(i);
      for (std::size_t parent : parents) {
        const auto* p = relations.get(i, parent);
        builder.link(ids[i], p->stance, p->probability, ids[parent]);
      }
      progress = true;
    }
    if (all_placed || !progress) break;
  }

  for (std::size_t i : doc_order) {
    if (placed[i]) continue;
    place(i);
    builder.link(ids[i], Stance::Support, std::nullopt, ids[major_claim_index]);
  }

  return {builder.take(), std::move(ids)};
}

BuiltGraph build_graph(std::string_view constructor_name,
                       std::span<const Adu> units,
                       std::size_t major_claim_index,
                       const RelationMatrix& relations,
                       const PairwiseOptions& options) {
  if (constructor_name == "flat")
    return build_flat_tree(units, major_claim_index, relations);
  if (constructor_name == "position")
    return build_adu_position(units, major_claim_index, relations);
  if (constructor_name == "pairwise")
    return build_pairwise(units, major_claim_index, relations, options);
  throw std::invalid_argument("unknown graph constructor: " +
                              std::string(constructor_name));
}

}  // namespace argmine
