#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgdual/edge_graph.hpp"
#include "dgdual/errors.hpp"
#include "dgdual/matrix.hpp"
#include "dgdual/normal_form.hpp"

namespace dgdual {

/// One closed directed walk in H covering every required edge exactly once
/// with every used vertex at total degree 2.
struct EulerPartial {
  std::vector<std::string> edge_sequence;
  std::set<std::size_t> used_vertices;  // 1-based vertex numbers
};

/// Hamilton cycles of G, each rotated to start at its smallest label.
struct CycleSet {
  std::vector<std::vector<std::string>> cycles;
  std::size_t count = 0;
};

namespace detail {

struct EulerSearch {
  struct Edge {
    std::string id;
    std::size_t tail, head;
    bool required;
  };

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out;  // per vertex, edge indices in label order
  std::size_t vertex_count = 0;
  std::size_t required_total = 0;
  std::optional<std::size_t> limit;

  std::vector<std::size_t> walk;
  std::vector<bool> used;
  std::size_t start = 0;
  std::size_t required_used = 0;
  std::vector<EulerPartial> results;

  bool done() const { return limit && results.size() >= *limit; }

  void emit() {
    EulerPartial ep;
    for (auto e : walk) {
      ep.edge_sequence.push_back(edges[e].id);
      ep.used_vertices.insert(edges[e].tail + 1);
    }
    results.push_back(std::move(ep));
  }

  // All unused required edges must stay traversable: their endpoints free (or
  // on the walk boundary) and their tails reachable without reusing vertices.
  bool feasible(std::size_t cur) const {
    for (const auto& e : edges) {
      if (!e.required) continue;
      bool on_walk = false;
      for (auto w : walk)
        if (edges[w].required && edges[w].id == e.id) on_walk = true;
      if (on_walk) continue;
      if (used[e.tail] && e.tail != cur) return false;
      if (used[e.head] && e.head != start) return false;
    }
    std::vector<bool> reach(vertex_count, false);
    std::vector<std::size_t> stack{cur};
    reach[cur] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto ei : out[v]) {
        auto h = edges[ei].head;
        if (!reach[h] && !used[h]) {
          reach[h] = true;
          stack.push_back(h);
        }
      }
    }
    for (const auto& e : edges) {
      if (!e.required) continue;
      bool on_walk = false;
      for (auto w : walk)
        if (edges[w].id == e.id) on_walk = true;
      if (!on_walk && !reach[e.tail]) return false;
    }
    return true;
  }

  void extend(std::size_t cur) {
    if (done()) return;
    if (cur == start) {
      if (required_used == required_total) emit();
      return;
    }
    if (used[cur]) return;
    used[cur] = true;
    if (feasible(cur)) {
      for (auto ei : out[cur]) {
        walk.push_back(ei);
        if (edges[ei].required) ++required_used;
        extend(edges[ei].head);
        if (edges[ei].required) --required_used;
        walk.pop_back();
        if (done()) break;
      }
    }
    used[cur] = false;
  }
};

}  // namespace detail

/// Enumerates Euler partial subgraphs of H, anchored at the required edge
/// with the smallest label; extensions follow edge-label order.
inline std::vector<EulerPartial> euler_partial_graphs(
    const EdgeGraphModel& model, std::optional<std::size_t> limit = std::nullopt) {
  detail::EulerSearch search;
  search.vertex_count = model.h.vertex_count();
  search.limit = limit;
  for (const auto& e : model.h.edges())
    search.edges.push_back({e.id, e.tail, e.head, !model.added_labels.count(e.id)});
  for (const auto& e : search.edges)
    if (e.required) ++search.required_total;
  if (search.required_total == 0) return {};

  std::vector<std::size_t> order(search.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return search.edges[a].id < search.edges[b].id;
  });
  search.out.assign(search.vertex_count, {});
  for (auto i : order) search.out[search.edges[i].tail].push_back(i);

  std::size_t anchor = order[0];
  for (auto i : order)
    if (search.edges[i].required) {
      anchor = i;
      break;
    }

  search.used.assign(search.vertex_count, false);
  search.start = search.edges[anchor].tail;
  search.used[search.start] = true;
  search.walk.push_back(anchor);
  search.required_used = search.edges[anchor].required ? 1 : 0;
  search.extend(search.edges[anchor].head);
  return search.results;
}

/// Reads the required-edge subsequence of the walk as G vertices, rotated to
/// start at the lexicographically smallest label.
inline std::vector<std::string> hamilton_from_euler(const EulerPartial& ep,
                                                    const EdgeGraphModel& model) {
  if (ep.edge_sequence.empty()) throw InvalidPartial("empty walk");
  std::unordered_map<std::string, const Digraph::Edge*> by_id;
  for (const auto& e : model.h.edges()) by_id[e.id] = &e;

  std::vector<const Digraph::Edge*> walk;
  for (const auto& id : ep.edge_sequence) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw InvalidPartial("unknown edge in walk: " + id);
    walk.push_back(it->second);
  }
  std::set<std::size_t> tails_seen;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto* next = walk[(i + 1) % walk.size()];
    if (walk[i]->head != next->tail) throw InvalidPartial("walk is not closed and consecutive");
    if (!tails_seen.insert(walk[i]->tail).second)
      throw InvalidPartial("walk revisits a vertex");
  }
  std::vector<std::string> cycle;
  std::set<std::string> required_seen;
  for (const auto* e : walk)
    if (!model.added_labels.count(e->id)) {
      if (!required_seen.insert(e->id).second)
        throw InvalidPartial("required edge appears twice");
      cycle.push_back(e->id);
    }
  std::size_t required_total = 0;
  for (const auto& e : model.h.edges())
    if (!model.added_labels.count(e.id)) ++required_total;
  if (cycle.size() != required_total) throw InvalidPartial("walk misses a required edge");

  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

/// Complete-enumeration oracle over cyclic vertex orders.
inline CycleSet brute_force_hamilton(const BinaryMatrix& m, std::size_t cap = 9) {
  const auto n = m.order();
  if (n > cap) throw TooLarge("brute force capped at order " + std::to_string(cap));
  CycleSet out;
  if (n == 1) return out;  // a length-1 cycle is not defined

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return m.labels()[a] < m.labels()[b]; });
  std::vector<std::size_t> rest(order.begin() + 1, order.end());
  do {
    std::vector<std::size_t> cycle{order[0]};
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (!m.at(cycle[i], cycle[(i + 1) % n])) ok = false;
    if (ok) {
      std::vector<std::string> labels;
      for (auto v : cycle) labels.push_back(m.labels()[v]);
      out.cycles.push_back(std::move(labels));
    }
  } while (std::next_permutation(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return m.labels()[a] < m.labels()[b];
  }));
  out.count = out.cycles.size();
  return out;
}

/// Full pipeline: normalize, build H, enumerate Euler partials, map each to a
/// Hamilton cycle of G. Diagonal loops are ignored. The canonical form is
/// used so that complicated vertices cannot hide vertex-repeating cycles.
inline CycleSet hamilton_cycles(const BinaryMatrix& m,
                                std::optional<std::size_t> limit = std::nullopt,
                                bool use_canonical = true) {
  const auto n = m.order();
  BinaryMatrix loopless = m;
  for (std::size_t i = 0; i < n; ++i) loopless.set(i, i, 0);

  auto norm = use_canonical ? canonicalize(loopless) : quasinormalize(loopless);
  auto model = build_edge_graph(norm.matrix, &norm.trace);
  auto partials = euler_partial_graphs(model, limit);

  std::set<std::vector<std::string>> unique;
  for (const auto& ep : partials) {
    auto cycle = hamilton_from_euler(ep, model);
    if (cycle.size() != n) throw Error("internal: cycle does not cover all vertices");
    std::set<std::string> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != n) throw Error("internal: cycle repeats a vertex");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto a = m.row_index(cycle[i]);
      auto b = m.col_index(cycle[(i + 1) % cycle.size()]);
      if (!m.at(a, b)) throw Error("internal: emitted cycle uses a missing edge");
    }
    unique.insert(std::move(cycle));
  }
  CycleSet out;
  out.cycles.assign(unique.begin(), unique.end());
  out.count = out.cycles.size();
  return out;
}

namespace detail {

// Restricted-growth enumeration of endpoint identifications: slot i < n is
// the head of edge i, slot n + j is the tail of edge j. Valid iff
// (head_i ~ tail_j) <=> m_ij for all i, j.
inline bool realizable_rec(const BinaryMatrix& m, std::vector<std::size_t>& block,
                           std::size_t slot, std::size_t max_block) {
  const auto n = m.order();
  if (slot == 2 * n) return true;
  for (std::size_t b = 0; b <= max_block; ++b) {
    block[slot] = b;
    bool ok = true;
    if (slot >= n) {
      const auto j = slot - n;
      for (std::size_t i = 0; i < n && ok; ++i)
        if ((block[i] == b) != (m.at(i, j) == 1)) ok = false;
    }
    if (ok && realizable_rec(m, block, slot + 1, std::max(max_block, b + 1))) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive realizability oracle: is there any digraph H whose edge-adjacency
/// matrix equals m?
inline bool realizability_oracle(const BinaryMatrix& m, std::size_t cap = 5) {
  const auto n = m.order();
  if (n > cap) throw TooLarge("realizability oracle capped at order " + std::to_string(cap));
  std::vector<std::size_t> block(2 * n, 0);
  return detail::realizable_rec(m, block, 0, 0);
}

}  // namespace dgdual
