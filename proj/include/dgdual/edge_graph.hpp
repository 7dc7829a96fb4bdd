#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dgdual/digraph.hpp"
#include "dgdual/errors.hpp"
#include "dgdual/matrix.hpp"
#include "dgdual/normal_form.hpp"
#include "dgdual/trace.hpp"

namespace dgdual {

/// All-ones block decomposition of a quasicanonical matrix. Each block is one
/// vertex of the edge graph H; empty columns/rows map to terminal vertices.
struct BlockDecomposition {
  struct Block {
    std::size_t vertex_number = 0;  // 1-based
    std::vector<std::string> in_rows;
    std::vector<std::string> out_cols;
  };

  std::vector<Block> blocks;
  std::optional<std::size_t> initial_vertex;
  std::vector<std::string> source_edges;  // labels with an empty column
  std::optional<std::size_t> final_vertex;
  std::vector<std::string> sink_edges;  // labels with an empty row
};

inline BlockDecomposition decompose_blocks(const BinaryMatrix& m) {
  if (!quasicanonical_check(m).passed)
    throw NotQuasicanonical("matrix does not pass the quasicanonical check");
  const auto n = m.order();

  BlockDecomposition dec;
  std::vector<bool> row_done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (row_done[i]) continue;
    std::vector<std::size_t> pattern;
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j)) pattern.push_back(j);
    if (pattern.empty()) continue;  // sink edge, no block

    BlockDecomposition::Block block;
    block.vertex_number = dec.blocks.size() + 1;
    for (std::size_t a = i; a < n; ++a) {
      if (row_done[a]) continue;
      bool congruent = true;
      std::size_t k = 0;
      for (std::size_t j = 0; j < n && congruent; ++j) {
        const bool one = m.at(a, j);
        if (one != (k < pattern.size() && pattern[k] == j)) congruent = false;
        if (one) ++k;
      }
      if (congruent && k == pattern.size()) {
        block.in_rows.push_back(m.labels()[a]);
        row_done[a] = true;
      }
    }
    for (auto j : pattern) block.out_cols.push_back(m.labels()[j]);

    // Cross-check: every column of the block must be supported by exactly the
    // block's rows. Cannot fail on genuinely quasicanonical input.
    std::set<std::string> rows(block.in_rows.begin(), block.in_rows.end());
    for (auto j : pattern) {
      std::set<std::string> support;
      for (std::size_t a = 0; a < n; ++a)
        if (m.at(a, j)) support.insert(m.labels()[a]);
      if (support != rows) throw InconsistentBlocks("column support does not match block rows");
    }
    dec.blocks.push_back(std::move(block));
  }

  auto [rows, cols] = row_col_sums(m);
  for (std::size_t j = 0; j < n; ++j)
    if (cols[j] == 0) dec.source_edges.push_back(m.labels()[j]);
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i] == 0) dec.sink_edges.push_back(m.labels()[i]);
  std::size_t next = dec.blocks.size() + 1;
  if (!dec.source_edges.empty()) dec.initial_vertex = next++;
  if (!dec.sink_edges.empty()) dec.final_vertex = next++;
  return dec;
}

/// The constructed edge graph H plus the per-edge tail/head vertex numbers
/// and the vertex adjacency matrix F.
struct EdgeGraphModel {
  Digraph h;
  BinaryMatrix f;
  BlockDecomposition decomposition;
  std::map<std::string, std::size_t> tails;  // label -> vertex number (1-based)
  std::map<std::string, std::size_t> heads;
  std::set<std::string> added_labels;
  bool split_terminals = false;
};

inline BinaryMatrix f_matrix(const EdgeGraphModel& model) {
  const auto n = model.h.vertex_count();
  std::vector<std::uint8_t> cells(n * n, 0);
  for (const auto& e : model.h.edges()) cells[e.tail * n + e.head] = 1;
  return BinaryMatrix(model.h.vertex_labels(), model.h.vertex_labels(), std::move(cells));
}

inline EdgeGraphModel build_edge_graph(const BinaryMatrix& m,
                                       const TransformTrace* trace = nullptr,
                                       bool split_terminals = false) {
  EdgeGraphModel model;
  model.decomposition = decompose_blocks(m);
  model.split_terminals = split_terminals;
  const auto& dec = model.decomposition;

  for (const auto& b : dec.blocks) model.h.add_vertex("v" + std::to_string(b.vertex_number));

  std::unordered_map<std::string, std::size_t> tail_vx, head_vx;  // 0-based vertex ids
  for (const auto& b : dec.blocks) {
    for (const auto& r : b.in_rows) head_vx[r] = b.vertex_number - 1;
    for (const auto& c : b.out_cols) tail_vx[c] = b.vertex_number - 1;
  }
  if (split_terminals) {
    for (const auto& q : dec.source_edges) tail_vx[q] = model.h.add_vertex("v_init_" + q);
    for (const auto& q : dec.sink_edges) head_vx[q] = model.h.add_vertex("v_fin_" + q);
  } else {
    if (!dec.source_edges.empty()) {
      auto v = model.h.add_vertex("v_init");
      for (const auto& q : dec.source_edges) tail_vx[q] = v;
    }
    if (!dec.sink_edges.empty()) {
      auto v = model.h.add_vertex("v_fin");
      for (const auto& q : dec.sink_edges) head_vx[q] = v;
    }
  }

  for (const auto& q : m.labels()) {
    model.h.add_edge(q, tail_vx.at(q), head_vx.at(q));
    model.tails[q] = tail_vx.at(q) + 1;
    model.heads[q] = head_vx.at(q) + 1;
  }
  if (trace) {
    for (const auto& s : trace->steps)
      if (s.kind == TransformTrace::Step::Kind::Subdivide) model.added_labels.insert(s.label);
  }
  model.f = f_matrix(model);
  return model;
}

/// Duality round trip: the edge adjacency of the built H, read back in m's
/// label order, must equal m cell for cell.
inline bool validate_duality(const BinaryMatrix& m, const EdgeGraphModel& model) {
  auto r = edge_adjacency_of(model.h);
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < r.order(); ++i) pos[r.labels()[i]] = i;
  if (r.order() != m.order()) throw LabelMismatch("edge set differs from matrix labels");
  std::vector<std::size_t> perm(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    auto it = pos.find(m.labels()[i]);
    if (it == pos.end()) throw LabelMismatch("edge set differs from matrix labels");
    perm[i] = it->second;
  }
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      if (m.at(i, j) != r.at(perm[i], perm[j])) return false;
  return true;
}

/// Reconstructs the pre-normalization matrix: original edges x, y are related
/// iff y departs the head vertex of x directly or through a chain of added
/// edges (transit contiguity).
inline BinaryMatrix transit_adjacency(const EdgeGraphModel& model, const TransformTrace& trace) {
  std::set<std::string> labels_in_model;
  for (const auto& e : model.h.edges()) labels_in_model.insert(e.id);
  std::set<std::string> added;
  for (const auto& s : trace.steps) {
    if (s.kind != TransformTrace::Step::Kind::Subdivide)
      throw TraceMismatch("transit adjacency expects a subdivide-only trace");
    if (!labels_in_model.count(s.label) || !labels_in_model.count(s.x) ||
        !labels_in_model.count(s.y))
      throw TraceMismatch("trace mentions a label unknown to the model");
    added.insert(s.label);
  }
  if (added != model.added_labels) throw TraceMismatch("trace disagrees with model added labels");

  std::vector<std::string> originals;
  for (const auto& e : model.h.edges())
    if (!added.count(e.id)) originals.push_back(e.id);

  // Successor lists from H adjacency: b follows a iff head(a) = tail(b).
  std::vector<std::vector<std::size_t>> succ(model.h.edge_count());
  const auto& edges = model.h.edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (edges[a].head == edges[b].tail) succ[a].push_back(b);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i].id] = i;

  const auto n = originals.size();
  std::unordered_map<std::string, std::size_t> opos;
  for (std::size_t i = 0; i < n; ++i) opos[originals[i]] = i;
  std::vector<std::uint8_t> cells(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // DFS through added edges only; original successors terminate a chain.
    std::vector<std::size_t> stack{index[originals[i]]};
    std::unordered_set<std::size_t> seen;
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (auto nxt : succ[cur]) {
        if (added.count(edges[nxt].id)) {
          if (seen.insert(nxt).second) stack.push_back(nxt);
        } else {
          cells[i * n + opos[edges[nxt].id]] = 1;
        }
      }
    }
  }
  return BinaryMatrix(std::move(originals), std::move(cells));
}

}  // namespace dgdual
