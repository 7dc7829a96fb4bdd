#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "dgdual/errors.hpp"
#include "dgdual/matrix.hpp"

namespace dgdual {

/// Labeled directed multigraph. Parallel edges and loops are allowed.
class Digraph {
 public:
  struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
  };

  Digraph() = default;

  std::size_t add_vertex(std::string label) {
    vertex_labels_.push_back(std::move(label));
    return vertex_labels_.size() - 1;
  }

  void add_edge(std::string id, std::size_t tail, std::size_t head) {
    if (tail >= vertex_labels_.size() || head >= vertex_labels_.size())
      throw IndexOutOfRange("edge endpoint out of range");
    for (const auto& e : edges_)
      if (e.id == id) throw MalformedInput("duplicate edge id: " + id);
    edges_.push_back(Edge{std::move(id), tail, head});
  }

  std::size_t vertex_count() const { return vertex_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int in_degree(std::size_t v) const {
    int d = 0;
    for (const auto& e : edges_)
      if (e.head == v) ++d;
    return d;
  }

  int out_degree(std::size_t v) const {
    int d = 0;
    for (const auto& e : edges_)
      if (e.tail == v) ++d;
    return d;
  }

  std::size_t weak_component_count() const {
    detail::UnionFind uf(vertex_labels_.size());
    for (const auto& e : edges_) uf.unite(e.tail, e.head);
    return uf.components();
  }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Edge> edges_;
};

/// One vertex per label, one edge i->j per l_ij = 1 (a loop when i = j).
inline Digraph digraph_from_vertex_matrix(const BinaryMatrix& m) {
  Digraph g;
  const auto n = m.order();
  for (const auto& l : m.labels()) g.add_vertex(l);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j)) g.add_edge("e" + std::to_string(++k), i, j);
  return g;
}

/// Definitional edge-adjacency oracle: r_ij = 1 iff edge q_i ends where
/// edge q_j begins. Edge ids become the labels of the result.
inline BinaryMatrix edge_adjacency_of(const Digraph& h) {
  const auto& edges = h.edges();
  const auto n = edges.size();
  if (n == 0) throw MalformedInput("edge adjacency undefined for edgeless graph");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : edges) labels.push_back(e.id);
  std::vector<std::uint8_t> cells(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edges[i].head == edges[j].tail) cells[i * n + j] = 1;
  return BinaryMatrix(std::move(labels), std::move(cells));
}

/// DOT export with deterministic node and edge ordering.
inline std::string render_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph H {\n";
  for (const auto& v : g.vertex_labels()) out << "  " << v << ";\n";
  for (const auto& e : g.edges())
    out << "  " << g.vertex_labels()[e.tail] << " -> " << g.vertex_labels()[e.head]
        << " [label=\"" << e.id << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace dgdual
