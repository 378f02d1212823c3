#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "evslice/graph.hpp"

namespace evslice {

// Link-cut forest over a fixed vertex set whose edges are weighted by their
// edge index. Each edge is a node of its own, so path aggregates see edge
// weights directly. All operations are O(log n) amortized.
class DynamicForest {
 public:
  DynamicForest(std::size_t vertex_count, std::size_t edge_capacity);

  // Adds edge `e` between two vertices of different trees.
  void link(VertexId u, VertexId v, EdgeIndex e);
  // Removes a previously linked edge.
  void cut(EdgeIndex e);

  bool has_edge(EdgeIndex e) const;
  bool connected(VertexId u, VertexId v);
  // Current root of u's tree. Stable until the next link, cut or path query
  // touching that tree.
  VertexId find_root(VertexId u);
  // Lightest edge on the tree path between u and v; none when the vertices
  // are in different trees or equal.
  std::optional<EdgeIndex> path_lightest(VertexId u, VertexId v);

  std::size_t vertex_count() const { return vertices_; }

 private:
  using Node = std::uint32_t;
  static constexpr Node kNil = 0xffffffffu;

  bool is_splay_root(Node x) const;
  void push(Node x);
  void pull(Node x);
  void rotate(Node x);
  void splay(Node x);
  void access(Node x);
  void make_root(Node x);
  Node root_of(Node x);
  void attach(Node x, Node y);
  void detach(Node x, Node y);
  void check_vertex(VertexId v) const;
  void check_edge(EdgeIndex e) const;

  std::size_t vertices_;
  std::vector<Node> left_, right_, parent_;
  std::vector<std::uint8_t> flip_;
  std::vector<std::int64_t> value_, min_;
  std::vector<VertexId> edge_u_, edge_v_;
  std::vector<std::uint8_t> linked_;
  std::vector<Node> stack_;
};

}  // namespace evslice
