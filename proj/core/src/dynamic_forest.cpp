#include "evslice/dynamic_forest.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace evslice {
namespace {
constexpr std::int64_t kNoEdge = std::numeric_limits<std::int64_t>::max();
}

DynamicForest::DynamicForest(std::size_t vertex_count, std::size_t edge_capacity)
    : vertices_(vertex_count) {
  const std::size_t total = vertex_count + edge_capacity;
  if (total >= kNil) throw std::length_error("dynamic forest too large");
  left_.assign(total, kNil);
  right_.assign(total, kNil);
  parent_.assign(total, kNil);
  flip_.assign(total, 0);
  value_.assign(total, kNoEdge);
  for (std::size_t e = 0; e < edge_capacity; ++e) value_[vertex_count + e] = static_cast<std::int64_t>(e);
  min_ = value_;
  edge_u_.assign(edge_capacity, 0);
  edge_v_.assign(edge_capacity, 0);
  linked_.assign(edge_capacity, 0);
}

bool DynamicForest::is_splay_root(Node x) const {
  const Node p = parent_[x];
  return p == kNil || (left_[p] != x && right_[p] != x);
}

void DynamicForest::push(Node x) {
  if (!flip_[x]) return;
  std::swap(left_[x], right_[x]);
  if (left_[x] != kNil) flip_[left_[x]] ^= 1;
  if (right_[x] != kNil) flip_[right_[x]] ^= 1;
  flip_[x] = 0;
}

void DynamicForest::pull(Node x) {
  std::int64_t m = value_[x];
  if (left_[x] != kNil) m = std::min(m, min_[left_[x]]);
  if (right_[x] != kNil) m = std::min(m, min_[right_[x]]);
  min_[x] = m;
}

void DynamicForest::rotate(Node x) {
  const Node p = parent_[x];
  const Node g = parent_[p];
  const bool p_root = is_splay_root(p);
  if (left_[p] == x) {
    left_[p] = right_[x];
    if (right_[x] != kNil) parent_[right_[x]] = p;
    right_[x] = p;
  } else {
    right_[p] = left_[x];
    if (left_[x] != kNil) parent_[left_[x]] = p;
    left_[x] = p;
  }
  parent_[p] = x;
  parent_[x] = g;
  if (!p_root) {
    if (left_[g] == p) {
      left_[g] = x;
    } else {
      right_[g] = x;
    }
  }
  pull(p);
  pull(x);
}

void DynamicForest::splay(Node x) {
  stack_.clear();
  for (Node y = x;; y = parent_[y]) {
    stack_.push_back(y);
    if (is_splay_root(y)) break;
  }
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) push(*it);
  while (!is_splay_root(x)) {
    const Node p = parent_[x];
    if (!is_splay_root(p)) {
      const Node g = parent_[p];
      rotate((left_[g] == p) == (left_[p] == x) ? p : x);
    }
    rotate(x);
  }
}

void DynamicForest::access(Node x) {
  Node last = kNil;
  for (Node y = x; y != kNil; y = parent_[y]) {
    splay(y);
    right_[y] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void DynamicForest::make_root(Node x) {
  access(x);
  flip_[x] ^= 1;
}

DynamicForest::Node DynamicForest::root_of(Node x) {
  access(x);
  Node r = x;
  for (;;) {
    push(r);
    if (left_[r] == kNil) break;
    r = left_[r];
  }
  splay(r);
  return r;
}

void DynamicForest::attach(Node x, Node y) {
  make_root(x);
  parent_[x] = y;
}

void DynamicForest::detach(Node x, Node y) {
  make_root(x);
  access(y);
  // x is now the left child of y with nothing between them.
  left_[y] = kNil;
  parent_[x] = kNil;
  pull(y);
}

void DynamicForest::check_vertex(VertexId v) const {
  if (v >= vertices_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

void DynamicForest::check_edge(EdgeIndex e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= linked_.size()) {
    throw std::out_of_range("edge index " + std::to_string(e) + " beyond forest capacity");
  }
}

bool DynamicForest::has_edge(EdgeIndex e) const {
  check_edge(e);
  return linked_[static_cast<std::size_t>(e)] != 0;
}

void DynamicForest::link(VertexId u, VertexId v, EdgeIndex e) {
  check_vertex(u);
  check_vertex(v);
  check_edge(e);
  if (has_edge(e)) throw std::logic_error("edge already linked");
  if (connected(u, v)) throw std::logic_error("link would close a cycle");
  const auto k = static_cast<std::size_t>(e);
  const Node node = static_cast<Node>(vertices_ + k);
  edge_u_[k] = u;
  edge_v_[k] = v;
  linked_[k] = 1;
  attach(node, u);
  attach(v, node);
}

void DynamicForest::cut(EdgeIndex e) {
  if (!has_edge(e)) throw std::logic_error("edge is not in the forest");
  const auto k = static_cast<std::size_t>(e);
  const Node node = static_cast<Node>(vertices_ + k);
  detach(edge_u_[k], node);
  detach(node, edge_v_[k]);
  linked_[k] = 0;
}

bool DynamicForest::connected(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  return u == v || root_of(u) == root_of(v);
}

VertexId DynamicForest::find_root(VertexId u) {
  check_vertex(u);
  return static_cast<VertexId>(root_of(u));
}

std::optional<EdgeIndex> DynamicForest::path_lightest(VertexId u, VertexId v) {
  if (u == v) {
    check_vertex(u);
    return std::nullopt;
  }
  if (!connected(u, v)) return std::nullopt;
  make_root(u);
  access(v);
  const std::int64_t m = min_[v];
  if (m == kNoEdge) return std::nullopt;
  return m;
}

}  // namespace evslice
