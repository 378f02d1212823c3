#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evslice/binary_io.hpp"

namespace evslice {

using Coord = std::int64_t;
using Weight = std::int64_t;

struct WeightedPoint {
  Coord x = 0;
  Coord y = 0;
  Weight weight = 1;
};

// Interior node of a query tree. Leaves are implicit: a child handle equal to
// kLeafHandle denotes a single leaf.
struct TreeNode {
  Weight weight = 0;  // sum of the leaf weights in the right subtree
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

inline constexpr std::uint32_t kLeafHandle = 0xffffffffu;

enum class Bound { kLess, kLessEqual, kGreater, kGreaterEqual };

// Dominance sums over weighted points on or below the main diagonal
// (0 <= y <= x < grid). For every column x the index keeps a tree T_x with
// exactly x leaves, leaf p holding the weight of row p restricted to columns
// < x. T_x is shaped by the zeroless binary numeral of x: a leftward spine
// whose level-i right child is a complete tree of b_i * 2^i leaves, so the
// leaf at distance d from the right end sits at depth O(log d). Consecutive
// trees share every subtree they have in common (path-copying persistence).
//
// The right-subtree leaf count of a node is implied by the shape of T_x and
// is recomputed while descending instead of being stored.
class DominanceIndex {
 public:
  DominanceIndex() = default;

  // Throws std::invalid_argument for points outside 0 <= y <= x < grid_size.
  static DominanceIndex build(std::span<const WeightedPoint> points, Coord grid_size);

  // Sum of weights with x_i < qx and y_i > qy. Requires 0 <= qx <= grid and
  // qy >= -1; qy == -1 returns the column prefix W_qx. Visits at most
  // 2 * log2(qx - qy) + 2 nodes.
  Weight query_toward_diagonal(Coord qx, Coord qy, std::size_t* visited = nullptr) const;

  // Sum over any axis-aligned quadrant, e.g. (kLessEqual, X, kGreater, Y) is
  // the weight of {x_i <= X and y_i > Y}. Arguments outside the grid clamp.
  Weight query_quadrant(Bound x_bound, Coord x, Bound y_bound, Coord y,
                        std::size_t* visited = nullptr) const;

  // Sum of weights with x_i < x (clamped).
  Weight prefix_x(Coord x) const;
  // Sum of weights with y_i > y (clamped).
  Weight suffix_y(Coord y) const;

  Coord grid_size() const { return grid_; }
  std::size_t point_count() const { return point_count_; }
  Weight total_weight() const { return total_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool has_trees() const { return !roots_.empty(); }

  // Root of T_x, or kLeafHandle when T_x has no interior node.
  std::uint32_t root(Coord x) const { return roots_[static_cast<std::size_t>(x)]; }
  std::span<const TreeNode> nodes() const { return nodes_; }

  void save(ByteWriter& out) const;
  static DominanceIndex load(ByteReader& in);

 private:
  friend class DominanceBuilder;

  Coord grid_ = 0;
  std::size_t point_count_ = 0;
  Weight total_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<std::uint32_t> roots_;    // roots_[x] for x in [0, grid]
  std::vector<Weight> column_prefix_;   // W_x = sum of weights with x_i < x
  std::vector<Weight> row_suffix_;      // [y + 1] -> sum of weights with y_i > y
};

// Incremental construction T_0, T_1, ..., T_grid. Exposed so that callers can
// observe intermediate trees (the persistence tests snapshot T_x before T_x+1
// is built).
class DominanceBuilder {
 public:
  explicit DominanceBuilder(Coord grid_size);

  // Builds T_{x+1} from T_x, where x == columns_built(), adding the points of
  // column x. Every point must have x_i == x and 0 <= y_i <= x.
  void add_column(std::span<const WeightedPoint> column);

  Coord columns_built() const { return static_cast<Coord>(roots_.size()) - 1; }
  std::uint32_t root(Coord x) const { return roots_[static_cast<std::size_t>(x)]; }
  std::span<const TreeNode> nodes() const { return nodes_; }

  // Adds the remaining (empty) columns and returns the finished index.
  DominanceIndex finish() &&;

 private:
  friend class DominanceIndex;

  struct Block {
    std::uint32_t handle = kLeafHandle;
    Weight weight = 0;  // total leaf weight of the complete subtree
    std::uint64_t leaves = 1;
  };

  void grow();
  void add_to_leaf(std::uint64_t position, Weight delta);
  void rebuild_spine();
  std::uint32_t writable(std::uint32_t handle);
  std::uint32_t make_node(Weight weight, std::uint32_t left, std::uint32_t right);

  Coord grid_;
  std::vector<TreeNode> nodes_;
  std::vector<std::uint32_t> roots_;
  std::vector<Weight> column_prefix_;
  std::vector<Weight> row_weight_;
  std::size_t point_count_ = 0;

  // Current tree: blocks_[i] is the complete subtree of digit i (block 0 is
  // rightmost), spine_[i] the spine node at depth i.
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> spine_;
  std::uint64_t leaf_count_ = 0;
  std::ptrdiff_t dirty_ = -1;       // highest block index changed in this step
  std::uint32_t fresh_begin_ = 0;   // nodes at or above this handle belong to the tree being built
};

}  // namespace evslice
