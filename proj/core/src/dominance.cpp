#include "evslice/dominance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace evslice {
namespace {

Coord saturating_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) return b > 0 ? std::numeric_limits<Coord>::max() : std::numeric_limits<Coord>::min();
  return out;
}

}  // namespace

DominanceBuilder::DominanceBuilder(Coord grid_size) : grid_(grid_size) {
  if (grid_size < 0) throw std::invalid_argument("grid size must be non-negative");
  roots_.push_back(kLeafHandle);
  column_prefix_.push_back(0);
  row_weight_.assign(static_cast<std::size_t>(grid_size), 0);
}

std::uint32_t DominanceBuilder::make_node(Weight weight, std::uint32_t left, std::uint32_t right) {
  if (nodes_.size() >= kLeafHandle) throw std::length_error("dominance index node arena exhausted");
  nodes_.push_back(TreeNode{weight, left, right});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t DominanceBuilder::writable(std::uint32_t handle) {
  if (handle >= fresh_begin_) return handle;
  const TreeNode copy = nodes_[handle];
  return make_node(copy.weight, copy.left, copy.right);
}

// T_x -> T_{x+1}: the new rightmost leaf is the increment of the zeroless
// numeral. With t trailing 2-digits, blocks t and t-1 merge into the new
// block t, blocks below shift up one level, and the new leaf becomes block 0.
void DominanceBuilder::grow() {
  std::size_t t = 0;
  while (t < blocks_.size() && blocks_[t].leaves == (std::uint64_t{2} << t)) ++t;

  auto merge = [this](const Block& left, const Block& right) {
    return Block{make_node(right.weight, left.handle, right.handle), left.weight + right.weight,
                 left.leaves + right.leaves};
  };
  const Block leaf{};
  if (t == blocks_.size()) {
    const Block top = t == 0 ? leaf : blocks_[t - 1];
    blocks_.push_back(top);
  } else if (t == 0) {
    blocks_[0] = merge(blocks_[0], leaf);
  } else {
    blocks_[t] = merge(blocks_[t], blocks_[t - 1]);
  }
  for (std::size_t i = t; i-- > 1;) blocks_[i] = blocks_[i - 1];
  if (t >= 1) blocks_[0] = leaf;

  dirty_ = std::max<std::ptrdiff_t>(dirty_, static_cast<std::ptrdiff_t>(t));
  ++leaf_count_;
}

void DominanceBuilder::add_to_leaf(std::uint64_t position, Weight delta) {
  std::uint64_t d = leaf_count_ - 1 - position;
  std::size_t j = 0;
  while (d >= blocks_[j].leaves) d -= blocks_[j++].leaves;
  blocks_[j].weight += delta;
  dirty_ = std::max<std::ptrdiff_t>(dirty_, static_cast<std::ptrdiff_t>(j));

  // Inside a complete block the descent follows the bits of d from the top;
  // a 0 bit steps right. Nodes below the last right step keep their weight,
  // so only the path down to it is copied.
  const int depth = std::countr_zero(blocks_[j].leaves);
  const int settled = std::countr_one(d);
  if (settled >= depth) return;
  const int copies = depth - settled;

  std::uint32_t h = writable(blocks_[j].handle);
  blocks_[j].handle = h;
  std::uint64_t half = blocks_[j].leaves;
  for (int level = 0; level < copies; ++level) {
    half >>= 1;
    const bool right = d < half;
    if (right) {
      nodes_[h].weight += delta;
    } else {
      d -= half;
    }
    if (level + 1 == copies) break;
    const std::uint32_t child = writable(right ? nodes_[h].right : nodes_[h].left);
    (right ? nodes_[h].right : nodes_[h].left) = child;
    h = child;
  }
}

void DominanceBuilder::rebuild_spine() {
  const std::size_t k = blocks_.size() - 1;
  spine_.resize(k);
  if (k > 0 && dirty_ >= 0) {
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(dirty_), k - 1);
    for (std::size_t i = top + 1; i-- > 0;) {
      const std::uint32_t left = i == k - 1 ? blocks_[k].handle : spine_[i + 1];
      spine_[i] = make_node(blocks_[i].weight, left, blocks_[i].handle);
    }
  }
  dirty_ = -1;
}

void DominanceBuilder::add_column(std::span<const WeightedPoint> column) {
  const Coord x = columns_built();
  if (x >= grid_) throw std::logic_error("all columns of the grid are already built");
  fresh_begin_ = static_cast<std::uint32_t>(nodes_.size());
  grow();

  Weight column_sum = 0;
  for (const auto& p : column) {
    if (p.x != x || p.y < 0 || p.y > x) {
      throw std::invalid_argument("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                  ") does not belong to column " + std::to_string(x));
    }
    row_weight_[static_cast<std::size_t>(p.y)] += p.weight;
    column_sum += p.weight;
    ++point_count_;
    // Leaf 0 is the leftmost leaf of every tree and never lies in a right
    // subtree, so its weight only shows up in the column prefix.
    if (p.y > 0 && p.weight != 0) add_to_leaf(static_cast<std::uint64_t>(p.y), p.weight);
  }
  rebuild_spine();
  roots_.push_back(spine_.empty() ? blocks_[0].handle : spine_[0]);
  column_prefix_.push_back(column_prefix_.back() + column_sum);
}

DominanceIndex DominanceBuilder::finish() && {
  while (columns_built() < grid_) add_column({});
  DominanceIndex index;
  index.grid_ = grid_;
  index.point_count_ = point_count_;
  index.total_ = column_prefix_.back();
  if (nodes_.capacity() > nodes_.size() + nodes_.size() / 8) nodes_.shrink_to_fit();
  index.nodes_ = std::move(nodes_);
  index.roots_ = std::move(roots_);
  index.column_prefix_ = std::move(column_prefix_);
  index.row_suffix_.assign(static_cast<std::size_t>(grid_) + 1, 0);
  for (Coord y = grid_ - 2; y >= -1; --y) {
    index.row_suffix_[static_cast<std::size_t>(y + 1)] =
        index.row_suffix_[static_cast<std::size_t>(y + 2)] + row_weight_[static_cast<std::size_t>(y + 1)];
  }
  return index;
}

DominanceIndex DominanceIndex::build(std::span<const WeightedPoint> points, Coord grid_size) {
  if (grid_size < 0) throw std::invalid_argument("grid size must be non-negative");
  for (const auto& p : points) {
    if (p.y < 0 || p.y > p.x || p.x >= grid_size) {
      throw std::invalid_argument("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                  ") is not on or below the diagonal of a grid of size " +
                                  std::to_string(grid_size));
    }
  }
  if (points.empty()) {
    DominanceIndex index;
    index.grid_ = grid_size;
    return index;
  }

  // Bucket the points by column.
  const auto grid = static_cast<std::size_t>(grid_size);
  std::vector<std::size_t> start(grid + 1, 0);
  for (const auto& p : points) ++start[static_cast<std::size_t>(p.x) + 1];
  for (std::size_t x = 0; x < grid; ++x) start[x + 1] += start[x];
  std::vector<WeightedPoint> sorted(points.size());
  {
    std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
    for (const auto& p : points) sorted[cursor[static_cast<std::size_t>(p.x)]++] = p;
  }

  DominanceBuilder builder(grid_size);
  std::size_t estimate = 3 * grid;
  for (const auto& p : points) estimate += 2 * std::bit_width(static_cast<std::uint64_t>(p.x - p.y + 1)) + 2;
  builder.nodes_.reserve(estimate);
  for (std::size_t x = 0; x < grid; ++x) {
    builder.add_column(std::span<const WeightedPoint>(sorted).subspan(start[x], start[x + 1] - start[x]));
  }
  return std::move(builder).finish();
}

Weight DominanceIndex::query_toward_diagonal(Coord qx, Coord qy, std::size_t* visited) const {
  if (qx < 0 || qx > grid_) {
    throw std::out_of_range("query column " + std::to_string(qx) + " outside [0," + std::to_string(grid_) + "]");
  }
  if (qy < -1) throw std::out_of_range("query row must be at least -1");
  std::size_t touched = 0;
  Weight sum = 0;
  if (roots_.empty() || qx == 0 || qy >= qx - 1) {
    // no leaves to the right of qy
  } else if (qy == -1) {
    sum = column_prefix_[static_cast<std::size_t>(qx)];
  } else {
    auto d = static_cast<std::uint64_t>(qx - 1 - qy);  // distance of leaf qy from the right end
    auto rest = static_cast<std::uint64_t>(qx);        // digits of qx not yet consumed
    std::uint32_t node = roots_[static_cast<std::size_t>(qx)];
    std::uint64_t leaves = 0;
    for (int level = 0;; ++level) {
      const std::uint64_t digit = (rest & 1) ? 1 : 2;
      const std::uint64_t block = digit << level;
      rest = (rest - digit) >> 1;
      if (rest == 0) {  // top digit: node is already the root of the leftmost block
        leaves = block;
        break;
      }
      ++touched;
      if (node >= nodes_.size()) throw FormatError("malformed query tree");
      const TreeNode& spine = nodes_[node];
      if (d < block) {
        node = spine.right;
        leaves = block;
        break;
      }
      d -= block;
      sum += spine.weight;
      node = spine.left;
    }
    while (leaves > 1) {
      ++touched;
      if (node >= nodes_.size()) throw FormatError("malformed query tree");
      const TreeNode& n = nodes_[node];
      leaves >>= 1;
      if (d < leaves) {
        node = n.right;
      } else {
        d -= leaves;
        sum += n.weight;
        node = n.left;
      }
    }
  }
  if (visited != nullptr) *visited = touched;
  return sum;
}

Weight DominanceIndex::prefix_x(Coord x) const {
  if (column_prefix_.empty() || x <= 0) return 0;
  return column_prefix_[static_cast<std::size_t>(std::min(x, grid_))];
}

Weight DominanceIndex::suffix_y(Coord y) const {
  if (row_suffix_.empty()) return 0;
  if (y < -1) y = -1;
  if (y >= grid_) return 0;
  return row_suffix_[static_cast<std::size_t>(y + 1)];
}

Weight DominanceIndex::query_quadrant(Bound x_bound, Coord x, Bound y_bound, Coord y,
                                      std::size_t* visited) const {
  // Normalize to "x < xs" (left) or "x >= xs", and "y > ys" (up) or "y <= ys".
  const bool left = x_bound == Bound::kLess || x_bound == Bound::kLessEqual;
  const Coord xs = (x_bound == Bound::kLessEqual || x_bound == Bound::kGreater) ? saturating_add(x, 1) : x;
  const bool up = y_bound == Bound::kGreater || y_bound == Bound::kGreaterEqual;
  const Coord ys = (y_bound == Bound::kGreaterEqual || y_bound == Bound::kLess) ? saturating_add(y, -1) : y;

  const Coord qx = std::clamp<Coord>(xs, 0, grid_);
  const Coord qy = std::max<Coord>(ys, -1);
  const Weight q = qy >= grid_ ? 0 : query_toward_diagonal(qx, qy, visited);
  if (qy >= grid_ && visited != nullptr) *visited = 0;
  if (left && up) return q;
  if (left) return prefix_x(qx) - q;
  if (up) return suffix_y(qy) - q;
  return total_ - prefix_x(qx) - suffix_y(qy) + q;
}

void DominanceIndex::save(ByteWriter& out) const {
  out.i64(grid_);
  out.u64(point_count_);
  out.i64(total_);
  out.u64(nodes_.size());
  for (const auto& n : nodes_) {
    out.i64(n.weight);
    out.u32(n.left);
    out.u32(n.right);
  }
  out.u32_array(roots_);
  out.i64_array(column_prefix_);
  out.i64_array(row_suffix_);
}

DominanceIndex DominanceIndex::load(ByteReader& in) {
  DominanceIndex index;
  index.grid_ = in.i64();
  index.point_count_ = static_cast<std::size_t>(in.u64());
  index.total_ = in.i64();
  const std::uint64_t node_count = in.u64();
  if (index.grid_ < 0 || node_count > in.remaining() / 16) throw FormatError("corrupt dominance index header");
  index.nodes_.resize(static_cast<std::size_t>(node_count));
  for (auto& n : index.nodes_) {
    n.weight = in.i64();
    n.left = in.u32();
    n.right = in.u32();
  }
  index.roots_ = in.u32_array();
  index.column_prefix_ = in.i64_array();
  index.row_suffix_ = in.i64_array();

  const auto grid = static_cast<std::size_t>(index.grid_);
  const bool has_trees = !index.roots_.empty();
  if (has_trees && (index.roots_.size() != grid + 1 || index.column_prefix_.size() != grid + 1 ||
                    index.row_suffix_.size() != grid + 1)) {
    throw FormatError("dominance index arrays do not match the grid size");
  }
  if (!has_trees && (!index.column_prefix_.empty() || !index.row_suffix_.empty() || node_count != 0)) {
    throw FormatError("empty dominance index carries data");
  }
  auto valid = [&](std::uint32_t h) { return h == kLeafHandle || h < index.nodes_.size(); };
  for (const auto& n : index.nodes_) {
    if (!valid(n.left) || !valid(n.right)) throw FormatError("dominance index node handle out of range");
  }
  for (auto r : index.roots_) {
    if (!valid(r)) throw FormatError("dominance index root handle out of range");
  }
  return index;
}

}  // namespace evslice
