#include "evslice/stabbing.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace evslice {

StabbingIndex::CornerSet StabbingIndex::make_corner_set(std::span<const WeightedPoint> corners, Coord grid) {
  std::vector<WeightedPoint> below, above;
  for (const auto& p : corners) {
    if (p.y <= p.x) {
      below.push_back(p);
    } else {
      above.push_back(WeightedPoint{p.y, p.x, p.weight});
    }
  }
  CornerSet set;
  set.below = DominanceIndex::build(below, grid);
  set.above = DominanceIndex::build(above, grid);
  return set;
}

Weight StabbingIndex::CornerSet::count_dominated(Coord qx, Coord qy, std::size_t* visited) const {
  std::size_t v1 = 0, v2 = 0;
  const Weight low = below.query_quadrant(Bound::kLessEqual, qx, Bound::kLessEqual, qy, &v1);
  // A reflected corner (Y, X) has x = X <= qx and y = Y <= qy.
  const Weight high = above.query_quadrant(Bound::kLessEqual, qy, Bound::kLessEqual, qx, &v2);
  if (visited != nullptr) *visited += v1 + v2;
  return low + high;
}

StabbingIndex StabbingIndex::build(std::span<const Rectangle> rectangles, Coord grid_size) {
  std::vector<WeightedPoint> ll, lr, ul, ur;
  for (auto set : {&ll, &lr, &ul, &ur}) set->reserve(rectangles.size());
  for (const auto& r : rectangles) {
    if (r.x_min > r.x_max || r.y_min > r.y_max) {
      throw std::invalid_argument("degenerate rectangle [" + std::to_string(r.x_min) + "," +
                                  std::to_string(r.x_max) + "]x[" + std::to_string(r.y_min) + "," +
                                  std::to_string(r.y_max) + "]");
    }
    if (r.x_min < 0 || r.y_min < 0 || r.x_max >= grid_size || r.y_max >= grid_size) {
      throw std::invalid_argument("rectangle corner outside the grid");
    }
    ll.push_back({r.x_min, r.y_min, r.weight});
    lr.push_back({r.x_max, r.y_min, r.weight});
    ul.push_back({r.x_min, r.y_max, r.weight});
    ur.push_back({r.x_max, r.y_max, r.weight});
  }
  StabbingIndex index;
  index.grid_ = grid_size;
  index.rectangles_ = rectangles.size();
  index.lower_left_ = make_corner_set(ll, grid_size);
  index.lower_right_ = make_corner_set(lr, grid_size);
  index.upper_left_ = make_corner_set(ul, grid_size);
  index.upper_right_ = make_corner_set(ur, grid_size);
  return index;
}

Weight StabbingIndex::stab(Coord qx, Coord qy, std::size_t* visited) const {
  if (rectangles_ == 0) {
    if (visited != nullptr) *visited = 0;
    return 0;
  }
  std::size_t touched = 0;
  const Weight total = lower_left_.count_dominated(qx, qy, &touched) -
                       lower_right_.count_dominated(qx - 1, qy, &touched) -
                       upper_left_.count_dominated(qx, qy - 1, &touched) +
                       upper_right_.count_dominated(qx - 1, qy - 1, &touched);
  if (visited != nullptr) *visited = touched;
  return total;
}

std::size_t StabbingIndex::node_count() const {
  std::size_t total = 0;
  for (const auto* set : {&lower_left_, &lower_right_, &upper_left_, &upper_right_}) {
    total += set->below.node_count() + set->above.node_count();
  }
  return total;
}

void StabbingIndex::save(ByteWriter& out) const {
  out.i64(grid_);
  out.u64(rectangles_);
  for (const auto* set : {&lower_left_, &lower_right_, &upper_left_, &upper_right_}) {
    set->below.save(out);
    set->above.save(out);
  }
}

StabbingIndex StabbingIndex::load(ByteReader& in) {
  StabbingIndex index;
  index.grid_ = in.i64();
  index.rectangles_ = static_cast<std::size_t>(in.u64());
  for (auto* set : {&index.lower_left_, &index.lower_right_, &index.upper_left_, &index.upper_right_}) {
    set->below = DominanceIndex::load(in);
    set->above = DominanceIndex::load(in);
  }
  return index;
}

}  // namespace evslice
