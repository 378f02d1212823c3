#pragma once

#include <cstddef>
#include <span>

#include "evslice/binary_io.hpp"
#include "evslice/dominance.hpp"

namespace evslice {

// Closed rectangle [x_min, x_max] x [y_min, y_max].
struct Rectangle {
  Coord x_min = 0;
  Coord x_max = 0;
  Coord y_min = 0;
  Coord y_max = 0;
  Weight weight = 1;
};

// Counts the rectangles containing a query point by four-corner
// inclusion-exclusion:
//   stab(q) = N(ll <= q) - N(lr <  q.x, ll.y <= q.y) - N(ul.x <= q.x, ul.y < q.y) + N(ur < q)
// Every corner set is split along the diagonal; corners above it are stored
// reflected so that each half fits a DominanceIndex.
class StabbingIndex {
 public:
  StabbingIndex() = default;

  // Coordinates must lie in [0, grid). Throws std::invalid_argument for
  // empty or out-of-grid rectangles.
  static StabbingIndex build(std::span<const Rectangle> rectangles, Coord grid_size);

  // Total weight of the rectangles containing (qx, qy). Any point is valid.
  Weight stab(Coord qx, Coord qy, std::size_t* visited = nullptr) const;

  std::size_t rectangle_count() const { return rectangles_; }
  std::size_t node_count() const;

  void save(ByteWriter& out) const;
  static StabbingIndex load(ByteReader& in);

 private:
  struct CornerSet {
    DominanceIndex below;  // corners with y <= x, stored as (x, y)
    DominanceIndex above;  // corners with y > x, stored as (y, x)

    // Weight of corners with x <= qx and y <= qy.
    Weight count_dominated(Coord qx, Coord qy, std::size_t* visited) const;
  };

  static CornerSet make_corner_set(std::span<const WeightedPoint> corners, Coord grid);

  Coord grid_ = 0;
  std::size_t rectangles_ = 0;
  CornerSet lower_left_, lower_right_, upper_left_, upper_right_;
};

}  // namespace evslice
