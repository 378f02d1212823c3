#pragma once

#include <cstddef>
#include <cstdint>

#include "evslice/binary_io.hpp"
#include "evslice/dominance.hpp"
#include "evslice/graph.hpp"
#include "evslice/tau.hpp"

namespace evslice {

// Answers #{k in [i, j] : tau[k] > i} for element windows with one
// toward-diagonal dominance query. Element k becomes the point
// (k + 1, tau[k]); only tau >= 1 is stored since i >= 0 never counts the
// rest. tau[k] > i already forces k >= i, so the query is Q(j + 2, i).
class RankIndex {
 public:
  RankIndex() = default;

  static RankIndex build(const TauTable& table);

  ElementSpace space() const { return space_; }
  std::int64_t element_count() const { return elements_; }

  // Elements of the element window [i, j] that are dependent on the earlier
  // part of the window.
  std::int64_t count_late(std::int64_t i, std::int64_t j, std::size_t* visited = nullptr) const;

  // Matroid rank of the elements of an edge slice.
  std::int64_t rank(Slice edges, std::size_t* visited = nullptr) const;

  std::size_t node_count() const { return index_.node_count(); }

  void save(ByteWriter& out) const;
  static RankIndex load(ByteReader& in);

 private:
  ElementSpace space_ = ElementSpace::kEdge;
  std::int64_t elements_ = 0;
  DominanceIndex index_;
};

}  // namespace evslice
