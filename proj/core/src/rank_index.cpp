#include "evslice/rank_index.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace evslice {

RankIndex RankIndex::build(const TauTable& table) {
  RankIndex index;
  index.space_ = table.space;
  index.elements_ = static_cast<std::int64_t>(table.size());
  std::vector<WeightedPoint> points;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const std::int64_t t = table.tau[k];
    const auto x = static_cast<Coord>(k) + 1;
    if (t < -1 || t > x) {
      throw std::invalid_argument("independence time " + std::to_string(t) + " out of range for element " +
                                  std::to_string(k));
    }
    if (t >= 1) points.push_back({x, t, 1});
  }
  index.index_ = DominanceIndex::build(points, index.elements_ + 1);
  return index;
}

std::int64_t RankIndex::count_late(std::int64_t i, std::int64_t j, std::size_t* visited) const {
  if (i < 0 || i > j || j >= elements_) {
    throw std::out_of_range("element window [" + std::to_string(i) + "," + std::to_string(j) +
                            "] outside [0," + std::to_string(elements_) + ")");
  }
  return index_.query_toward_diagonal(j + 2, i, visited);
}

std::int64_t RankIndex::rank(Slice edges, std::size_t* visited) const {
  const Slice w = element_window(space_, edges);
  return w.width() - count_late(w.i, w.j, visited);
}

void RankIndex::save(ByteWriter& out) const {
  out.u8(static_cast<std::uint8_t>(space_));
  out.i64(elements_);
  index_.save(out);
}

RankIndex RankIndex::load(ByteReader& in) {
  RankIndex index;
  const auto space = in.u8();
  if (space > 1) throw FormatError("unknown element space");
  index.space_ = static_cast<ElementSpace>(space);
  index.elements_ = in.i64();
  index.index_ = DominanceIndex::load(in);
  if (index.elements_ < 0 || index.index_.grid_size() != index.elements_ + 1) {
    throw FormatError("rank index size mismatch");
  }
  return index;
}

}  // namespace evslice
