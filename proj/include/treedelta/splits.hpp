#ifndef TREEDELTA_SPLITS_HPP_
#define TREEDELTA_SPLITS_HPP_

#include <cstdint>
#include <vector>

#include "treedelta/rational.hpp"
#include "treedelta/tree.hpp"
#include "treedelta/types.hpp"

namespace treedelta {

// Side counts of every tree edge: for edge (u, v), how many vertices are
// strictly closer to u and how many strictly closer to v.
class SplitTable {
 public:
  SplitTable() = default;
  SplitTable(const Tree& tree, std::vector<Count> side_first,
             std::vector<Count> side_second);

  Count n() const { return n_; }
  EdgeId size() const { return static_cast<EdgeId>(side_first_.size()); }

  // Vertices closer to tree.edge(e).first / .second.
  Count side_first(EdgeId e) const { return side_first_[e]; }
  Count side_second(EdgeId e) const { return side_second_[e]; }

  // For the arc a -> b: vertices strictly closer to b than to a.
  Count beyond(std::int64_t arc) const { return beyond_[arc]; }

 private:
  Count n_ = 0;
  std::vector<Count> side_first_;
  std::vector<Count> side_second_;
  std::vector<Count> beyond_;
};

// Leaf stripping with a degree-decrement queue; linear in n. When `ops` is
// non-null it receives the number of adjacency slots inspected.
SplitTable edge_splits(const Tree& tree, std::int64_t* ops = nullptr);

// Sum over edges of side_first * side_second.
Count wiener_from_splits(const SplitTable& splits);

// All-pairs BFS. Quadratic; for checking and small inputs.
Count wiener_bfs(const Tree& tree);

// D / C(n,2). Throws std::invalid_argument when n < 2.
Rational average_distance(Count wiener, Count n);

}  // namespace treedelta

#endif  // TREEDELTA_SPLITS_HPP_
