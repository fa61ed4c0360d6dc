#include "treedelta/splits.hpp"

#include <stdexcept>

namespace treedelta {

SplitTable::SplitTable(const Tree& tree, std::vector<Count> side_first,
                       std::vector<Count> side_second)
    : n_(tree.size()),
      side_first_(std::move(side_first)),
      side_second_(std::move(side_second)),
      beyond_(2 * static_cast<std::size_t>(tree.edge_count())) {
  for (VertexId v = 0; v < tree.size(); ++v) {
    for (std::int64_t arc = tree.first_arc(v); arc < tree.first_arc(v + 1);
         ++arc) {
      const EdgeId e = tree.arc_edge(arc);
      // arc v -> w: count on w's side.
      beyond_[arc] = tree.edge(e).first == v ? side_second_[e] : side_first_[e];
    }
  }
}

SplitTable edge_splits(const Tree& tree, std::int64_t* ops) {
  const VertexId n = tree.size();
  const EdgeId m = tree.edge_count();
  std::vector<Count> side_first(m, 0);
  std::vector<Count> side_second(m, 0);
  std::vector<Count> weight(n, 1);
  std::vector<int> degree(n);
  std::vector<char> stripped(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) queue.push_back(v);
  }

  std::int64_t scanned = 0;
  EdgeId removed = 0;
  for (std::size_t head = 0; head < queue.size() && removed < m; ++head) {
    const VertexId v = queue[head];
    if (degree[v] != 1) continue;
    // v's unique neighbor that has not been stripped yet.
    std::int64_t arc = tree.first_arc(v);
    for (; stripped[tree.arc_target(arc)]; ++arc) ++scanned;
    ++scanned;
    const VertexId u = tree.arc_target(arc);
    const EdgeId e = tree.arc_edge(arc);

    stripped[v] = 1;
    degree[v] = 0;
    if (tree.edge(e).first == v) {
      side_first[e] = weight[v];
      side_second[e] = n - weight[v];
    } else {
      side_first[e] = n - weight[v];
      side_second[e] = weight[v];
    }
    weight[u] += weight[v];
    ++removed;
    if (--degree[u] == 1) queue.push_back(u);
  }
  if (ops) *ops = scanned;
  return SplitTable(tree, std::move(side_first), std::move(side_second));
}

Count wiener_from_splits(const SplitTable& splits) {
  if (splits.n() > kMaxVertices) {
    throw GuardError("wiener_from_splits: n exceeds " +
                     std::to_string(kMaxVertices));
  }
  Count total = 0;
  for (EdgeId e = 0; e < splits.size(); ++e) {
    total += splits.side_first(e) * splits.side_second(e);
  }
  return total;
}

Count wiener_bfs(const Tree& tree) {
  Count total = 0;
  for (VertexId s = 0; s < tree.size(); ++s) {
    for (auto d : bfs_distances(tree, s)) total += d;
  }
  return total / 2;
}

Rational average_distance(Count wiener, Count n) {
  if (n < 2) {
    throw std::invalid_argument("average distance needs at least 2 vertices");
  }
  return Rational(wiener, choose2(n));
}

}  // namespace treedelta
