#ifndef TREEDELTA_TREE_HPP_
#define TREEDELTA_TREE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treedelta/types.hpp"

namespace treedelta {

// Immutable labeled tree. Vertices are dense ids 0..n-1; adjacency is stored
// as CSR where every arc also records the id of its undirected edge.
class Tree {
 public:
  Tree() = default;
  // Validates that `edges` spans a tree over `labels.size()` vertices.
  Tree(std::vector<std::string> labels,
       std::vector<std::pair<VertexId, VertexId>> edges);

  VertexId size() const { return static_cast<VertexId>(labels_.size()); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  // Arcs of v are the indices [first_arc(v), first_arc(v+1)).
  std::int64_t first_arc(VertexId v) const { return offsets_[v]; }
  VertexId arc_target(std::int64_t arc) const { return targets_[arc]; }
  EdgeId arc_edge(std::int64_t arc) const { return arc_edges_[arc]; }

  int degree(VertexId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  const std::pair<VertexId, VertexId>& edge(EdgeId e) const {
    return edges_[e];
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  // Arc index of v -> w, or -1 when w is not adjacent to v. O(deg v).
  std::int64_t find_arc(VertexId v, VertexId w) const;
  bool adjacent(VertexId v, VertexId w) const { return find_arc(v, w) >= 0; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws InputError for an unknown label.
  VertexId id_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::int64_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<EdgeId> arc_edges_;
};

// Edge-list text: two whitespace-separated tokens per line, '#' comments and
// blank lines skipped. Ids are assigned in first-appearance order.
Tree parse_tree(std::istream& in);
Tree parse_tree_string(std::string_view text);
Tree read_tree_file(const std::string& path);

// Writes "# n=<count>" then one "a b" line per edge in stored order.
void write_tree(std::ostream& out, const Tree& tree);

// Unique path x = p0, ..., pd = y.
std::vector<VertexId> tree_path(const Tree& tree, VertexId x, VertexId y);

// BFS hop counts from `source`.
std::vector<std::int32_t> bfs_distances(const Tree& tree, VertexId source);

enum class TreeKind { kPath, kStar, kCaterpillar, kRandom };

TreeKind parse_tree_kind(std::string_view name);
std::string_view to_string(TreeKind kind);

// Deterministic for fixed arguments. Labels are "1".."n". The random kind is
// uniform over labeled trees (Pruefer decoding); caterpillars hang the
// non-spine half of the vertices off random spine vertices.
Tree generate(TreeKind kind, VertexId n, std::uint64_t seed);

}  // namespace treedelta

#endif  // TREEDELTA_TREE_HPP_
