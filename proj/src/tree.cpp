#include "treedelta/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treedelta {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(const std::vector<std::string>& labels, VertexId a,
                      VertexId b) {
  return "(" + labels[a] + ", " + labels[b] + ")";
}

}  // namespace

Tree::Tree(std::vector<std::string> labels,
           std::vector<std::pair<VertexId, VertexId>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const auto n = static_cast<VertexId>(labels_.size());
  if (n == 0) throw InputError("empty input: no vertices");
  if (n > kMaxVertices) {
    throw GuardError("tree has " + std::to_string(n) +
                     " vertices; the limit is " + std::to_string(kMaxVertices));
  }
  ids_.reserve(labels_.size());
  for (VertexId v = 0; v < n; ++v) {
    if (!ids_.emplace(labels_[v], v).second) {
      throw InputError("duplicate vertex label " + labels_[v]);
    }
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  DisjointSets components(n);
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (a == b) throw InputError("self-loop at vertex " + labels_[a]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw InputError("duplicate edge " + edge_text(labels_, a, b));
    }
    if (!components.unite(a, b)) {
      throw InputError("cycle detected at edge " + edge_text(labels_, a, b));
    }
  }
  if (static_cast<VertexId>(edges_.size()) != n - 1) {
    throw InputError("disconnected input: " + std::to_string(n) +
                     " vertices but " + std::to_string(edges_.size()) +
                     " edges");
  }

  offsets_.assign(n + 1, 0);
  for (auto [a, b] : edges_) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  arc_edges_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [a, b] = edges_[e];
    targets_[fill[a]] = b;
    arc_edges_[fill[a]++] = e;
    targets_[fill[b]] = a;
    arc_edges_[fill[b]++] = e;
  }
}

std::int64_t Tree::find_arc(VertexId v, VertexId w) const {
  for (std::int64_t arc = offsets_[v]; arc < offsets_[v + 1]; ++arc) {
    if (targets_[arc] == w) return arc;
  }
  return -1;
}

VertexId Tree::id_of(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) {
    throw InputError("unknown vertex " + std::string(label));
  }
  return it->second;
}

Tree parse_tree(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] =
        ids.emplace(token, static_cast<VertexId>(labels.size()));
    if (inserted) {
      if (static_cast<Count>(labels.size()) >= kMaxVertices) {
        throw GuardError("input has more than " +
                         std::to_string(kMaxVertices) + " vertices");
      }
      labels.push_back(token);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw InputError("malformed line " + std::to_string(line_no) +
                       ": expected two vertex tokens");
    }
    const VertexId ia = intern(a);
    const VertexId ib = intern(b);
    edges.emplace_back(ia, ib);
  }
  if (edges.empty()) throw InputError("empty input: no edges");
  return Tree(std::move(labels), std::move(edges));
}

Tree parse_tree_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_tree(in);
}

void write_tree(std::ostream& out, const Tree& tree) {
  out << "# n=" << tree.size() << '\n';
  for (auto [a, b] : tree.edges()) {
    out << tree.label(a) << ' ' << tree.label(b) << '\n';
  }
}

std::vector<std::int32_t> bfs_distances(const Tree& tree, VertexId source) {
  std::vector<std::int32_t> dist(tree.size(), -1);
  std::vector<VertexId> queue;
  queue.reserve(tree.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexId> tree_path(const Tree& tree, VertexId x, VertexId y) {
  const VertexId n = tree.size();
  if (x < 0 || y < 0 || x >= n || y >= n) {
    throw std::invalid_argument("tree_path: unknown vertex");
  }
  if (x == y) throw std::invalid_argument("tree_path: endpoints coincide");

  std::vector<VertexId> parent(n, -1);
  std::vector<VertexId> queue{y};
  parent[y] = y;
  for (std::size_t head = 0; head < queue.size() && parent[x] < 0; ++head) {
    const VertexId v = queue[head];
    for (VertexId w : tree.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> path{x};
  for (VertexId v = x; v != y;) {
    v = parent[v];
    path.push_back(v);
  }
  return path;
}

TreeKind parse_tree_kind(std::string_view name) {
  if (name == "path") return TreeKind::kPath;
  if (name == "star") return TreeKind::kStar;
  if (name == "caterpillar") return TreeKind::kCaterpillar;
  if (name == "random") return TreeKind::kRandom;
  throw std::invalid_argument("unknown tree kind " + std::string(name));
}

std::string_view to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kPath:
      return "path";
    case TreeKind::kStar:
      return "star";
    case TreeKind::kCaterpillar:
      return "caterpillar";
    case TreeKind::kRandom:
      return "random";
  }
  return "?";
}

namespace {

// Linear-time Pruefer decoding.
std::vector<std::pair<VertexId, VertexId>> decode_pruefer(
    const std::vector<VertexId>& code, VertexId n) {
  std::vector<VertexId> degree(n, 1);
  for (VertexId v : code) ++degree[v];
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);

  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (VertexId v : code) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

Tree generate(TreeKind kind, VertexId n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate: n must be at least 2");
  if (n > kMaxVertices) {
    throw GuardError("generate: n exceeds " + std::to_string(kMaxVertices));
  }
  std::vector<std::string> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  std::mt19937_64 rng(seed);
  switch (kind) {
    case TreeKind::kPath:
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case TreeKind::kStar:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case TreeKind::kCaterpillar: {
      const VertexId spine = std::max<VertexId>(2, (n + 1) / 2);
      for (VertexId v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
      std::uniform_int_distribution<VertexId> pick(0, spine - 1);
      for (VertexId v = spine; v < n; ++v) edges.emplace_back(pick(rng), v);
      break;
    }
    case TreeKind::kRandom: {
      if (n == 2) {
        edges.emplace_back(0, 1);
        break;
      }
      std::uniform_int_distribution<VertexId> pick(0, n - 1);
      std::vector<VertexId> code(n - 2);
      for (auto& c : code) c = pick(rng);
      edges = decode_pruefer(code, n);
      break;
    }
  }
  return Tree(std::move(labels), std::move(edges));
}

}  // namespace treedelta
