#include "treedelta/delta.hpp"

#include <algorithm>
#include <cmath>

namespace treedelta {

namespace {

void require_inset(const Tree& tree, VertexId x, VertexId y) {
  const VertexId n = tree.size();
  if (x < 0 || y < 0 || x >= n || y >= n) {
    throw std::invalid_argument("unknown vertex");
  }
  if (x == y) throw std::invalid_argument("inset edge endpoints coincide");
  if (tree.adjacent(x, y)) {
    throw std::invalid_argument("(" + tree.label(x) + ", " + tree.label(y) +
                                ") is a tree edge, not an inset edge");
  }
}

// Vertices strictly closer to `far` than to `near`, for adjacent near/far.
Count beyond(const Tree& tree, const SplitTable& splits, VertexId near,
             VertexId far) {
  return splits.beyond(tree.find_arc(near, far));
}

// Size of the path vertex c's trailing tree: n minus the branches through its
// path neighbors.
Count trailing_weight(const Tree& tree, const SplitTable& splits,
                      const std::vector<VertexId>& path, std::size_t at) {
  Count w = tree.size();
  if (at > 0) w -= beyond(tree, splits, path[at], path[at - 1]);
  if (at + 1 < path.size()) w -= beyond(tree, splits, path[at], path[at + 1]);
  return w;
}

}  // namespace

CyclePartition cycle_partition(const Tree& tree, VertexId x, VertexId y) {
  require_inset(tree, x, y);
  const auto path = tree_path(tree, x, y);
  CyclePartition part;
  part.x = x;
  part.y = y;
  part.k = static_cast<int>(path.size());
  const int kp = part.half();
  part.cx.assign(path.begin(), path.begin() + kp);
  part.cy.assign(path.rbegin(), path.rbegin() + kp);
  if (part.k % 2 == 1) part.middle = path[kp];
  return part;
}

CountWeights weight_vectors(const Tree& tree, const SplitTable& splits,
                            const CyclePartition& part) {
  const int kp = part.half();
  // Path order x ... y rebuilt from the partition.
  std::vector<VertexId> path(part.cx.begin(), part.cx.end());
  if (part.middle) path.push_back(*part.middle);
  path.insert(path.end(), part.cy.rbegin(), part.cy.rend());

  CountWeights w;
  w.k = part.k;
  w.vx.resize(kp);
  w.vy.resize(kp);
  for (int i = 0; i < kp; ++i) {
    w.vx(i) = trailing_weight(tree, splits, path, i);
    w.vy(i) = trailing_weight(tree, splits, path, path.size() - 1 - i);
  }
  return w;
}

Count middle_weight(const Tree& tree, const SplitTable& splits,
                    const CyclePartition& part) {
  if (!part.middle) return 0;
  const VertexId m = *part.middle;
  // Middle sits between cx.back() and cy.back().
  return tree.size() - beyond(tree, splits, m, part.cx.back()) -
         beyond(tree, splits, m, part.cy.back());
}

Count dprime_lemma1(const Tree& tree, VertexId x, VertexId y) {
  require_inset(tree, x, y);
  const auto path = tree_path(tree, x, y);
  const int k = static_cast<int>(path.size());
  const int kp = k / 2;

  // Component of each path vertex once the path edges are gone.
  const VertexId n = tree.size();
  std::vector<VertexId> owner(n, -1);
  for (VertexId c : path) owner[c] = c;
  std::vector<Count> size(n, 0);
  std::vector<VertexId> stack;
  for (VertexId c : path) {
    stack.assign(1, c);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size[c];
      for (VertexId w : tree.neighbors(v)) {
        if (owner[w] < 0) {
          owner[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  Count total = 0;
  for (int i = 0; i < kp; ++i) {
    for (int j = 0; j < kp; ++j) {
      // path[i] and path[k-1-j]
      const int dist = (k - 1 - j) - i;
      if (2 * dist > k) {
        total += static_cast<Count>(2 * dist - k) * size[path[i]] *
                 size[path[k - 1 - j]];
      }
    }
  }
  return total;
}

ShortcutOracle::ShortcutOracle(const Tree& tree)
    : tree_(&tree), n_(tree.size()) {
  dist_.resize(static_cast<std::size_t>(n_) * n_);
  for (VertexId s = 0; s < n_; ++s) {
    const auto row = bfs_distances(tree, s);
    std::copy(row.begin(), row.end(), dist_.begin() + std::size_t(s) * n_);
  }
}

Count ShortcutOracle::dprime(VertexId x, VertexId y) const {
  require_inset(*tree_, x, y);
  const std::int32_t* dx = dist_.data() + std::size_t(x) * n_;
  const std::int32_t* dy = dist_.data() + std::size_t(y) * n_;
  Count total = 0;
  for (VertexId a = 0; a < n_; ++a) {
    const std::int32_t* da = dist_.data() + std::size_t(a) * n_;
    const std::int32_t ax = da[x] + 1;
    const std::int32_t ay = da[y] + 1;
    std::int64_t row = 0;
    for (VertexId b = a + 1; b < n_; ++b) {
      const std::int32_t via = std::min(ax + dy[b], ay + dx[b]);
      row += std::max(da[b] - via, 0);
    }
    total += row;
  }
  return total;
}

Count dprime_shortcut_oracle(const Tree& tree, VertexId x, VertexId y) {
  return ShortcutOracle(tree).dprime(x, y);
}

Rational adprime(Count dprime, Count n) {
  if (n < 3) throw std::invalid_argument("inset edges need at least 3 vertices");
  return Rational(dprime, choose2(n));
}

Count evaluate_dprime(DeltaMethod method, const Tree& tree,
                      const SplitTable& splits, VertexId x, VertexId y) {
  switch (method) {
    case DeltaMethod::kLemma2:
      return dprime_lemma2(
          weight_vectors(tree, splits, cycle_partition(tree, x, y)));
    case DeltaMethod::kLemma1:
      return dprime_lemma1(tree, x, y);
    case DeltaMethod::kShortcut:
      return dprime_shortcut_oracle(tree, x, y);
  }
  throw std::invalid_argument("unknown delta method");
}

double cubic_dprime_bound(Count n) {
  const auto x = static_cast<double>(n);
  return x * x * x / 16.0 - x * x / 32.0 - 9.0 * x / 8.0 + 2.0;
}

}  // namespace treedelta
