#include "treedelta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace treedelta {

namespace {

// Flat charges for the constant-size work in frame construction.
constexpr std::int64_t kVertexFrameOps = 4;
constexpr std::int64_t kEdgeFrameOps = 12;
constexpr std::int64_t kExtendScalarOps = 24;

InsetRecord record_of(const SweepFrame& frame) {
  return {std::min(frame.x, frame.y), std::max(frame.x, frame.y), frame.k,
          frame.dprime};
}

void charge(OpCounter* ops, std::int64_t amount) {
  if (ops) ops->charge(amount);
}

}  // namespace

Middle Middle::edge(VertexId a, VertexId b) {
  return {Kind::kEdge, std::min(a, b), std::max(a, b)};
}

Middle middle_of(const Tree& tree, VertexId x, VertexId y) {
  if (x == y || tree.adjacent(x, y)) {
    throw std::invalid_argument("middle_of: not an inset edge");
  }
  const auto path = tree_path(tree, x, y);
  const std::size_t d = path.size() - 1;
  if (d % 2 == 0) return Middle::vertex(path[d / 2]);
  return Middle::edge(path[d / 2], path[d / 2 + 1]);
}

std::vector<Middle> enumerate_middles(const Tree& tree) {
  std::vector<Middle> middles;
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) >= 2) middles.push_back(Middle::vertex(v));
  }
  std::vector<Middle> edges;
  for (auto [a, b] : tree.edges()) {
    if (tree.degree(a) >= 2 && tree.degree(b) >= 2) {
      edges.push_back(Middle::edge(a, b));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Middle& l, const Middle& r) {
    return std::pair(l.u, l.v) < std::pair(r.u, r.v);
  });
  middles.insert(middles.end(), edges.begin(), edges.end());
  return middles;
}

std::vector<SweepFrame> init_vertex_frames(const Tree& tree,
                                           const SplitTable& splits, VertexId v,
                                           OpCounter* ops) {
  if (tree.degree(v) < 2) {
    throw std::invalid_argument("vertex middle needs degree >= 2");
  }
  std::vector<SweepFrame> frames;
  const std::int64_t begin = tree.first_arc(v);
  const std::int64_t end = tree.first_arc(v + 1);
  for (std::int64_t i = begin; i < end; ++i) {
    for (std::int64_t j = i + 1; j < end; ++j) {
      SweepFrame f;
      f.k = 3;
      f.x = tree.arc_target(i);
      f.y = tree.arc_target(j);
      f.px = f.py = v;
      f.vx = CountVector::Constant(1, splits.beyond(i));
      f.vy = CountVector::Constant(1, splits.beyond(j));
      f.sum_x = f.vx(0);
      f.sum_y = f.vy(0);
      f.band = f.vx(0) * f.vy(0);
      f.dprime = f.band;
      charge(ops, kVertexFrameOps);
      frames.push_back(std::move(f));
    }
  }
  return frames;
}

std::vector<SweepFrame> init_edge_frames(const Tree& tree,
                                         const SplitTable& splits, VertexId u,
                                         VertexId v, OpCounter* ops) {
  const std::int64_t uv = tree.find_arc(u, v);
  if (uv < 0) throw std::invalid_argument("edge middle must be a tree edge");
  if (tree.degree(u) < 2 || tree.degree(v) < 2) {
    throw std::invalid_argument("edge middle needs both degrees >= 2");
  }
  const Count side_v = splits.beyond(uv);
  const Count side_u = tree.size() - side_v;

  std::vector<SweepFrame> frames;
  for (std::int64_t i = tree.first_arc(u); i < tree.first_arc(u + 1); ++i) {
    const VertexId a = tree.arc_target(i);
    if (a == v) continue;
    const Count wa = splits.beyond(i);
    for (std::int64_t j = tree.first_arc(v); j < tree.first_arc(v + 1); ++j) {
      const VertexId b = tree.arc_target(j);
      if (b == u) continue;
      const Count wb = splits.beyond(j);
      SweepFrame f;
      f.k = 4;
      f.x = a;
      f.y = b;
      f.px = u;
      f.py = v;
      f.vx.resize(2);
      f.vx << wa, side_u - wa;
      f.vy.resize(2);
      f.vy << wb, side_v - wb;
      f.sum_x = side_u;
      f.sum_y = side_v;
      f.band = f.vx(0) * f.vy(0) + f.vx(0) * f.vy(1) + f.vx(1) * f.vy(0);
      f.dprime = 2 * f.vx(0) * f.vy(0);
      charge(ops, kEdgeFrameOps);
      frames.push_back(std::move(f));
    }
  }
  return frames;
}

// With x~ = vx - wu e1 and y~ = vy - wv e1 (1-based below, kp = k/2):
//   D'(k+2)   = D' + 2 wu wv - 2 B(x~, y~) - [k odd] A(x~, y~)
//   band(k+2) = B(x~, y~) + wu (sum_y - wv) + wv (sum_x - wu) + wu wv
// where B sums x~_i y~_j over i + j <= kp and A over i + j = kp + 1. Both
// follow from the carried band and one anti-diagonal dot product.
SweepFrame extend_frame(const SweepFrame& frame, VertexId u, Count wu,
                        VertexId v, Count wv, OpCounter* ops) {
  const Eigen::Index kp = frame.vx.size();
  const Count anti = frame.vx.dot(frame.vy.reverse());
  charge(ops, 2 * kp);

  const Count x_last = frame.vx(kp - 1);
  const Count y_last = frame.vy(kp - 1);
  const Count inner_band = frame.band - anti -
                           wu * (frame.sum_y - y_last) -
                           wv * (frame.sum_x - x_last) +
                           (kp >= 2 ? wu * wv : 0);
  const Count inner_anti =
      anti - wu * y_last - wv * x_last + (kp == 1 ? wu * wv : 0);

  SweepFrame next;
  next.k = frame.k + 2;
  next.x = u;
  next.y = v;
  next.px = frame.x;
  next.py = frame.y;
  next.vx.resize(kp + 1);
  next.vx << wu, frame.vx;
  next.vx(1) -= wu;
  next.vy.resize(kp + 1);
  next.vy << wv, frame.vy;
  next.vy(1) -= wv;
  charge(ops, 2 * (kp + 1));
  next.sum_x = frame.sum_x;
  next.sum_y = frame.sum_y;
  next.dprime = frame.dprime + 2 * wu * wv - 2 * inner_band -
                (frame.k % 2 == 1 ? inner_anti : 0);
  next.band = inner_band + wu * (frame.sum_y - wv) + wv * (frame.sum_x - wu) +
              wu * wv;
  charge(ops, kExtendScalarOps);
  return next;
}

SweepFrame extend_frame(const Tree& tree, const SplitTable& splits,
                        const SweepFrame& frame, VertexId u, VertexId v,
                        OpCounter* ops) {
  const std::int64_t xu = tree.find_arc(frame.x, u);
  const std::int64_t yv = tree.find_arc(frame.y, v);
  if (xu < 0 || yv < 0) {
    throw std::invalid_argument("extension vertices must neighbor the ends");
  }
  if (u == frame.px || v == frame.py) {
    throw std::invalid_argument("extension vertex lies on the cycle path");
  }
  return extend_frame(frame, u, splits.beyond(xu), v, splits.beyond(yv), ops);
}

SweepStats sweep_middle(const Tree& tree, const SplitTable& splits,
                        const Middle& middle, const RecordSink& sink,
                        SweepOptions options) {
  OpCounter counter;
  counter.enabled = options.count_ops;

  std::vector<std::pair<SweepFrame, std::int64_t>> stack;
  auto push_initial = [&](std::vector<SweepFrame> frames) {
    // Initial frames share one charge; split it evenly for attribution.
    const std::int64_t each =
        frames.empty() ? 0
                       : counter.basic_ops / static_cast<std::int64_t>(frames.size());
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      stack.emplace_back(std::move(*it), each);
    }
  };
  if (middle.kind == Middle::Kind::kVertex) {
    push_initial(init_vertex_frames(tree, splits, middle.u, &counter));
  } else {
    push_initial(init_edge_frames(tree, splits, middle.u, middle.v, &counter));
  }

  SweepStats stats;
  while (!stack.empty()) {
    auto [frame, frame_ops] = std::move(stack.back());
    stack.pop_back();
    const InsetRecord record = record_of(frame);
    sink(Emission{record, middle, frame, frame_ops});
    ++stats.records;

    if (tree.degree(frame.x) < 2 || tree.degree(frame.y) < 2) continue;
    for (std::int64_t i = tree.first_arc(frame.x);
         i < tree.first_arc(frame.x + 1); ++i) {
      const VertexId u = tree.arc_target(i);
      if (u == frame.px) continue;
      for (std::int64_t j = tree.first_arc(frame.y);
           j < tree.first_arc(frame.y + 1); ++j) {
        const VertexId v = tree.arc_target(j);
        if (v == frame.py) continue;
        const std::int64_t before = counter.basic_ops;
        SweepFrame child = extend_frame(frame, u, splits.beyond(i), v,
                                        splits.beyond(j), &counter);
        stack.emplace_back(std::move(child), counter.basic_ops - before);
      }
    }
  }
  stats.basic_ops = counter.basic_ops;
  return stats;
}

SweepStats sweep_all(const Tree& tree, const SplitTable& splits,
                     const RecordSink& sink, SweepOptions options) {
  SweepStats total;
  for (const Middle& middle : enumerate_middles(tree)) {
    const SweepStats s = sweep_middle(tree, splits, middle, sink, options);
    total.records += s.records;
    total.basic_ops += s.basic_ops;
  }
  return total;
}

std::vector<InsetRecord> sweep_records(const Tree& tree,
                                       const SplitTable& splits,
                                       SweepStats* stats,
                                       SweepOptions options) {
  std::vector<InsetRecord> records;
  records.reserve(static_cast<std::size_t>(inset_edge_count(tree.size())));
  const SweepStats s = sweep_all(
      tree, splits,
      [&records](const Emission& e) { records.push_back(e.record); }, options);
  std::sort(records.begin(), records.end(), pair_less);
  if (stats) *stats = s;
  return records;
}

std::vector<InsetRecord> sweep_parallel(const Tree& tree,
                                        const SplitTable& splits,
                                        unsigned workers, SweepStats* stats,
                                        SweepOptions options) {
  if (workers <= 1) return sweep_records(tree, splits, stats, options);

  const std::vector<Middle> middles = enumerate_middles(tree);
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<InsetRecord>> buffers(workers);
  std::vector<SweepStats> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto& out = buffers[w];
        auto sink = [&out](const Emission& e) { out.push_back(e.record); };
        for (std::size_t i = next++; i < middles.size(); i = next++) {
          const SweepStats s =
              sweep_middle(tree, splits, middles[i], sink, options);
          partial[w].records += s.records;
          partial[w].basic_ops += s.basic_ops;
        }
      });
    }
  }

  std::vector<InsetRecord> records;
  records.reserve(static_cast<std::size_t>(inset_edge_count(tree.size())));
  SweepStats total;
  for (unsigned w = 0; w < workers; ++w) {
    records.insert(records.end(), buffers[w].begin(), buffers[w].end());
    total.records += partial[w].records;
    total.basic_ops += partial[w].basic_ops;
  }
  std::sort(records.begin(), records.end(), pair_less);
  if (stats) *stats = total;
  return records;
}

}  // namespace treedelta
