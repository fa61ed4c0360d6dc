#ifndef TREEDELTA_SWEEP_HPP_
#define TREEDELTA_SWEEP_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "treedelta/splits.hpp"
#include "treedelta/tree.hpp"
#include "treedelta/types.hpp"

namespace treedelta {

// Center of the tree path joining an inset edge's endpoints: a vertex when the
// path has even length, an edge (u < v) when odd.
struct Middle {
  enum class Kind { kVertex, kEdge };
  Kind kind = Kind::kVertex;
  VertexId u = 0;
  VertexId v = 0;  // unused for vertex middles

  static Middle vertex(VertexId w) { return {Kind::kVertex, w, w}; }
  static Middle edge(VertexId a, VertexId b);

  bool operator==(const Middle&) const = default;
};

// State of one growing cycle. vx(0) / vy(0) are the current endpoints'
// weights; px / py are the endpoints' neighbors on the cycle path.
struct SweepFrame {
  int k = 0;
  VertexId x = 0;
  VertexId y = 0;
  VertexId px = 0;
  VertexId py = 0;
  CountVector vx;
  CountVector vy;
  Count sum_x = 0;
  Count sum_y = 0;
  // Sum of vx(i) vy(j) over i + j <= k/2 + 1 (1-based).
  Count band = 0;
  Count dprime = 0;
};

struct InsetRecord {
  VertexId x = 0;  // x < y
  VertexId y = 0;
  int k = 0;
  Count dprime = 0;

  bool operator==(const InsetRecord&) const = default;
};

inline bool pair_less(const InsetRecord& a, const InsetRecord& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

struct OpCounter {
  std::int64_t basic_ops = 0;
  bool enabled = false;

  void charge(std::int64_t ops) {
    if (enabled) basic_ops += ops;
  }
};

struct SweepStats {
  std::int64_t records = 0;
  std::int64_t basic_ops = 0;
};

struct SweepOptions {
  bool count_ops = false;
};

// What the sweep hands to its consumer at every frame.
struct Emission {
  const InsetRecord& record;
  const Middle& middle;
  const SweepFrame& frame;
  // Ops charged to build this frame (0 when counting is off).
  std::int64_t frame_ops;
};

using RecordSink = std::function<void(const Emission&)>;

// Throws std::invalid_argument unless xy is an inset edge.
Middle middle_of(const Tree& tree, VertexId x, VertexId y);

// Vertex middles (degree >= 2) ascending, then edge middles (both endpoint
// degrees >= 2) ascending.
std::vector<Middle> enumerate_middles(const Tree& tree);

// k = 3 frames for every unordered neighbor pair of v.
std::vector<SweepFrame> init_vertex_frames(const Tree& tree,
                                           const SplitTable& splits, VertexId v,
                                           OpCounter* ops = nullptr);

// k = 4 frames for every pair in (N(u) - v) x (N(v) - u).
std::vector<SweepFrame> init_edge_frames(const Tree& tree,
                                         const SplitTable& splits, VertexId u,
                                         VertexId v, OpCounter* ops = nullptr);

// Grows the cycle by u (a non-cycle neighbor of frame.x) and v (a non-cycle
// neighbor of frame.y). wu / wv are the sizes of the branches hanging off at
// u and v. O(k).
SweepFrame extend_frame(const SweepFrame& frame, VertexId u, Count wu,
                        VertexId v, Count wv, OpCounter* ops = nullptr);

// Same, looking the weights up in the split table. Throws
// std::invalid_argument if u or v is not an admissible extension.
SweepFrame extend_frame(const Tree& tree, const SplitTable& splits,
                        const SweepFrame& frame, VertexId u, VertexId v,
                        OpCounter* ops = nullptr);

// Every inset edge whose middle is `middle`, depth first.
SweepStats sweep_middle(const Tree& tree, const SplitTable& splits,
                        const Middle& middle, const RecordSink& sink,
                        SweepOptions options = {});

// One emission per inset edge of the tree.
SweepStats sweep_all(const Tree& tree, const SplitTable& splits,
                     const RecordSink& sink, SweepOptions options = {});

// Convenience: collect sweep_all records sorted by (x, y).
std::vector<InsetRecord> sweep_records(const Tree& tree,
                                       const SplitTable& splits,
                                       SweepStats* stats = nullptr,
                                       SweepOptions options = {});

// Middles are dealt round-robin to `workers` threads; the result is sorted by
// (x, y) and identical for every worker count.
std::vector<InsetRecord> sweep_parallel(const Tree& tree,
                                        const SplitTable& splits,
                                        unsigned workers,
                                        SweepStats* stats = nullptr,
                                        SweepOptions options = {});

}  // namespace treedelta

#endif  // TREEDELTA_SWEEP_HPP_
