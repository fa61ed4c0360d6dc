#ifndef TREEDELTA_QUERY_HPP_
#define TREEDELTA_QUERY_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "treedelta/rational.hpp"
#include "treedelta/sweep.hpp"
#include "treedelta/types.hpp"

namespace treedelta {

enum class Metric { kDprime, kAdprime };
enum class Direction { kMax, kMin };

Metric parse_metric(std::string_view name);
std::string_view to_string(Metric metric);

// Sweep output sorted by (dprime, x, y).
class DeltaIndex {
 public:
  DeltaIndex() = default;
  DeltaIndex(std::vector<InsetRecord> sorted, Count n)
      : records_(std::move(sorted)), n_(n) {}

  const std::vector<InsetRecord>& records() const { return records_; }
  Count n() const { return n_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  // True when every non-adjacent pair of an n-vertex tree is present.
  bool complete() const {
    return static_cast<Count>(records_.size()) == inset_edge_count(n_);
  }

  // Value of `metric` for a record: dprime, or dprime / C(n,2).
  Rational value(const InsetRecord& r, Metric metric) const;

 private:
  std::vector<InsetRecord> records_;
  Count n_ = 0;
};

// Throws std::invalid_argument on a repeated (x, y). When `comparisons` is
// non-null it receives the comparator calls made by the sort.
DeltaIndex build_index(std::vector<InsetRecord> records, Count n,
                       std::int64_t* comparisons = nullptr);

struct QueryResult {
  std::vector<InsetRecord> matches;  // sorted by (x, y)
  Metric metric = Metric::kDprime;
  Rational target;
  Rational deviation;
};

// Every record minimizing |value - target|. O(log m + ties).
QueryResult closest(const DeltaIndex& index, const Rational& target,
                    Metric metric);

// `count` records from the chosen end; equal values in (x, y) order.
std::vector<InsetRecord> top_k(const DeltaIndex& index, std::size_t count,
                               Direction direction);

struct Extremes {
  std::vector<InsetRecord> max;
  std::vector<InsetRecord> min;
};

Extremes extremes(const DeltaIndex& index);

}  // namespace treedelta

#endif  // TREEDELTA_QUERY_HPP_
