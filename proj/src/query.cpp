#include "treedelta/query.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>

namespace treedelta {

Metric parse_metric(std::string_view name) {
  if (name == "dprime") return Metric::kDprime;
  if (name == "adprime") return Metric::kAdprime;
  throw std::invalid_argument("unknown metric " + std::string(name));
}

std::string_view to_string(Metric metric) {
  return metric == Metric::kDprime ? "dprime" : "adprime";
}

namespace {

Count metric_scale(Metric metric, Count n) {
  return metric == Metric::kDprime ? 1 : choose2(n);
}

// |dprime / scale - target| scaled by scale * target.den, exact.
__int128 scaled_gap(Count dprime, Count scale, const Rational& target) {
  const __int128 gap = static_cast<__int128>(dprime) * target.den() -
                       static_cast<__int128>(target.num()) * scale;
  return gap < 0 ? -gap : gap;
}

}  // namespace

Rational DeltaIndex::value(const InsetRecord& r, Metric metric) const {
  return Rational(r.dprime, metric_scale(metric, n_));
}

DeltaIndex build_index(std::vector<InsetRecord> records, Count n,
                       std::int64_t* comparisons) {
  std::int64_t calls = 0;
  auto by_value = [&calls](const InsetRecord& a, const InsetRecord& b) {
    ++calls;
    if (a.dprime != b.dprime) return a.dprime < b.dprime;
    return pair_less(a, b);
  };
  std::sort(records.begin(), records.end(), by_value);
  if (records.size() > 1) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(records.size());
    for (const auto& r : records) pairs.emplace_back(r.x, r.y);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
      throw std::invalid_argument("duplicate inset edge in sweep output");
    }
  }
  if (comparisons) *comparisons = calls;
  return DeltaIndex(std::move(records), n);
}

QueryResult closest(const DeltaIndex& index, const Rational& target,
                    Metric metric) {
  if (index.empty()) throw std::invalid_argument("closest: empty index");
  const auto& recs = index.records();
  const Count scale = metric_scale(metric, index.n());

  // First record whose value is >= target.
  auto upper = std::partition_point(
      recs.begin(), recs.end(), [&](const InsetRecord& r) {
        return static_cast<__int128>(r.dprime) * target.den() <
               static_cast<__int128>(target.num()) * scale;
      });

  __int128 best = -1;
  if (upper != recs.end()) best = scaled_gap(upper->dprime, scale, target);
  if (upper != recs.begin()) {
    const __int128 below = scaled_gap(std::prev(upper)->dprime, scale, target);
    if (best < 0 || below < best) best = below;
  }

  QueryResult result;
  result.metric = metric;
  result.target = target;
  auto take_run = [&](auto first, auto last) {
    result.matches.insert(result.matches.end(), first, last);
  };
  if (upper != recs.begin()) {
    const Count value = std::prev(upper)->dprime;
    if (scaled_gap(value, scale, target) == best) {
      auto first = std::lower_bound(
          recs.begin(), upper, value,
          [](const InsetRecord& r, Count v) { return r.dprime < v; });
      take_run(first, upper);
    }
  }
  if (upper != recs.end() && scaled_gap(upper->dprime, scale, target) == best) {
    auto last = std::upper_bound(
        upper, recs.end(), upper->dprime,
        [](Count v, const InsetRecord& r) { return v < r.dprime; });
    take_run(upper, last);
  }
  std::sort(result.matches.begin(), result.matches.end(), pair_less);

  result.deviation =
      abs_difference(index.value(result.matches.front(), metric), target);
  return result;
}

std::vector<InsetRecord> top_k(const DeltaIndex& index, std::size_t count,
                               Direction direction) {
  if (count < 1 || count > index.size()) {
    throw std::invalid_argument("top_k: count must be in [1, " +
                                std::to_string(index.size()) + "]");
  }
  const auto& recs = index.records();
  if (direction == Direction::kMin) {
    return {recs.begin(), recs.begin() + static_cast<std::ptrdiff_t>(count)};
  }
  // Walk value groups from the top; each group is already in (x, y) order.
  std::vector<InsetRecord> out;
  out.reserve(count);
  auto group_end = recs.end();
  while (out.size() < count) {
    const Count value = std::prev(group_end)->dprime;
    auto group_begin = std::lower_bound(
        recs.begin(), group_end, value,
        [](const InsetRecord& r, Count v) { return r.dprime < v; });
    for (auto it = group_begin; it != group_end && out.size() < count; ++it) {
      out.push_back(*it);
    }
    group_end = group_begin;
  }
  return out;
}

Extremes extremes(const DeltaIndex& index) {
  if (index.empty()) throw std::invalid_argument("extremes: empty index");
  const auto& recs = index.records();
  auto lower = [](const InsetRecord& r, Count v) { return r.dprime < v; };
  auto upper = [](Count v, const InsetRecord& r) { return v < r.dprime; };
  Extremes e;
  e.min.assign(recs.begin(), std::upper_bound(recs.begin(), recs.end(),
                                              recs.front().dprime, upper));
  e.max.assign(std::lower_bound(recs.begin(), recs.end(), recs.back().dprime,
                                lower),
               recs.end());
  return e;
}

}  // namespace treedelta
