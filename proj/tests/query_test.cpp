#include <algorithm>
#include <map>
#include <optional>

#include "doctest.h"
#include "oracles.hpp"
#include "treedelta/query.hpp"
#include "treedelta/splits.hpp"

using namespace treedelta;

namespace {

DeltaIndex index_of(const Tree& t) {
  return build_index(sweep_records(t, edge_splits(t)), t.size());
}

std::vector<std::pair<VertexId, VertexId>> pairs(const std::vector<InsetRecord>& rs) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& r : rs) out.emplace_back(r.x, r.y);
  return out;
}

// Minimal-deviation set by a full scan.
std::vector<InsetRecord> scan_closest(const DeltaIndex& index,
                                      const Rational& target, Metric metric) {
  std::vector<InsetRecord> best;
  std::optional<Rational> best_gap;
  for (const auto& r : index.records()) {
    const Rational gap = abs_difference(index.value(r, metric), target);
    if (!best_gap || gap < *best_gap) {
      best_gap = gap;
      best.clear();
    }
    if (gap == *best_gap) best.push_back(r);
  }
  std::sort(best.begin(), best.end(), pair_less);
  return best;
}

// Records with hand-picked values 1, 2, 2 on a 4-vertex frame of reference.
DeltaIndex small_index() {
  return build_index({{0, 2, 3, 2}, {1, 3, 3, 2}, {0, 3, 4, 1}}, 4);
}

}  // namespace

TEST_CASE("Rational parsing and ordering") {
  CHECK(Rational::parse("1.4") == Rational(7, 5));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("100") == Rational(100));
  CHECK(Rational::parse("+2.5") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, 3).decimal() == "0.333333333333");
  CHECK(abs_difference(Rational(1), Rational(7, 5)) == Rational(2, 5));
}

TEST_CASE("build_index examples") {
  const DeltaIndex p4 = index_of(generate(TreeKind::kPath, 4, 0));
  std::vector<Count> values;
  for (const auto& r : p4.records()) values.push_back(r.dprime);
  CHECK(values == std::vector<Count>{2, 2, 2});
  CHECK(p4.complete());

  const DeltaIndex star = index_of(generate(TreeKind::kStar, 4, 0));
  for (const auto& r : star.records()) CHECK(r.dprime == 1);

  const DeltaIndex empty = index_of(generate(TreeKind::kPath, 2, 0));
  CHECK(empty.empty());
  CHECK(empty.complete());

  CHECK_THROWS_AS(build_index({{0, 2, 3, 2}, {0, 2, 3, 5}}, 4),
                  std::invalid_argument);
}

TEST_CASE("build_index sorts by value then pair and is a permutation") {
  const Tree t = generate(TreeKind::kRandom, 70, 3);
  auto records = sweep_records(t, edge_splits(t));
  std::shuffle(records.begin(), records.end(), std::mt19937_64(1));
  const DeltaIndex index = build_index(records, t.size());
  const auto& sorted = index.records();
  CHECK(std::is_sorted(sorted.begin(), sorted.end(),
                       [](const InsetRecord& a, const InsetRecord& b) {
                         return a.dprime != b.dprime ? a.dprime < b.dprime
                                                     : pair_less(a, b);
                       }));
  auto in = records, out = sorted;
  std::sort(in.begin(), in.end(), pair_less);
  std::sort(out.begin(), out.end(), pair_less);
  CHECK(in == out);

  // Ordering by AD' gives exactly the same sequence.
  auto by_ad = records;
  std::stable_sort(by_ad.begin(), by_ad.end(), pair_less);
  std::stable_sort(by_ad.begin(), by_ad.end(),
                   [&](const InsetRecord& a, const InsetRecord& b) {
                     return index.value(a, Metric::kAdprime) <
                            index.value(b, Metric::kAdprime);
                   });
  CHECK(by_ad == sorted);
}

TEST_CASE("closest examples") {
  const DeltaIndex small = small_index();
  auto q = closest(small, Rational::parse("1.4"), Metric::kDprime);
  CHECK(pairs(q.matches) == std::vector<std::pair<VertexId, VertexId>>{{0, 3}});
  CHECK(q.deviation == Rational(2, 5));

  q = closest(small, Rational::parse("1.5"), Metric::kDprime);
  CHECK(q.matches.size() == 3);
  CHECK(q.deviation == Rational(1, 2));

  // P5 brute force: (1,5) -> 5; (1,4), (2,4), (2,5) -> 4; (1,3), (3,5) -> 3.
  const Tree p5 = generate(TreeKind::kPath, 5, 0);
  const std::map<std::pair<VertexId, VertexId>, Count> p5_values{
      {{0, 2}, 3}, {{0, 3}, 4}, {{0, 4}, 5}, {{1, 3}, 4}, {{1, 4}, 4}, {{2, 4}, 3}};
  for (auto [x, y] : oracle::inset_pairs(p5)) {
    CHECK(oracle::dprime(p5, x, y) == p5_values.at({x, y}));
  }
  const DeltaIndex i5 = index_of(p5);
  q = closest(i5, Rational(1, 2), Metric::kAdprime);
  CHECK(pairs(q.matches) == std::vector<std::pair<VertexId, VertexId>>{{0, 4}});
  CHECK(q.deviation == Rational(0));
  CHECK(i5.value(q.matches[0], Metric::kAdprime) == Rational(5, 10));

  CHECK_THROWS_AS(closest(DeltaIndex{}, Rational(1), Metric::kDprime),
                  std::invalid_argument);
}

TEST_CASE("closest agrees with a linear scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = generate(static_cast<TreeKind>(trial % 4),
                            std::uniform_int_distribution<VertexId>(3, 30)(rng),
                            rng());
    const DeltaIndex index = index_of(t);
    const auto& recs = index.records();
    const auto pick = [&] {
      return recs[std::uniform_int_distribution<std::size_t>(0, recs.size() - 1)(rng)];
    };
    const Metric metric = trial % 2 ? Metric::kAdprime : Metric::kDprime;
    const Count scale = metric == Metric::kDprime ? 1 : choose2(t.size());
    // Midpoint of two present values, an exact hit, and a random fraction.
    const Count a = pick().dprime, b = pick().dprime;
    const Rational targets[] = {
        Rational(a + b, 2 * scale), Rational(a, scale),
        Rational(std::uniform_int_distribution<Count>(-20, 400)(rng), 7 * scale)};
    for (const Rational& target : targets) {
      const auto q = closest(index, target, metric);
      CHECK(q.matches == scan_closest(index, target, metric));
    }
  }
}

TEST_CASE("top_k") {
  const DeltaIndex p4 = index_of(generate(TreeKind::kPath, 4, 0));
  CHECK(pairs(top_k(p4, 1, Direction::kMax)) ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 2}});
  CHECK(top_k(p4, 3, Direction::kMin).size() == 3);
  CHECK_THROWS_AS(top_k(p4, 0, Direction::kMax), std::invalid_argument);
  CHECK_THROWS_AS(top_k(p4, 4, Direction::kMax), std::invalid_argument);

  const DeltaIndex p5 = index_of(generate(TreeKind::kPath, 5, 0));
  const auto best = top_k(p5, 1, Direction::kMax);
  CHECK(best[0].x == 0);
  CHECK(best[0].y == 4);
  CHECK(best[0].dprime == 5);
  const auto three = top_k(p5, 3, Direction::kMax);
  CHECK(pairs(three) == std::vector<std::pair<VertexId, VertexId>>{{0, 4}, {0, 3}, {1, 3}});
  auto all = top_k(p5, p5.size(), Direction::kMin);
  CHECK(all == p5.records());
}

TEST_CASE("extremes") {
  const DeltaIndex p5 = index_of(generate(TreeKind::kPath, 5, 0));
  const Extremes e = extremes(p5);
  CHECK(pairs(e.max) == std::vector<std::pair<VertexId, VertexId>>{{0, 4}});
  CHECK(pairs(e.min) ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {2, 4}});
  CHECK(e.min[0].dprime == 3);

  const DeltaIndex star = index_of(generate(TreeKind::kStar, 6, 0));
  CHECK(extremes(star).max.size() == star.size());
  CHECK(extremes(star).min.size() == star.size());
  const DeltaIndex p4 = index_of(generate(TreeKind::kPath, 4, 0));
  CHECK(extremes(p4).max == p4.records());
  CHECK_THROWS_AS(extremes(DeltaIndex{}), std::invalid_argument);
}

TEST_CASE("largest decrease is the smallest augmented Wiener index") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Tree t = generate(TreeKind::kRandom,
                            std::uniform_int_distribution<VertexId>(3, 40)(rng), rng());
    const DeltaIndex index = index_of(t);
    std::vector<std::pair<VertexId, VertexId>> argmin;
    Count best = -1;
    for (auto [x, y] : oracle::inset_pairs(t)) {
      const Count d = oracle::wiener_with_edge(t, x, y);
      if (best < 0 || d < best) {
        best = d;
        argmin.clear();
      }
      if (d == best) argmin.emplace_back(x, y);
    }
    CHECK(pairs(extremes(index).max) == argmin);
  }
}
