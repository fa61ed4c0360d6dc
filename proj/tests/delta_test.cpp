#include "doctest.h"
#include "oracles.hpp"
#include "treedelta/delta.hpp"

using namespace treedelta;

namespace {

const Tree& p4() {
  static const Tree t = parse_tree_string("1 2\n2 3\n3 4");
  return t;
}
const Tree& p5() {
  static const Tree t = parse_tree_string("1 2\n2 3\n3 4\n4 5");
  return t;
}
const Tree& star4() {
  static const Tree t = parse_tree_string("1 2\n1 3\n1 4");
  return t;
}

VertexId id(const Tree& t, const char* label) { return t.id_of(label); }

std::vector<VertexId> ids(const Tree& t, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (auto l : labels) out.push_back(t.id_of(l));
  return out;
}

std::vector<Count> as_vector(const CountVector& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("cycle_partition examples") {
  const auto odd = cycle_partition(p5(), id(p5(), "1"), id(p5(), "5"));
  CHECK(odd.k == 5);
  CHECK(odd.cx == ids(p5(), {"1", "2"}));
  CHECK(odd.cy == ids(p5(), {"5", "4"}));
  REQUIRE(odd.middle.has_value());
  CHECK(*odd.middle == id(p5(), "3"));

  const auto even = cycle_partition(p4(), id(p4(), "1"), id(p4(), "4"));
  CHECK(even.k == 4);
  CHECK(even.cx == ids(p4(), {"1", "2"}));
  CHECK(even.cy == ids(p4(), {"4", "3"}));
  CHECK_FALSE(even.middle.has_value());

  const auto tri = cycle_partition(p4(), id(p4(), "1"), id(p4(), "3"));
  CHECK(tri.k == 3);
  CHECK(tri.cx == ids(p4(), {"1"}));
  CHECK(tri.cy == ids(p4(), {"3"}));
  CHECK(*tri.middle == id(p4(), "2"));

  CHECK_THROWS_AS(cycle_partition(p4(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_partition(p4(), 2, 2), std::invalid_argument);
}

TEST_CASE("cycle halves are strictly closer to their own endpoint") {
  const Tree t = generate(TreeKind::kRandom, 40, 11);
  for (auto [x, y] : oracle::inset_pairs(t)) {
    const auto part = cycle_partition(t, x, y);
    const auto dx = bfs_distances(t, x);
    const auto dy = bfs_distances(t, y);
    CHECK(static_cast<int>(part.cx.size()) == part.k / 2);
    CHECK(static_cast<int>(part.cy.size()) == part.k / 2);
    CHECK(part.middle.has_value() == (part.k % 2 == 1));
    for (std::size_t i = 0; i < part.cx.size(); ++i) {
      CHECK(dx[part.cx[i]] == static_cast<int>(i));
      CHECK(dx[part.cx[i]] < dy[part.cx[i]]);
      CHECK(dy[part.cy[i]] == static_cast<int>(i));
      CHECK(dy[part.cy[i]] < dx[part.cy[i]]);
    }
  }
}

TEST_CASE("weight_vectors examples") {
  const SplitTable s4 = edge_splits(p4());
  auto w = weight_vectors(p4(), s4, cycle_partition(p4(), 0, 2));
  // Brute force: deleting path 1-2-3 leaves {1} and {3,4}.
  CHECK(oracle::weights(p4(), 0, 2) ==
        std::pair<std::vector<Count>, std::vector<Count>>{{1}, {2}});
  CHECK(as_vector(w.vx) == std::vector<Count>{1});
  CHECK(as_vector(w.vy) == std::vector<Count>{2});

  const SplitTable s5 = edge_splits(p5());
  w = weight_vectors(p5(), s5, cycle_partition(p5(), 0, 4));
  CHECK(as_vector(w.vx) == std::vector<Count>{1, 1});
  CHECK(as_vector(w.vy) == std::vector<Count>{1, 1});

  const SplitTable ss = edge_splits(star4());
  w = weight_vectors(star4(), ss, cycle_partition(star4(), 1, 3));
  CHECK(as_vector(w.vx) == std::vector<Count>{1});
  CHECK(as_vector(w.vy) == std::vector<Count>{1});
}

TEST_CASE("weight_vectors agree with component sizes and conserve n") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Tree t = generate(static_cast<TreeKind>(seed % 4), 3 + VertexId(seed * 3), seed);
    const SplitTable s = edge_splits(t);
    for (auto [x, y] : oracle::inset_pairs(t)) {
      const auto part = cycle_partition(t, x, y);
      const auto w = weight_vectors(t, s, part);
      const auto [bx, by] = oracle::weights(t, x, y);
      CHECK(as_vector(w.vx) == bx);
      CHECK(as_vector(w.vy) == by);
      CHECK((w.vx.array() >= 1).all());
      CHECK((w.vy.array() >= 1).all());
      CHECK(w.vx.sum() + w.vy.sum() + middle_weight(t, s, part) == t.size());
    }
  }
}

TEST_CASE("coefficient_matrix examples") {
  CHECK(coefficient_matrix(3) == (CountMatrix(1, 1) << 1).finished());
  CHECK(coefficient_matrix(5) == (CountMatrix(2, 2) << 3, 1, 1, 0).finished());
  CHECK(coefficient_matrix(4) == (CountMatrix(2, 2) << 2, 0, 0, 0).finished());
  CHECK_THROWS_AS(coefficient_matrix(2), std::invalid_argument);

  // Top-left corners of the displayed odd and even layouts.
  for (int k = 3; k <= 21; ++k) {
    const int kp = k / 2;
    const auto f = coefficient_matrix(k);
    CHECK(f(0, 0) == (k % 2 ? 2 * kp - 1 : 2 * kp - 2));
  }
}

TEST_CASE("coefficient_matrix constructions agree and link to path distances") {
  for (int k = 3; k <= 64; ++k) {
    const CountMatrix piecewise = coefficient_matrix_piecewise(k);
    const CountMatrix closed = coefficient_matrix_closed(k);
    CHECK(piecewise == closed);
    const int kp = k / 2;
    for (int i = 1; i <= kp; ++i) {
      for (int j = 1; j <= kp; ++j) {
        // d(x_i, y_j) = k + 1 - i - j along the cycle's tree path.
        const int dist = k + 1 - i - j;
        CHECK(closed(i - 1, j - 1) == std::max(2 * dist - k, 0));
        if (i < kp) CHECK(closed(i, j - 1) <= closed(i - 1, j - 1));
        if (j < kp) CHECK(closed(i - 1, j) <= closed(i - 1, j - 1));
        if (i < kp && j > 1) CHECK(closed(i, j - 2) == closed(i - 1, j - 1));
      }
    }
  }
  // Templated on the scalar: the double version has the same entries.
  CHECK(coefficient_matrix<double>(9).cast<Count>() == coefficient_matrix(9));
}

TEST_CASE("dprime evaluators: worked examples") {
  const SplitTable s4 = edge_splits(p4());
  const SplitTable s5 = edge_splits(p5());
  const SplitTable ss = edge_splits(star4());

  // Brute force: D(P4) = 10, D(P4 + 13) = 8, D(P4 + 14) = 8.
  CHECK(oracle::dprime(p4(), 0, 2) == 2);
  CHECK(oracle::dprime(p4(), 0, 3) == 2);
  // D(P5) = 20, D(C5) = 15.
  CHECK(oracle::dprime(p5(), 0, 4) == 5);

  for (auto method : {DeltaMethod::kLemma2, DeltaMethod::kLemma1,
                      DeltaMethod::kShortcut}) {
    CAPTURE(static_cast<int>(method));
    CHECK(evaluate_dprime(method, p4(), s4, 0, 2) == 2);
    CHECK(evaluate_dprime(method, p4(), s4, 0, 3) == 2);
    CHECK(evaluate_dprime(method, p5(), s5, 0, 4) == 5);
    CHECK(evaluate_dprime(method, star4(), ss, 1, 2) == 1);
    CHECK_THROWS_AS(evaluate_dprime(method, p4(), s4, 0, 1),
                    std::invalid_argument);
  }

  CountVector vx(1), vy(1);
  vx << 1;
  vy << 2;
  CHECK(dprime_from_weights(vx, vy, 3) == 2);
  CountVector a(2), b(2);
  a << 1, 1;
  b << 1, 1;
  CHECK(dprime_from_weights(a, b, 5) == 5);
  CHECK(dprime_from_weights(a, b, 4) == 2);
  CHECK_THROWS_AS(dprime_from_weights(a, b, 3), std::invalid_argument);
}

TEST_CASE("dprime evaluators agree with brute force on every inset edge") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tree t = generate(static_cast<TreeKind>(seed % 4), 3 + VertexId(seed % 25), seed);
    const SplitTable s = edge_splits(t);
    const ShortcutOracle shortcut(t);
    for (auto [x, y] : oracle::inset_pairs(t)) {
      const auto w = weight_vectors(t, s, cycle_partition(t, x, y));
      const Count lemma2 = dprime_lemma2(w);
      CHECK(lemma2 == oracle::dprime(t, x, y));
      CHECK(lemma2 == dprime_lemma1(t, x, y));
      CHECK(lemma2 == shortcut.dprime(x, y));
      CHECK(lemma2 ==
            oracle::bilinear(as_vector(w.vx), as_vector(w.vy), w.k));
      CHECK(lemma2 >= 1);
      if (w.k == 3) CHECK(lemma2 == w.vx(0) * w.vy(0));
    }
  }
}

TEST_CASE("adprime") {
  CHECK(adprime(2, 4) == Rational(1, 3));
  CHECK(adprime(5, 5) == Rational(1, 2));
  CHECK(adprime(0, 7) == Rational(0));
  CHECK_THROWS_AS(adprime(1, 2), std::invalid_argument);
}

TEST_CASE("cubic bound is informational only") {
  // P4 with inset (1,3) already has D' = 2 above the bound's value of 1.
  CHECK(cubic_dprime_bound(4) == doctest::Approx(1.0));
  CHECK(static_cast<double>(oracle::dprime(p4(), 0, 2)) > cubic_dprime_bound(4));
}
