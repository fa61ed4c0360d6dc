#ifndef TREEDELTA_DELTA_HPP_
#define TREEDELTA_DELTA_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "treedelta/rational.hpp"
#include "treedelta/splits.hpp"
#include "treedelta/tree.hpp"
#include "treedelta/types.hpp"

namespace treedelta {

// The cycle closed by inset edge xy, split into the half nearer x, the half
// nearer y and (for odd k) the single middle vertex. cx[0] = x and cx[i] is
// at distance i from x along the path; cy likewise from y.
struct CyclePartition {
  VertexId x = 0;
  VertexId y = 0;
  int k = 0;
  std::vector<VertexId> cx;
  std::vector<VertexId> cy;
  std::optional<VertexId> middle;

  int half() const { return k / 2; }
};

// Trailing-tree weights along the two halves of the cycle. The outer product
// vx * vy^T is the pair-weight matrix; it is never formed explicitly.
template <typename Scalar>
struct WeightVectors {
  int k = 0;
  Vector<Scalar> vx;
  Vector<Scalar> vy;
};

using CountWeights = WeightVectors<Count>;

// Throws std::invalid_argument unless xy is an inset edge.
CyclePartition cycle_partition(const Tree& tree, VertexId x, VertexId y);

// O(k) from the split table.
CountWeights weight_vectors(const Tree& tree, const SplitTable& splits,
                            const CyclePartition& part);

// Weight of the middle vertex of an odd cycle, 0 for even cycles.
Count middle_weight(const Tree& tree, const SplitTable& splits,
                    const CyclePartition& part);

namespace detail {

inline void require_cycle_length(int k) {
  if (k < 3) {
    throw std::invalid_argument("cycle length must be at least 3, got " +
                                std::to_string(k));
  }
}

}  // namespace detail

// Coefficient matrix of the pair-weight norm, assembled from its diagonal
// band and (odd k) its ones-triangle, 1-based:
//   d_ij = 2(k' - i - j + 1) for i + j <= k', else 0
//   o_ij = 1 for i + j - 1 <= k' (odd k only), else 0
template <typename Scalar = Count>
Matrix<Scalar> coefficient_matrix_piecewise(int k) {
  detail::require_cycle_length(k);
  const int kp = k / 2;
  Matrix<Scalar> f = Matrix<Scalar>::Zero(kp, kp);
  for (int i = 1; i <= kp; ++i) {
    for (int j = 1; j <= kp; ++j) {
      Scalar entry = i + j <= kp ? Scalar(2 * (kp - i - j + 1)) : Scalar(0);
      if (k % 2 == 1 && i + j - 1 <= kp) entry += Scalar(1);
      f(i - 1, j - 1) = entry;
    }
  }
  return f;
}

// f_ij = max(k + 2 - 2(i + j), 0), 1-based.
template <typename Scalar = Count>
Matrix<Scalar> coefficient_matrix_closed(int k) {
  detail::require_cycle_length(k);
  const int kp = k / 2;
  return Matrix<Scalar>::NullaryExpr(kp, kp, [k](Eigen::Index r,
                                                 Eigen::Index c) {
    const auto v = static_cast<Scalar>(k + 2 - 2 * (r + c + 2));
    return v > Scalar(0) ? v : Scalar(0);
  });
}

// Both constructions; throws std::logic_error if they ever disagree.
template <typename Scalar = Count>
Matrix<Scalar> coefficient_matrix(int k) {
  Matrix<Scalar> closed = coefficient_matrix_closed<Scalar>(k);
  if (closed != coefficient_matrix_piecewise<Scalar>(k)) {
    throw std::logic_error("coefficient matrix constructions disagree at k=" +
                           std::to_string(k));
  }
  return closed;
}

// ||F_k (.) vx vy^T|| = vx^T F_k vy, since every term is non-negative.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar dprime_from_weights(
    const Eigen::MatrixBase<DerivedX>& vx, const Eigen::MatrixBase<DerivedY>& vy,
    int k) {
  using Scalar = typename DerivedX::Scalar;
  const int kp = k / 2;
  if (vx.size() != kp || vy.size() != kp) {
    throw std::invalid_argument("weight vectors must have length k/2");
  }
  const Matrix<Scalar> f = coefficient_matrix_closed<Scalar>(k);
  return (vx.transpose() * f * vy).value();
}

template <typename Scalar>
Scalar dprime_lemma2(const WeightVectors<Scalar>& w) {
  return dprime_from_weights(w.vx, w.vy, w.k);
}

// Pairwise sum over cx x cy of (2 d(u,v) - k) w_u w_v for d(u,v) > k/2, with
// trailing-tree sizes found by a component search that ignores the split
// table.
Count dprime_lemma1(const Tree& tree, VertexId x, VertexId y);

// D(T) - D(T + xy) from all-pairs tree distances, comparing every pair's tree
// distance with its best route through the new edge.
Count dprime_shortcut_oracle(const Tree& tree, VertexId x, VertexId y);

// Reusable all-pairs table so many shortcut queries share one O(n^2) build.
class ShortcutOracle {
 public:
  explicit ShortcutOracle(const Tree& tree);
  Count dprime(VertexId x, VertexId y) const;

 private:
  const Tree* tree_;
  VertexId n_;
  std::vector<std::int32_t> dist_;
};

// D' / C(n,2). Throws std::invalid_argument when n < 3.
Rational adprime(Count dprime, Count n);

// Which evaluator to use through `evaluate_dprime`.
enum class DeltaMethod { kLemma2, kLemma1, kShortcut };

Count evaluate_dprime(DeltaMethod method, const Tree& tree,
                      const SplitTable& splits, VertexId x, VertexId y);

// n^3/16 - n^2/32 - 9n/8 + 2. Reported by the oracle command only: P4 with
// inset (1,3) already exceeds it.
double cubic_dprime_bound(Count n);

}  // namespace treedelta

#endif  // TREEDELTA_DELTA_HPP_
