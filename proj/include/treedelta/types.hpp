#ifndef TREEDELTA_TYPES_HPP_
#define TREEDELTA_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace treedelta {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Vertex counts, distance sums and products of weights. Exact, never floating.
using Count = std::int64_t;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using CountVector = Vector<Count>;
using CountMatrix = Matrix<Count>;

// Largest tree accepted anywhere in the library. C(n+1,3) stays below 2^63.
inline constexpr Count kMaxVertices = 2'000'000;

// Malformed or non-tree input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or memory guard refused the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Count choose2(Count n) { return n * (n - 1) / 2; }

// Number of vertex pairs not joined by a tree edge.
inline Count inset_edge_count(Count n) {
  return n < 2 ? 0 : choose2(n) - (n - 1);
}

}  // namespace treedelta

#endif  // TREEDELTA_TYPES_HPP_
