#ifndef TREEDELTA_RATIONAL_HPP_
#define TREEDELTA_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace treedelta {

// Exact fraction num/den with den > 0 and gcd(num, den) = 1. Comparisons
// cross-multiply in 128 bits so they never round.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // "p/q", or "p" when q = 1.
  std::string str() const;
  // 12 significant digits.
  std::string decimal() const;

  // Accepts "p", "p/q", and finite decimals such as "-1.25". Throws
  // std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// |a - b|. Throws std::overflow_error if it does not fit in 64 bits.
Rational abs_difference(const Rational& a, const Rational& b);

std::string format_decimal(double value);

}  // namespace treedelta

#endif  // TREEDELTA_RATIONAL_HPP_
