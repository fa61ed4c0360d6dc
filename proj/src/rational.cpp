#include "treedelta/rational.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace treedelta {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal() const { return format_decimal(to_double()); }

Rational abs_difference(const Rational& a, const Rational& b) {
  __int128 num = static_cast<__int128>(a.num()) * b.den() -
                 static_cast<__int128>(b.num()) * a.den();
  if (num < 0) num = -num;
  const __int128 den = static_cast<__int128>(a.den()) * b.den();
  const __int128 g = std::gcd(num, den);
  num /= g;
  const __int128 reduced_den = den / g;
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || reduced_den > kMax) {
    throw std::overflow_error("rational difference out of range");
  }
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(reduced_den));
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in " +
                                              std::string(text));
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));

  const bool negative = text.front() == '-';
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 17 ||
      frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  std::int64_t whole = 0;
  if (int_part != "-" && int_part != "+" && !int_part.empty()) {
    whole = parse_int(int_part.front() == '+' ? int_part.substr(1) : int_part,
                      text);
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t frac = parse_int(frac_part, text);
  const __int128 num = static_cast<__int128>(whole < 0 ? -whole : whole) * scale + frac;
  if (num > std::numeric_limits<std::int64_t>::max()) {
    throw std::invalid_argument("number out of range '" + std::string(text) + "'");
  }
  const auto magnitude = static_cast<std::int64_t>(num);
  return Rational(negative ? -magnitude : magnitude, scale);
}

}  // namespace treedelta
