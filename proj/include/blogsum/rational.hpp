#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace blogsum {

/// Exact non-negative fraction, always stored in lowest terms. Used wherever
/// scores or metrics must compare without floating-point tie noise.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::uint64_t whole) : num_(whole) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    const auto g = std::gcd(num_, den_);
    if (g > 1) num_ /= g, den_ /= g;
    if (num_ == 0) den_ = 1;
  }

  constexpr std::uint64_t num() const noexcept { return num_; }
  constexpr std::uint64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    using wide = unsigned __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace blogsum
