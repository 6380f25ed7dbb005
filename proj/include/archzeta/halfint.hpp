#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace archzeta {

/// An element of (1/2)Z stored as its number of halves.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_halves(std::int64_t halves) {
    HalfInt h;
    h.halves_ = halves;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) {
    return from_halves(2 * value);
  }
  /// Parses "m", "m/2" or "-m/2". Other denominators are rejected.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  /// Only meaningful when is_integer().
  constexpr std::int64_t as_int() const { return halves_ / 2; }
  constexpr std::int64_t floor() const {
    return halves_ >= 0 ? halves_ / 2 : -((-halves_ + 1) / 2);
  }
  constexpr double to_double() const { return static_cast<double>(halves_) / 2.0; }

  constexpr HalfInt abs() const { return from_halves(halves_ < 0 ? -halves_ : halves_); }

  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_halves(-halves_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    halves_ += o.halves_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    halves_ -= o.halves_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return x += y; }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return x -= y; }
  friend constexpr HalfInt operator*(std::int64_t m, HalfInt x) {
    return from_halves(m * x.halves_);
  }
  friend constexpr HalfInt operator*(HalfInt x, std::int64_t m) { return m * x; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t halves_ = 0;
};

constexpr HalfInt half(std::int64_t halves) { return HalfInt::from_halves(halves); }

}  // namespace archzeta
