#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lierep {

/// An integral weight in fundamental-weight coordinates, the string
/// (a_1 ... a_n) with w = sum a_i omega_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
  /// omega_{index+1}; index is 0-based.
  static Weight fundamental(int rank, int index);

  /// Parses "0,1,0" (also accepts "(0,1,0)" and whitespace).
  static Weight parse(std::string_view text);

  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;
  /// Sum of the coordinates (the search-bound measure).
  std::int64_t coordinate_sum() const noexcept;
  /// Coordinates in reverse order (the dual module's highest weight in type A).
  Weight reversed() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight w);

  /// Lexicographic on coordinates; the canonical output order.
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(0,1,0)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace lierep
