#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galchar {

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)[i] == b[a[i]], i.e. apply a first, then b.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws DomainError unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Product of disjoint or overlapping cycles (0-based points), applied left to right.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Disjoint cycles of length > 1, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  unsigned long long order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// 1-based cycle notation, e.g. `(1 2)(3 4)`; the identity is `()`.
std::string to_cycle_string(const Permutation& p);

/// Parses whitespace-separated cycles `(a b c)` with 1-based points.
/// Throws ParseError (with the offset into text, plus base_offset) on a
/// malformed cycle, a point outside [1, degree], or a point repeated
/// within one cycle.
Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t base_offset = 0);

}  // namespace galchar

template <>
struct std::hash<galchar::Permutation> {
  std::size_t operator()(const galchar::Permutation& p) const noexcept;
};
