#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reid {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products compose like functions: (a * b)(i) == a(b(i)).
class Perm {
 public:
  Perm() = default;

  /// Throws Error(InvalidPermutation) unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  /// Points are 0-based and must be < degree. Throws Error(SpecParseError).
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  std::string to_cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace reid
