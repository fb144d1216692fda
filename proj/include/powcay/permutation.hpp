#pragma once

#include <compare>
#include <string>
#include <vector>

#include "powcay/error.hpp"

namespace powcay {

/// A bijection of {0..n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws kInvalidSpec unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// (a * b)(x) = a(b(x)): b is applied first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_cycles() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

}  // namespace powcay
