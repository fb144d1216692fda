#include "powcay/permutation.hpp"

#include <numeric>

namespace powcay {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size());
  for (int x : image_) {
    if (x < 0 || x >= degree() || seen[x]++) {
      throw Error(ErrorCode::kInvalidSpec, "image array is not a bijection");
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (int x = 0; x < degree(); ++x)
    if (image_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 0; x < degree(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::kInvalidSpec, "composing permutations of different degree");
  std::vector<int> image(a.image_.size());
  for (int x = 0; x < a.degree(); ++x) image[x] = a.image_[b.image_[x]];
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::string Permutation::to_cycles() const {
  std::string s;
  std::vector<char> done(image_.size());
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || image_[i] == i) continue;
    s += '(';
    for (int j = i; !done[j]; j = image_[j]) {
      if (s.back() != '(') s += ' ';
      s += std::to_string(j);
      done[j] = 1;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace powcay
