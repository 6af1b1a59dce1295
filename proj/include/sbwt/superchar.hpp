#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sbwt/alphabet.hpp"

namespace sbwt {

// A block of `width` consecutive k-mer symbols packed into one integer key,
// base 5 over {$, A, C, G, T}. Component d (0-based) is the symbol d positions
// before the end of the block and carries weight 5^(width-1-d), so integer
// order on keys of equal width is colex order on the component strings.
class SuperChar {
 public:
  static constexpr std::size_t kMaxWidth = 8;

  static constexpr std::uint32_t pow5(std::size_t e) {
    std::uint32_t p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= 5;
    return p;
  }

  // Number of distinct keys of the given width.
  static constexpr std::uint32_t key_space(std::size_t width) { return pow5(width); }

  constexpr SuperChar(std::uint32_t key, std::size_t width) : key_(key), width_(width) {}

  // From a string over "$ACGT"; the last character is component 0.
  static SuperChar from_string(std::string_view s) {
    if (s.empty() || s.size() > kMaxWidth) throw std::invalid_argument("super-character width out of range");
    std::uint32_t key = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Symbol c = from_char(s[i]);
      if (c >= kCodes) throw std::invalid_argument("super-character symbol outside $ACGT");
      key += c * pow5(i);
    }
    return SuperChar(key, s.size());
  }

  // `head` followed by `tail`: tail's components end the block.
  static constexpr SuperChar concat(SuperChar head, SuperChar tail) {
    return SuperChar(head.key_ + tail.key_ * pow5(head.width_), head.width_ + tail.width_);
  }

  constexpr std::uint32_t key() const { return key_; }
  constexpr std::size_t width() const { return width_; }

  constexpr Symbol component(std::size_t d) const {
    return static_cast<Symbol>((key_ / pow5(width_ - 1 - d)) % 5);
  }

  // The last `w` components.
  constexpr SuperChar suffix(std::size_t w) const { return SuperChar(key_ / pow5(width_ - w), w); }

  std::string to_string() const {
    std::string s(width_, '$');
    for (std::size_t i = 0; i < width_; ++i) s[i] = to_char(static_cast<Symbol>((key_ / pow5(i)) % 5));
    return s;
  }

  friend constexpr bool operator==(SuperChar, SuperChar) = default;
  friend constexpr auto operator<=>(SuperChar a, SuperChar b) { return a.key_ <=> b.key_; }

 private:
  std::uint32_t key_;
  std::size_t width_;
};

}  // namespace sbwt
