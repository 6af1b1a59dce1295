#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace sbwt {

// DNA alphabet with a sentinel. Codes are ordered so that integer comparison
// matches the symbol order ($ < A < C < G < T), which is also ASCII order.
using Symbol = std::uint8_t;

inline constexpr Symbol kSentinel = 0;
inline constexpr Symbol kA = 1;
inline constexpr Symbol kC = 2;
inline constexpr Symbol kG = 3;
inline constexpr Symbol kT = 4;

// Number of non-sentinel symbols.
inline constexpr std::size_t kSigma = 4;
// Number of codes including the sentinel.
inline constexpr std::size_t kCodes = kSigma + 1;

inline constexpr std::array<Symbol, kSigma> kDnaSymbols = {kA, kC, kG, kT};

inline constexpr char kSymbolChars[kCodes] = {'$', 'A', 'C', 'G', 'T'};

constexpr char to_char(Symbol s) { return kSymbolChars[s]; }

// Returns kCodes for characters outside {$, A, C, G, T}. Case sensitive.
constexpr Symbol from_char(char ch) {
  switch (ch) {
    case '$': return kSentinel;
    case 'A': return kA;
    case 'C': return kC;
    case 'G': return kG;
    case 'T': return kT;
    default: return static_cast<Symbol>(kCodes);
  }
}

constexpr bool is_dna(char ch) {
  return ch == 'A' || ch == 'C' || ch == 'G' || ch == 'T';
}

constexpr bool is_dna(std::string_view s) {
  for (char ch : s) {
    if (!is_dna(ch)) return false;
  }
  return true;
}

// A subset of {A, C, G, T}, one bit per symbol (bit c-1 for code c).
class SymbolSet {
 public:
  constexpr SymbolSet() = default;
  constexpr explicit SymbolSet(std::uint8_t bits) : bits_(bits & 0xF) {}

  constexpr bool contains(Symbol c) const { return (bits_ >> (c - 1)) & 1u; }
  constexpr void insert(Symbol c) { bits_ |= static_cast<std::uint8_t>(1u << (c - 1)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return ((bits_ >> 0) & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u) + ((bits_ >> 3) & 1u);
  }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(SymbolSet, SymbolSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace sbwt
