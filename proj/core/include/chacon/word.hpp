#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chacon {

// A finite word over the alphabet {0,1}, packed 64 symbols per block.
// Symbol i lives in blocks()[i / 64] at bit (i % 64). Bits above size()
// in the last block are kept zero, so equality is memberwise comparison
// and popcount kernels never see stray bits.
class Word {
 public:
  Word() = default;

  // Parses a string of '0'/'1' characters.
  static Word from_string(std::string_view text);

  uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Symbol at position i as 0 or 1. Precondition: i < size().
  int bit(uint64_t i) const noexcept {
    return static_cast<int>((blocks_[i >> 6] >> (i & 63)) & 1u);
  }

  uint64_t count_ones() const noexcept;
  uint64_t count_zeros() const noexcept { return size_ - count_ones(); }

  void push_back(int symbol);
  void append(const Word& other) { append_range(other, 0, other.size()); }

  // Appends src[start, start + length) to this word.
  void append_range(const Word& src, uint64_t start, uint64_t length);

  Word slice(uint64_t start, uint64_t length) const;

  // Low-aligned copy of symbols [pos, pos + count), count <= 64.
  // Precondition: pos + count <= size().
  uint64_t extract_bits(uint64_t pos, unsigned count) const noexcept;

  std::span<const uint64_t> blocks() const noexcept { return blocks_; }

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  void append_bits(uint64_t bits, unsigned count);

  std::vector<uint64_t> blocks_;
  uint64_t size_ = 0;
};

// Start positions of every occurrence of pattern in haystack, ascending,
// overlapping occurrences included. Linear-time (KMP) scan.
// Throws std::invalid_argument if pattern is empty.
std::vector<uint64_t> occurrences(const Word& pattern, const Word& haystack);

}  // namespace chacon
