#include "chacon/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace chacon {

Word Word::from_string(std::string_view text) {
  Word w;
  w.blocks_.reserve((text.size() + 63) / 64);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word symbols must be '0' or '1'");
    }
    w.push_back(c - '0');
  }
  return w;
}

uint64_t Word::count_ones() const noexcept {
  uint64_t total = 0;
  for (uint64_t b : blocks_) total += static_cast<uint64_t>(std::popcount(b));
  return total;
}

void Word::push_back(int symbol) {
  if ((size_ & 63) == 0) blocks_.push_back(0);
  if (symbol) blocks_.back() |= uint64_t{1} << (size_ & 63);
  ++size_;
}

uint64_t Word::extract_bits(uint64_t pos, unsigned count) const noexcept {
  if (count == 0) return 0;
  const uint64_t block = pos >> 6;
  const unsigned offset = static_cast<unsigned>(pos & 63);
  uint64_t bits = blocks_[block] >> offset;
  if (offset + count > 64) {
    bits |= blocks_[block + 1] << (64 - offset);
  }
  if (count < 64) bits &= (uint64_t{1} << count) - 1;
  return bits;
}

void Word::append_bits(uint64_t bits, unsigned count) {
  const unsigned offset = static_cast<unsigned>(size_ & 63);
  if (offset == 0) {
    blocks_.push_back(bits);
  } else {
    blocks_.back() |= bits << offset;
    if (offset + count > 64) blocks_.push_back(bits >> (64 - offset));
  }
  size_ += count;
}

void Word::append_range(const Word& src, uint64_t start, uint64_t length) {
  if (start + length < start || start + length > src.size_) {
    throw std::out_of_range("append_range: window outside source word");
  }
  blocks_.reserve(((size_ + length) >> 6) + 1);
  uint64_t done = 0;
  while (done < length) {
    const unsigned take =
        static_cast<unsigned>(std::min<uint64_t>(64, length - done));
    append_bits(src.extract_bits(start + done, take), take);
    done += take;
  }
}

Word Word::slice(uint64_t start, uint64_t length) const {
  Word out;
  out.append_range(*this, start, length);
  return out;
}

std::string Word::to_string() const {
  std::string text(size_, '0');
  for (uint64_t i = 0; i < size_; ++i) {
    if (bit(i)) text[i] = '1';
  }
  return text;
}

std::vector<uint64_t> occurrences(const Word& pattern, const Word& haystack) {
  if (pattern.empty()) {
    throw std::invalid_argument("occurrences: pattern must be nonempty");
  }
  std::vector<uint64_t> positions;
  const uint64_t m = pattern.size();
  const uint64_t n = haystack.size();
  if (m > n) return positions;

  std::vector<uint64_t> failure(m, 0);
  for (uint64_t q = 1, k = 0; q < m; ++q) {
    while (k > 0 && pattern.bit(q) != pattern.bit(k)) k = failure[k - 1];
    if (pattern.bit(q) == pattern.bit(k)) ++k;
    failure[q] = k;
  }
  for (uint64_t i = 0, q = 0; i < n; ++i) {
    while (q > 0 && haystack.bit(i) != pattern.bit(q)) q = failure[q - 1];
    if (haystack.bit(i) == pattern.bit(q)) ++q;
    if (q == m) {
      positions.push_back(i + 1 - m);
      q = failure[q - 1];
    }
  }
  return positions;
}

}  // namespace chacon
