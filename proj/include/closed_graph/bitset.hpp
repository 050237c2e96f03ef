#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace closed_graph::detail {

// Fixed-size bitset whose size is chosen at runtime. Used for adjacency rows.
class DynamicBitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / word_bits] |= Word{1} << (i % word_bits); }
  void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  // True iff every set bit of *this with index > after is also set in other.
  bool is_subset_above(std::size_t after, const DynamicBitset &other) const noexcept {
    std::size_t first = after + 1;
    for (std::size_t w = first / word_bits; w < words_.size(); ++w) {
      Word mine = words_[w];
      if (w == first / word_bits && first % word_bits != 0)
        mine &= ~Word{0} << (first % word_bits);
      if (mine & ~other.words_[w])
        return false;
    }
    return true;
  }

  // Same as is_subset_above but restricted to indices < before.
  bool is_subset_below(std::size_t before, const DynamicBitset &other) const noexcept {
    for (std::size_t w = 0; w * word_bits < before && w < words_.size(); ++w) {
      Word mine = words_[w];
      std::size_t end = before - w * word_bits;
      if (end < word_bits)
        mine &= (Word{1} << end) - 1;
      if (mine & ~other.words_[w])
        return false;
    }
    return true;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const DynamicBitset &) const = default;
  auto operator<=>(const DynamicBitset &other) const {
    return std::lexicographical_compare_three_way(words_.begin(), words_.end(),
                                                  other.words_.begin(), other.words_.end());
  }

private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

} // namespace closed_graph::detail
