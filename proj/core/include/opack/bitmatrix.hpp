#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace opack {

// Square boolean matrix backed by 64-bit rows. Used for adjacency and for
// the per-direction edge-state sets of the search information.
class BitMatrix {
 public:
  BitMatrix() : n_(0), words_(0) {}
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_((size_t)n * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  bool test(int r, int c) const {
    return (bits_[(size_t)r * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c) { bits_[(size_t)r * words_ + (c >> 6)] |= 1ull << (c & 63); }
  void reset(int r, int c) { bits_[(size_t)r * words_ + (c >> 6)] &= ~(1ull << (c & 63)); }

  const std::uint64_t* row(int r) const { return bits_.data() + (size_t)r * words_; }
  std::uint64_t* row(int r) { return bits_.data() + (size_t)r * words_; }

  int count_row(int r) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(row(r)[w]);
    return c;
  }

  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  // Calls fn(col) for every set bit of `word_row & mask_fn(word)`.
  template <typename Fn>
  void for_each_in_row(int r, Fn&& fn) const {
    const std::uint64_t* w = row(r);
    for (int i = 0; i < words_; ++i) {
      std::uint64_t word = w[i];
      while (word) {
        int bit = __builtin_ctzll(word);
        fn(i * 64 + bit);
        word &= word - 1;
      }
    }
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

// Iterates the set bits of an ANDed/negated combination of up to three rows.
template <typename Fn>
inline void for_each_bit(const std::uint64_t* a, int words, Fn&& fn) {
  for (int i = 0; i < words; ++i) {
    std::uint64_t word = a[i];
    while (word) {
      int bit = __builtin_ctzll(word);
      fn(i * 64 + bit);
      word &= word - 1;
    }
  }
}

}  // namespace opack
