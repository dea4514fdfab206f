#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mirror {

// Fixed-length bit vector used for hypercube coordinates and flip masks.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int length)
      : length_(length), words_(static_cast<std::size_t>((length + 63) / 64), 0) {}

  int size() const { return length_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U;
  }
  void set(int i, bool value = true) {
    auto& w = words_[static_cast<std::size_t>(i) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  // Complement within the first size() bits.
  BitVec complement() const {
    BitVec out(*this);
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  friend int hamming(const BitVec& a, const BitVec& b) {
    int c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) c += std::popcount(a.words_[w] ^ b.words_[w]);
    return c;
  }

  // Character j is bit j.
  std::string to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
      if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }
  static BitVec from_string(const std::string& s);  // throws std::invalid_argument

  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(length_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void clear_tail() {
    if (length_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  }

  int length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace mirror
