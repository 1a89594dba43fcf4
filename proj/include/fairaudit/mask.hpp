#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fairaudit {

// Fixed-length bit vector marking group membership over the sample
// population. Trailing bits of the last word are kept zero so word-wise
// population counts stay exact.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Mask ones(std::size_t n) {
    Mask m(n);
    for (auto& w : m.words_) w = ~0ull;
    m.trim();
    return m;
  }

  static Mask from_bits(const std::vector<std::uint8_t>& bits) {
    Mask m(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) m.set(i);
    return m;
  }

  static Mask singleton(std::size_t n, std::size_t i) {
    Mask m(n);
    m.set(i);
    return m;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  Mask operator&(const Mask& o) const {
    Mask m(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) m.words_[i] = words_[i] & o.words_[i];
    return m;
  }

  // this AND NOT other
  Mask and_not(const Mask& o) const {
    Mask m(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) m.words_[i] = words_[i] & ~o.words_[i];
    return m;
  }

  Mask complement() const {
    Mask m(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) m.words_[i] = ~words_[i];
    m.trim();
    return m;
  }

  std::size_t count_and(const Mask& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  template <class Fn>
  void for_each_set(Fn fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ull << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    // FNV-1a over the words plus the length
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    mix(m.size());
    for (auto w : m.words()) mix(w);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fairaudit
