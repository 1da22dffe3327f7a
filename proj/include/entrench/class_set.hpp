#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace entrench {

/// Identifier of a semantic class: the bitmask of valuations satisfying it.
using class_id = std::uint32_t;

/// Fixed-capacity set of class ids, large enough for every class of a
/// three-atom universe (2^(2^3) = 256 classes).
class class_set {
 public:
  static constexpr std::size_t capacity = 256;

  constexpr class_set() = default;

  static class_set first(std::size_t count) {
    class_set s;
    for (std::size_t w = 0; w < words; ++w) {
      const std::size_t lo = w * 64;
      if (count >= lo + 64)
        s.bits_[w] = ~std::uint64_t{0};
      else if (count > lo)
        s.bits_[w] = (std::uint64_t{1} << (count - lo)) - 1;
    }
    return s;
  }

  bool contains(class_id c) const noexcept { return (bits_[c >> 6] >> (c & 63)) & 1U; }
  void insert(class_id c) noexcept { bits_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void erase(class_id c) noexcept { bits_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  /// Inserts and reports whether the element was new.
  bool add(class_id c) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::uint64_t& word = bits_[c >> 6];
    if (word & bit) return false;
    word |= bit;
    return true;
  }

  /// Unions `other` in and reports whether anything changed.
  bool merge(const class_set& other) noexcept {
    bool changed = false;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t next = bits_[w] | other.bits_[w];
      changed |= next != bits_[w];
      bits_[w] = next;
    }
    return changed;
  }

  bool empty() const noexcept {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool subset_of(const class_set& other) const noexcept {
    for (std::size_t w = 0; w < words; ++w)
      if (bits_[w] & ~other.bits_[w]) return false;
    return true;
  }

  bool intersects(const class_set& other) const noexcept {
    for (std::size_t w = 0; w < words; ++w)
      if (bits_[w] & other.bits_[w]) return true;
    return false;
  }

  class_set& operator|=(const class_set& o) noexcept {
    for (std::size_t w = 0; w < words; ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  class_set& operator&=(const class_set& o) noexcept {
    for (std::size_t w = 0; w < words; ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  class_set& operator-=(const class_set& o) noexcept {
    for (std::size_t w = 0; w < words; ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }

  friend class_set operator|(class_set a, const class_set& b) noexcept { return a |= b; }
  friend class_set operator&(class_set a, const class_set& b) noexcept { return a &= b; }
  friend class_set operator-(class_set a, const class_set& b) noexcept { return a -= b; }

  bool operator==(const class_set&) const = default;

  /// Calls `fn(class_id)` for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        const int bit = std::countr_zero(word);
        fn(static_cast<class_id>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::vector<class_id> to_vector() const {
    std::vector<class_id> out;
    out.reserve(size());
    for_each([&](class_id c) { out.push_back(c); });
    return out;
  }

 private:
  static constexpr std::size_t words = capacity / 64;
  std::array<std::uint64_t, words> bits_{};
};

}  // namespace entrench
