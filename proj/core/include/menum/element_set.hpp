#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace menum {

/// A set of ground-set elements (dense non-negative ids), stored as a bitset.
/// Two words live inline, which covers every ground set this library meets;
/// larger universes spill to the heap transparently.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet full(std::size_t n) {
    ElementSet s;
    for (std::size_t e = 0; e < n; ++e) s.set(e);
    return s;
  }

  static ElementSet of(std::initializer_list<int> ids) {
    ElementSet s;
    for (int e : ids) s.set(static_cast<std::size_t>(e));
    return s;
  }

  static ElementSet from_ids(std::span<const int> ids) {
    ElementSet s;
    for (int e : ids) s.set(static_cast<std::size_t>(e));
    return s;
  }

  bool test(std::size_t e) const {
    const std::size_t w = e >> 6;
    if (w >= nwords_) return false;
    return (word(w) >> (e & 63)) & 1u;
  }

  void set(std::size_t e) {
    const std::size_t w = e >> 6;
    ensure(w + 1);
    mutable_word(w) |= std::uint64_t{1} << (e & 63);
  }

  void reset(std::size_t e) {
    const std::size_t w = e >> 6;
    if (w < nwords_) mutable_word(w) &= ~(std::uint64_t{1} << (e & 63));
  }

  void flip(std::size_t e) {
    const std::size_t w = e >> 6;
    ensure(w + 1);
    mutable_word(w) ^= std::uint64_t{1} << (e & 63);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < nwords_; ++w) c += static_cast<std::size_t>(std::popcount(word(w)));
    return c;
  }

  bool empty() const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if (word(w) != 0) return false;
    return true;
  }

  /// Superset test: does *this contain every element of other?
  bool contains(const ElementSet& other) const {
    for (std::size_t w = 0; w < other.nwords_; ++w)
      if ((other.word(w) & ~word_or_zero(w)) != 0) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    const std::size_t m = std::min(nwords_, other.nwords_);
    for (std::size_t w = 0; w < m; ++w)
      if ((word(w) & other.word(w)) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    ensure(o.nwords_);
    for (std::size_t w = 0; w < o.nwords_; ++w) mutable_word(w) |= o.word(w);
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < nwords_; ++w) mutable_word(w) &= o.word_or_zero(w);
    return *this;
  }

  ElementSet& operator-=(const ElementSet& o) {
    const std::size_t m = std::min(nwords_, o.nwords_);
    for (std::size_t w = 0; w < m; ++w) mutable_word(w) &= ~o.word(w);
    return *this;
  }

  ElementSet& operator^=(const ElementSet& o) {
    ensure(o.nwords_);
    for (std::size_t w = 0; w < o.nwords_; ++w) mutable_word(w) ^= o.word(w);
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    const std::size_t m = std::max(a.nwords_, b.nwords_);
    for (std::size_t w = 0; w < m; ++w)
      if (a.word_or_zero(w) != b.word_or_zero(w)) return false;
    return true;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  ElementSet with(std::size_t e) const {
    ElementSet s = *this;
    s.set(e);
    return s;
  }

  ElementSet without(std::size_t e) const {
    ElementSet s = *this;
    s.reset(e);
    return s;
  }

  /// Smallest element, or -1 when empty.
  int first() const { return next(-1); }

  /// Smallest element strictly greater than `after`, or -1.
  int next(int after) const {
    std::size_t w = after < 0 ? 0 : static_cast<std::size_t>(after + 1) >> 6;
    if (w >= nwords_) return -1;
    std::uint64_t bits = word(w);
    if (after >= 0 && static_cast<std::size_t>(after + 1) >> 6 == w) {
      const unsigned off = static_cast<unsigned>(after + 1) & 63u;
      bits &= off == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} << off);
    }
    for (;;) {
      if (bits != 0) return static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
      if (++w >= nwords_) return -1;
      bits = word(w);
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < nwords_; ++w) {
      std::uint64_t bits = word(w);
      while (bits != 0) {
        f(static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_el = true;
    for_each([&](int e) {
      if (!first_el) out += ',';
      out += std::to_string(e);
      first_el = false;
    });
    out += '}';
    return out;
  }

 private:
  static constexpr std::size_t kInlineWords = 2;

  std::uint64_t word(std::size_t w) const { return w < kInlineWords ? inline_[w] : heap_[w - kInlineWords]; }
  std::uint64_t word_or_zero(std::size_t w) const { return w < nwords_ ? word(w) : 0; }
  std::uint64_t& mutable_word(std::size_t w) { return w < kInlineWords ? inline_[w] : heap_[w - kInlineWords]; }

  void ensure(std::size_t words) {
    if (words <= nwords_) return;
    if (words > kInlineWords) heap_.resize(words - kInlineWords, 0);
    nwords_ = words;
  }

  std::size_t nwords_ = 0;
  std::array<std::uint64_t, kInlineWords> inline_{};
  std::vector<std::uint64_t> heap_;
};

/// Order by the sorted id sequence; canonical order for solution lists.
inline bool lexicographic_less(const ElementSet& a, const ElementSet& b) {
  int x = a.first(), y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;
}

inline void sort_solutions(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), lexicographic_less);
}

}  // namespace menum
