#ifndef FCA_BITSET_HPP
#define FCA_BITSET_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fca {

/**
 * Fixed-universe dynamic bitset used for object and attribute sets.
 *
 * The universe size is chosen at construction and never changes. Bits past
 * the universe in the last word are kept at zero so that word-wise
 * comparisons, hashing and popcounts stay exact.
 */
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  Bitset() = default;

  explicit Bitset(std::size_t universe, bool full = false)
      : size_(universe), words_(word_count(universe), full ? ~Word{0} : Word{0}) {
    trim();
  }

  Bitset(std::size_t universe, std::initializer_list<std::size_t> members)
      : Bitset(universe) {
    for (auto i : members)
      set(i);
  }

  static Bitset from_indices(std::size_t universe, const std::vector<std::size_t>& members) {
    Bitset b(universe);
    for (auto i : members)
      b.set(i);
    return b;
  }

  std::size_t universe() const noexcept { return size_; }

  void set(std::size_t i) { words_[i / bits_per_word] |= bit(i); }
  void reset(std::size_t i) { words_[i / bits_per_word] &= ~bit(i); }
  bool test(std::size_t i) const { return (words_[i / bits_per_word] & bit(i)) != 0; }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool full() const noexcept { return count() == size_; }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  /// Set difference: removes every member of `o`.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_)
      w = ~w;
    r.trim();
    return r;
  }

  bool is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0)
        return false;
    return true;
  }

  bool is_proper_subset_of(const Bitset& o) const noexcept {
    return is_subset_of(o) && *this != o;
  }

  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0)
        return true;
    return false;
  }

  /// Members strictly below `i`.
  Bitset prefix(std::size_t i) const {
    Bitset r(size_);
    const std::size_t full_words = i / bits_per_word;
    for (std::size_t w = 0; w < full_words; ++w)
      r.words_[w] = words_[w];
    if (i % bits_per_word != 0)
      r.words_[full_words] = words_[full_words] & (bit(i) - 1);
    return r;
  }

  /// Calls `fn(index)` for each member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto tz = static_cast<std::size_t>(std::countr_zero(word));
        fn(w * bits_per_word + tz);
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_)
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Lexicographic comparison of the sorted member lists.
  friend std::strong_ordering lex_compare(const Bitset& a, const Bitset& b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
  }

private:
  static std::size_t word_count(std::size_t n) { return (n + bits_per_word - 1) / bits_per_word; }
  static Word bit(std::size_t i) { return Word{1} << (i % bits_per_word); }

  void trim() {
    if (size_ % bits_per_word != 0 && !words_.empty())
      words_.back() &= bit(size_) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace fca

#endif  // FCA_BITSET_HPP
