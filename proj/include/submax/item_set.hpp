#ifndef SUBMAX_ITEM_SET_HPP
#define SUBMAX_ITEM_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

// Subset of the ground set {0, ..., universe-1}, backed by 64-bit words.
// Exact membership/set algebra for any universe size; single-word fast path
// (mask64) is available when universe <= 64, which the exact oracles rely on.
class ItemSet {
 public:
  ItemSet() = default;

  explicit ItemSet(int universe) : universe_(check_universe(universe)) {
    words_.assign(word_count(universe_), 0);
  }

  static ItemSet full(int universe) {
    ItemSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  static ItemSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::length_error("ItemSet::from_mask: universe > 64");
    ItemSet s(universe);
    if (universe < 64 && (mask >> universe) != 0)
      throw std::domain_error("ItemSet::from_mask: mask has bits outside universe");
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int item) const {
    check_item(item);
    return (words_[item >> 6] >> (item & 63)) & 1ULL;
  }

  void insert(int item) {
    check_item(item);
    words_[item >> 6] |= 1ULL << (item & 63);
  }

  void remove(int item) {
    check_item(item);
    words_[item >> 6] &= ~(1ULL << (item & 63));
  }

  int count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void fill() {
    for (auto& w : words_) w = ~0ULL;
    trim();
  }

  void unite_with(const ItemSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

  void intersect_with(const ItemSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }

  // Complement relative to {0, ..., universe-1}.
  ItemSet complement() const {
    ItemSet s(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
    s.trim();
    return s;
  }

  // Smallest member >= from, or -1 when none. Iteration in ascending order.
  int next_member(int from) const {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~0ULL << (from & 63));
    while (true) {
      if (cur != 0) return (w << 6) + std::countr_zero(cur);
      if (++w >= static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = next_member(0); i >= 0; i = next_member(i + 1)) fn(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::uint64_t mask64() const {
    if (universe_ > 64) throw std::length_error("ItemSet::mask64: universe > 64");
    return words_.empty() ? 0 : words_[0];
  }

  // Hex encoding of the full bit pattern, most significant word first.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out = "0x";
    bool leading = true;
    for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w) {
      for (int nib = 15; nib >= 0; --nib) {
        int v = static_cast<int>((words_[w] >> (nib * 4)) & 0xF);
        if (leading && v == 0 && !(w == 0 && nib == 0)) continue;
        leading = false;
        out.push_back(digits[v]);
      }
    }
    if (leading) out.push_back('0');
    return out;
  }

  friend bool operator==(const ItemSet& a, const ItemSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ItemSet& a, const ItemSet& b) { return !(a == b); }

  friend ItemSet set_union(const ItemSet& a, const ItemSet& b) {
    ItemSet s = a;
    s.unite_with(b);
    return s;
  }

  friend ItemSet set_intersection(const ItemSet& a, const ItemSet& b) {
    ItemSet s = a;
    s.intersect_with(b);
    return s;
  }

  bool is_subset_of(const ItemSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

 private:
  static int check_universe(int universe) {
    if (universe < 0) throw std::invalid_argument("ItemSet: negative universe");
    return universe;
  }

  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
  }

  void check_item(int item) const {
    if (item < 0 || item >= universe_)
      throw std::domain_error("ItemSet: item " + std::to_string(item) +
                              " outside universe of size " + std::to_string(universe_));
  }

  void check_same_universe(const ItemSet& other) const {
    if (universe_ != other.universe_)
      throw std::domain_error("ItemSet: universe mismatch");
  }

  // Zero the bits above universe-1 in the top word.
  void trim() {
    int rem = universe_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (1ULL << rem) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace submax

#endif
