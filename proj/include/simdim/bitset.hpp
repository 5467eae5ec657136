#ifndef SIMDIM_BITSET_HPP
#define SIMDIM_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace simdim {

// Dynamic bitset over 64-bit words. Sized at construction; all binary
// operations require equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { words_[i >> 6] |= word_bit(i); }
  void reset(int i) { words_[i >> 6] &= ~word_bit(i); }
  bool test(int i) const { return (words_[i >> 6] & word_bit(i)) != 0; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void set_all() {
    for (auto& w : words_) w = ~0ULL;
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(64 * i + std::countr_zero(words_[i]));
    return -1;
  }

  // First set index strictly greater than i, or -1.
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~0ULL << (i & 63));
    while (true) {
      if (w) return static_cast<int>(64 * wi + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not_assign(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(*this);
    r &= o;
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(*this);
    r |= o;
    return r;
  }
  Bitset and_not(const Bitset& o) const {
    Bitset r(*this);
    r.and_not_assign(o);
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
    return v;
  }

  static Bitset of(int n, const std::vector<int>& idx) {
    Bitset b(n);
    for (int i : idx) b.set(i);
    return b;
  }

 private:
  static std::uint64_t word_bit(int i) { return 1ULL << (i & 63); }
  void trim() {
    if (words_.empty()) return;
    int r = n_ & 63;
    if (r) words_.back() &= (1ULL << r) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace simdim

#endif
