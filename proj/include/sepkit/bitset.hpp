#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace sepkit {

// Fixed-universe dynamic bitset. All set-valued arguments of the graph
// algorithms are instances of this; the universe is the vertex range of one
// graph, so word-parallel ops dominate the inner loops.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    for (auto& w : b.words_) w = ~uint64_t{0};
    b.trim();
    return b;
  }
  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int x : bits) b.set(x);
    return b;
  }
  static Bitset from_mask(int universe, uint64_t mask) {
    assert(universe <= 64);
    Bitset b(universe);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

  int universe() const { return n_; }

  void set(int i) { assert(i >= 0 && i < n_); words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { assert(i >= 0 && i < n_); words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { assert(i >= 0 && i < n_); return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { for (auto& w : words_) w = 0; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // -1 when empty
  int first() const { return next(-1); }
  // smallest member > i, or -1
  int next(int i) const {
    int start = i + 1;
    if (start >= n_) return -1;
    size_t wi = start >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (start & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool any_above(int i) const { return next(i) != -1; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ uint64_t(n_);
  }

private:
  void trim() {
    if (n_ & 63) words_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
    if (n_ == 0 && !words_.empty()) words_.back() = 0;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Lexicographic order on the sorted member sequences; used everywhere a
// deterministic order of vertex sets is needed.
inline bool set_less(const Bitset& a, const Bitset& b) {
  assert(a.universe() == b.universe());
  int va = a.first(), vb = b.first();
  while (va != -1 && vb != -1) {
    if (va != vb) return va < vb;
    va = a.next(va);
    vb = b.next(vb);
  }
  return vb != -1;  // a is a strict prefix of b
}

}  // namespace sepkit
