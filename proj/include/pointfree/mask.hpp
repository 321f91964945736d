#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pointfree {

// Fixed-width bit set over the elements 0..width-1 of a poset, frame carrier,
// tree node set or branch set. All set algebra in the library runs on these.
class Mask {
 public:
  Mask() = default;
  explicit Mask(int width) : width_(width), w_((width + 63) / 64, 0) {}

  static Mask full(int width) {
    Mask m(width);
    for (int i = 0; i < width; ++i) m.set(i);
    return m;
  }
  static Mask singleton(int width, int bit) {
    Mask m(width);
    m.set(bit);
    return m;
  }

  int width() const { return width_; }

  bool test(int i) const {
    assert(i >= 0 && i < width_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < width_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < width_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Lowest set bit, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  int next(int after) const {
    for (int i = after + 1; i < width_; ++i)
      if (test(i)) return i;
    return -1;
  }

  Mask operator&(const Mask& o) const {
    Mask r = *this;
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  Mask operator|(const Mask& o) const {
    Mask r = *this;
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] |= o.w_[k];
    return r;
  }
  // set difference
  Mask operator-(const Mask& o) const {
    Mask r = *this;
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
    return r;
  }
  Mask& operator&=(const Mask& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Mask& operator|=(const Mask& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Mask complement() const {
    Mask r = full(width_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~w_[k];
    return r;
  }

  bool subset_of(const Mask& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Mask& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Mask& o) const { return width_ == o.width_ && w_ == o.w_; }
  bool operator!=(const Mask& o) const { return !(*this == o); }

  // Canonical order: numeric value, low index = low bit. Families sorted by
  // this order are the library's canonical orderings.
  bool operator<(const Mask& o) const {
    assert(width_ == o.width_);
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= size_t(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    for (int i = first(); i != -1; i = next(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(width_);
    for (int i = 0; i < width_; ++i) s.push_back(test(i) ? '1' : '0');
    return s;
  }

 private:
  int width_ = 0;
  std::vector<uint64_t> w_;
};

struct MaskHash {
  size_t operator()(const Mask& m) const { return m.hash(); }
};

}  // namespace pointfree
