#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gsp {

// Subset of the vertex range 0..n-1 of an owning graph. Single 64-bit word
// when n <= 64, word blocks above that.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), blocks_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  static VertexSet from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("VertexSet::from_mask: n > 64");
    VertexSet s(n);
    if (n < 64 && (mask >> n) != 0)
      throw std::invalid_argument("VertexSet::from_mask: bits outside range");
    if (!s.blocks_.empty()) s.blocks_[0] = mask;
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  int size() const {
    int c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }

  bool empty() const { return size() == 0; }
  bool full() const { return size() == n_; }

  bool contains(int v) const {
    check(v);
    return (blocks_[v >> 6] >> (v & 63)) & 1;
  }

  void add(int v) {
    check(v);
    blocks_[v >> 6] |= std::uint64_t(1) << (v & 63);
  }

  void remove(int v) {
    check(v);
    blocks_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }

  // Only meaningful for n <= 64.
  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("VertexSet::mask: universe exceeds 64");
    return blocks_.empty() ? 0 : blocks_[0];
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
    int spare = static_cast<int>(blocks_.size()) * 64 - n_;
    if (spare > 0 && !s.blocks_.empty()) s.blocks_.back() &= ~std::uint64_t(0) >> spare;
    return s;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex outside universe");
  }

  int n_;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace gsp
