#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace circflow {

/// Subset of the vertex ids 0..n-1. Bitset-backed; cardinality is cached so
/// count() is O(1). Word 0 holds vertices 0..63 with vertex v at bit v % 64,
/// so for n <= 64 the numeric value of word 0 is the subset's bitmask.
class VertexSet {
public:
  VertexSet() : n_(0), count_(0) {}
  explicit VertexSet(int n) : n_(n), count_(0), words_((n + 63) / 64, 0) {}

  /// Builds from a machine-word bitmask (vertex v = bit v); n <= 64 only.
  static VertexSet from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("VertexSet::from_mask: n > 64");
    VertexSet s(n);
    if (n > 0) {
      s.words_[0] = (n == 64) ? mask : (mask & ((std::uint64_t{1} << n) - 1));
      s.count_ = __builtin_popcountll(s.words_[0]);
    }
    return s;
  }

  int universe_size() const { return n_; }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(int v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(int v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
      if (!contains(v)) s.insert(v);
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("VertexSet::mask: n > 64");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  /// Numeric-bitmask order (vertex 0 = least significant bit). Used as the
  /// deterministic tie-break when a scan returns one witness among many.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int i = static_cast<int>(std::max(a.words_.size(), b.words_.size())) - 1; i >= 0; --i) {
      const std::uint64_t wa = i < static_cast<int>(a.words_.size()) ? a.words_[i] : 0;
      const std::uint64_t wb = i < static_cast<int>(b.words_.size()) ? b.words_[i] : 0;
      if (wa != wb) return wa < wb;
    }
    return false;
  }

private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex id out of range");
  }

  int n_;
  int count_;
  std::vector<std::uint64_t> words_;
};

}  // namespace circflow
