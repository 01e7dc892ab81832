#ifndef MHILB_REDUCE_HPP
#define MHILB_REDUCE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

// Deterministic fixed-tree summation. The reduction shape depends only on
// the element count, never on chunking or threading, so repeated runs are
// bitwise identical. Blocks of 1024 are reduced by in-place halving; block
// sums are merged with a binary-counter pairwise tree.

namespace mhilb {

inline constexpr std::size_t kReduceBlock = 1024;

/// In-place pairwise reduction of one zero-padded block of kReduceBlock
/// doubles. Returns the block sum; clobbers the buffer.
inline double reduce_block(double* buf) {
  for (std::size_t h = kReduceBlock / 2; h >= 1; h >>= 1) {
    for (std::size_t i = 0; i < h; ++i) buf[i] += buf[i + h];
  }
  return buf[0];
}

/// Merges a stream of block sums with a pairwise tree keyed on the running
/// block count (binary-counter carry chain).
class PairwiseStream {
 public:
  void push(double block_sum) {
    double s = block_sum;
    std::uint64_t c = count_;
    int lvl = 0;
    while (c & 1u) {
      s = partial_[static_cast<std::size_t>(lvl)] + s;
      c >>= 1;
      ++lvl;
    }
    partial_[static_cast<std::size_t>(lvl)] = s;
    ++count_;
  }

  double total() const {
    double s = 0.0;
    std::uint64_t c = count_;
    for (int lvl = 0; c != 0; ++lvl, c >>= 1) {
      if (c & 1u) s = partial_[static_cast<std::size_t>(lvl)] + s;
    }
    return s;
  }

 private:
  std::array<double, 64> partial_{};
  std::uint64_t count_ = 0;
};

/// Fixed-tree sum of a contiguous range.
inline double pairwise_sum(std::span<const double> xs) {
  PairwiseStream stream;
  std::array<double, kReduceBlock> buf;
  std::size_t i = 0;
  while (i < xs.size()) {
    const std::size_t n = xs.size() - i < kReduceBlock ? xs.size() - i : kReduceBlock;
    for (std::size_t j = 0; j < n; ++j) buf[j] = xs[i + j];
    for (std::size_t j = n; j < kReduceBlock; ++j) buf[j] = 0.0;
    stream.push(reduce_block(buf.data()));
    i += n;
  }
  return stream.total();
}

} // namespace mhilb

#endif
