#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lendens/factorization.hpp"

namespace lendens::detail {

/// Bitset of achievable lengths in [lo, hi]; bit k stands for length lo + k.
struct LengthRow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<std::uint64_t> words;

  LengthRow() = default;
  LengthRow(std::int64_t lo_, std::int64_t hi_)
      : lo(lo_), hi(hi_), words(static_cast<std::size_t>((hi_ - lo_) / 64 + 1), 0) {}

  bool empty() const { return hi < lo; }

  void set(std::int64_t length) {
    auto k = static_cast<std::uint64_t>(length - lo);
    words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  /// this |= src shifted up by `step` lengths. Requires src.lo + step >= lo
  /// and src.hi + step <= hi.
  void or_shifted(const LengthRow& src, std::int64_t step) {
    auto shift = static_cast<std::uint64_t>(src.lo + step - lo);
    std::size_t word_shift = shift >> 6;
    unsigned bit_shift = shift & 63;
    for (std::size_t i = 0; i < src.words.size(); ++i) {
      std::uint64_t w = src.words[i];
      if (w == 0) continue;
      words[i + word_shift] |= w << bit_shift;
      if (bit_shift != 0 && i + word_shift + 1 < words.size()) {
        words[i + word_shift + 1] |= w >> (64 - bit_shift);
      }
    }
  }

  LengthSet to_length_set() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::uint64_t w = words[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(lo + static_cast<std::int64_t>(i * 64 + b));
        w &= w - 1;
      }
    }
    return LengthSet::from_values(std::move(out));
  }
};

}  // namespace lendens::detail
