#include "wgshift/word.hpp"

#include <algorithm>

namespace wgs {

FieldElement EventuallyPeriodicWord::at(std::uint64_t i) const {
  if (i < prefix.size()) return prefix[i];
  return block[(i - prefix.size()) % block.size()];
}

bool EventuallyPeriodicWord::operator==(const EventuallyPeriodicWord& o) const {
  return prefix == o.prefix && block == o.block;
}

ZeroPattern::ZeroPattern(const EventuallyPeriodicWord& w, bool ignore_zeros)
    : prefix_len_(w.prefix.size()), block_len_(w.block.size()) {
  if (block_len_ == 0) block_len_ = 1; // degenerate guard; validation rejects this earlier
  if (ignore_zeros) return;
  for (std::uint64_t i = 0; i < w.prefix.size(); ++i) {
    if (w.prefix[i].is_zero()) prefix_zeros_.push_back(i);
  }
  for (std::uint64_t j = 0; j < w.block.size(); ++j) {
    if (w.block[j].is_zero()) block_zeros_.push_back(j);
  }
}

ZeroPattern trivial_pattern() {
  EventuallyPeriodicWord w;
  w.block.push_back(FieldElement(FieldSpec(2), 1));
  return ZeroPattern(w, true);
}

bool ZeroPattern::is_zero_at(std::uint64_t i) const {
  if (i < prefix_len_) {
    return std::binary_search(prefix_zeros_.begin(), prefix_zeros_.end(), i);
  }
  std::uint64_t off = (i - prefix_len_) % block_len_;
  return std::binary_search(block_zeros_.begin(), block_zeros_.end(), off);
}

std::optional<std::uint64_t> ZeroPattern::first_zero() const {
  if (!prefix_zeros_.empty()) return prefix_zeros_.front();
  if (!block_zeros_.empty()) return prefix_len_ + block_zeros_.front();
  return std::nullopt;
}

std::optional<std::uint64_t> ZeroPattern::next_zero(std::uint64_t i) const {
  if (i < prefix_len_) {
    auto it = std::lower_bound(prefix_zeros_.begin(), prefix_zeros_.end(), i);
    if (it != prefix_zeros_.end()) return *it;
    if (!block_zeros_.empty()) return prefix_len_ + block_zeros_.front();
    return std::nullopt;
  }
  if (block_zeros_.empty()) return std::nullopt;
  std::uint64_t off = (i - prefix_len_) % block_len_;
  auto it = std::lower_bound(block_zeros_.begin(), block_zeros_.end(), off);
  if (it != block_zeros_.end()) return i + (*it - off);
  return i + (block_len_ - off) + block_zeros_.front();
}

std::optional<std::uint64_t> ZeroPattern::run_from(std::uint64_t i) const {
  auto nz = next_zero(i);
  if (!nz) return std::nullopt;
  return *nz - i;
}

std::optional<std::uint64_t> ZeroPattern::max_nonzero_run() const {
  if (block_zeros_.empty()) return std::nullopt;
  // Every maximal run of the word terminates at a zero before prefix + 3 blocks:
  // prefix runs do trivially, the prefix/block straddling run meets a block zero
  // within one block, and pure block-region runs are shorter than one block.
  std::uint64_t window = prefix_len_ + 3 * block_len_;
  std::uint64_t best = 0, run = 0;
  for (std::uint64_t i = 0; i < window; ++i) {
    if (is_zero_at(i)) {
      best = std::max(best, run);
      run = 0;
    } else {
      ++run;
    }
  }
  return best;
}

bool ZeroPattern::zero_in_range(std::uint64_t len) const {
  auto fz = first_zero();
  return fz.has_value() && *fz < len;
}

std::uint64_t ZeroPattern::suffix_run(std::uint64_t len, std::uint64_t len_mod_block) const {
  if (len == 0) return 0;
  std::uint64_t last = len - 1;
  if (last < prefix_len_ || len <= prefix_len_) {
    std::uint64_t run = 0;
    for (std::uint64_t i = len; i-- > 0;) {
      if (is_zero_at(i)) break;
      ++run;
    }
    return run;
  }
  // last = len-1 sits in the block region at offset o.
  std::uint64_t o = (len_mod_block + block_len_ - ((prefix_len_ + 1) % block_len_)) % block_len_;
  std::uint64_t into_block = last - prefix_len_; // >= 0, may be saturated-large
  if (!block_zeros_.empty()) {
    auto it = std::upper_bound(block_zeros_.begin(), block_zeros_.end(), o);
    if (it != block_zeros_.begin()) {
      return o - *std::prev(it);
    }
    if (into_block >= block_len_) {
      // previous full block exists; its last zero bounds the run
      return o + 1 + (block_len_ - 1 - block_zeros_.back());
    }
  }
  // no block zero available below last; run extends through the prefix
  std::uint64_t run = into_block + 1;
  for (std::uint64_t i = prefix_len_; i-- > 0;) {
    if (is_zero_at(i)) return run;
    ++run;
  }
  return run; // == len when the whole truncation is nonzero
}

std::uint64_t ZeroPattern::circular_max_run(std::uint64_t len,
                                            std::uint64_t len_mod_block) const {
  if (len == 0) return 0;
  if (!zero_in_range(len)) return len;
  std::uint64_t small = prefix_len_ + 4 * block_len_ + 64;
  if (len <= small) {
    // direct circular scan of the truncation
    std::uint64_t best = 0, run = 0;
    for (std::uint64_t pass = 0; pass < 2; ++pass) {
      for (std::uint64_t i = 0; i < len; ++i) {
        if (is_zero_at(i)) {
          best = std::max(best, run);
          run = 0;
        } else {
          ++run;
          if (run >= len) return len; // cannot happen: a zero exists
        }
      }
    }
    return std::max(best, std::min(run, len));
  }
  std::uint64_t head = *first_zero(); // leading nonzero count; < len here
  std::uint64_t wrap = suffix_run(len, len_mod_block) + head;
  std::uint64_t interior;
  if (!block_zeros_.empty()) {
    interior = *max_nonzero_run();
  } else {
    // zeros only in the prefix; complete interior runs end at prefix zeros
    interior = 0;
    std::uint64_t run = 0;
    for (std::uint64_t i = 0; i < prefix_len_; ++i) {
      if (is_zero_at(i)) {
        interior = std::max(interior, run);
        run = 0;
      } else {
        ++run;
      }
    }
  }
  return std::max(interior, std::min(wrap, len));
}

std::uint64_t ZeroPattern::circular_run_from(std::uint64_t len, std::uint64_t len_mod_block,
                                             std::uint64_t i) const {
  if (len == 0 || i >= len) return 0;
  if (!zero_in_range(len)) return len;
  auto nz = next_zero(i);
  if (nz.has_value() && *nz < len) return *nz - i;
  std::uint64_t head = *first_zero(); // <= i here, else next_zero(i) would be < len
  (void)len_mod_block;
  return (len - i) + head;
}

} // namespace wgs
