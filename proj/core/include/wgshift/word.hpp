#ifndef WGSHIFT_WORD_HPP
#define WGSHIFT_WORD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wgshift/field.hpp"

namespace wgs {

// One-sided infinite weight sequence in lasso form: prefix then repeating block.
// Position i carries prefix[i] for i < |prefix| and block[(i - |prefix|) mod |block|] after.
struct EventuallyPeriodicWord {
  std::vector<FieldElement> prefix;
  std::vector<FieldElement> block; // never empty in a valid presentation

  FieldElement at(std::uint64_t i) const;
  bool operator==(const EventuallyPeriodicWord& o) const;
};

// Zero/nonzero structure of a word. All run lengths count positions.
// An `ignore_zeros` pattern (used for unweighted analysis) reports no zeros at all.
class ZeroPattern {
public:
  explicit ZeroPattern(const EventuallyPeriodicWord& w, bool ignore_zeros = false);

  std::uint64_t prefix_len() const { return prefix_len_; }
  std::uint64_t block_len() const { return block_len_; }

  bool is_zero_at(std::uint64_t i) const;
  bool block_zero_free() const { return block_zeros_.empty(); }
  bool zero_free() const { return prefix_zeros_.empty() && block_zeros_.empty(); }

  // Least zero position, if any.
  std::optional<std::uint64_t> first_zero() const;
  // Least zero position >= i, if any.
  std::optional<std::uint64_t> next_zero(std::uint64_t i) const;
  // Number of consecutive nonzero positions starting at i; nullopt when infinite.
  std::optional<std::uint64_t> run_from(std::uint64_t i) const;
  // Longest all-nonzero interval anywhere in the word; nullopt when the block
  // is zero-free (the tail of the word is then one infinite run).
  std::optional<std::uint64_t> max_nonzero_run() const;
  // Any zero at a position < len? len may be saturated; pass the exact residue.
  bool zero_in_range(std::uint64_t len) const;

  // Trailing nonzero count of the truncation to [0, len).
  // len_mod_block must equal the true len modulo block_len (len itself may be
  // a saturated approximation of an astronomically large cycle length).
  std::uint64_t suffix_run(std::uint64_t len, std::uint64_t len_mod_block) const;
  // Longest nonzero run on [0, len) read circularly (wrap len-1 -> 0). Exact.
  std::uint64_t circular_max_run(std::uint64_t len, std::uint64_t len_mod_block) const;
  // Nonzero run starting at position i inside the circular truncation [0, len).
  std::uint64_t circular_run_from(std::uint64_t len, std::uint64_t len_mod_block,
                                  std::uint64_t i) const;

private:
  std::uint64_t prefix_len_;
  std::uint64_t block_len_;
  std::vector<std::uint64_t> prefix_zeros_; // sorted positions < prefix_len
  std::vector<std::uint64_t> block_zeros_;  // sorted offsets < block_len
};

// Pattern with block length 1 and no zeros; stand-in for all-ones weights.
ZeroPattern trivial_pattern();

} // namespace wgs

#endif
