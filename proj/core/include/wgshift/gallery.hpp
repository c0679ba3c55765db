#ifndef WGSHIFT_GALLERY_HPP
#define WGSHIFT_GALLERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgshift/analyzer.hpp"
#include "wgshift/finite_lab.hpp"
#include "wgshift/presentation.hpp"

namespace wgs {

// Pinned classification values an entry must reproduce. Unset fields are not
// checked.
struct ExpectedFragment {
  std::optional<bool> finite_fibre_weighted;
  std::optional<bool> finite_fibre_unweighted;
  std::optional<EntropyClass> ent_set_weighted;
  std::optional<EntropyClass> ent_set_unweighted;
  std::optional<CsetClass> ent_cset_weighted;
  std::optional<CsetClass> ent_cset_unweighted;
  std::optional<bool> tau_unbounded;
  std::optional<std::uint64_t> tau_value; // only checked when bounded
};

struct GalleryEntry {
  std::string name;
  std::string summary;
  Presentation presentation;
  ExpectedFragment expected;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* find_entry(const std::string& name);

// Empty result means every pinned field matches; otherwise one line per miss.
std::vector<std::string> fragment_mismatches(const ExpectedFragment& e,
                                             const EntropyReport& r);

// Deterministic generator over the whole presentation class. Output always
// validates. Larger budgets allow more and bigger components.
Presentation random_presentation(std::uint64_t seed, std::uint64_t budget);

// Deterministic small weighted shift on at most max_indices indices.
FiniteSystem random_finite_system(std::uint64_t seed, std::uint32_t p,
                                  std::size_t max_indices);

} // namespace wgs

#endif
