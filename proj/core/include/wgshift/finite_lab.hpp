#ifndef WGSHIFT_FINITE_LAB_HPP
#define WGSHIFT_FINITE_LAB_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "wgshift/field.hpp"
#include "wgshift/presentation.hpp"

namespace wgs {

// Weighted shift over a finite index set, small enough to enumerate the whole
// configuration space. Everything here is brute force by design: these results
// corroborate the structural classifier on the finite fragment.
struct FiniteSystem {
  FieldSpec field{2};
  std::vector<std::size_t> map;      // self-map of {0..n-1}
  std::vector<FieldElement> weights; // one per index

  std::size_t size() const { return map.size(); }
};

// Configuration count p^n. Throws StateSpaceTooLarge beyond the enumeration cap.
std::uint64_t state_count(const FiniteSystem& s);

std::vector<FieldElement> decode_state(const FiniteSystem& s, std::uint64_t code);
std::uint64_t encode_state(const FiniteSystem& s, const std::vector<FieldElement>& x);

// y_i = w_i * x_{map(i)}
std::vector<FieldElement> apply_shift(const FiniteSystem& s,
                                      const std::vector<FieldElement>& x);

// Full transition table over encoded configurations.
std::vector<std::uint32_t> transition_table(const FiniteSystem& s);

// Applying f's shift then g's shift must agree with the single shift whose map
// is map_f(map_g(i)) and whose weight at i is w_g(i) * w_f(map_g(i)).
bool check_composition_law(const FiniteSystem& f, const FiniteSystem& g);

// k-th iterate against the closed product formula, k small.
bool iterate_formula_check(const FiniteSystem& s, unsigned k);

// First (n, m) with 1 <= n < m and equal n-th and m-th transition iterates.
std::pair<std::uint64_t, std::uint64_t> quasi_period_pair(const FiniteSystem& s);

// At such a pair, every index must satisfy: the map iterates agree, or the
// weight product along the first n steps vanishes.
bool quasi_period_identity_check(const FiniteSystem& s, std::uint64_t n,
                                 std::uint64_t m);

// Exact sup of segment indices (distinct nodes, all weights nonzero), walked
// definitionally per start index.
std::uint64_t tau_sup_exhaustive(const FiniteSystem& s);

struct FibreCheck {
  std::vector<std::size_t> gap; // indices with no nonzero-weight preimage
  std::uint64_t fibre_size = 0; // common size of nonempty fibres
  bool uniform = false;         // every nonempty fibre has exactly that size
};

// Counts preimages of every configuration; nonempty fibres must all have size
// p^|gap|.
FibreCheck fibre_size_check(const FiniteSystem& s);

struct CoverResult {
  std::vector<std::uint64_t> image_sizes; // |image of k-th iterate|, k = 1,2,...
  std::vector<std::uint32_t> cover;       // the stable (surjective) core
  std::uint64_t stabilized_after = 0;     // first k with no further shrink
};

// Iterates the image until it stops shrinking; the shift is surjective on the
// result.
CoverResult surjective_cover(const FiniteSystem& s);

// Configurations in the stable core vanish at every index whose forward orbit
// meets a zero weight.
bool cover_vanishes_outside_lambda(const FiniteSystem& s, const CoverResult& c);

struct FixBijectionResult {
  std::vector<std::size_t> fixed_points;
  bool fixed_restriction_bijective = false; // x_t -> w_t x_t on fixed coords
  bool projection_bijective = false;        // core -> fixed-coordinate tuples
};

// Requires all weights nonzero and periodic indices = fixed indices; throws
// HypothesisNotMet otherwise.
FixBijectionResult fix_bijection_check(const FiniteSystem& s);

struct QuotientResult {
  std::vector<std::size_t> class_of; // index -> merge class representative
  std::size_t class_count = 0;
  bool induced_map_injective = false;
  bool periods_match = false; // periodic classes carry the original periods
};

// Quotient by the merge relation (some iterate sends both indices to the same
// node) and the induced map on classes.
QuotientResult quotient_check(const FiniteSystem& s);

// For a periodic index beta of period q, the weight product around |F|*q steps
// equals the product around q steps. Throws NotPeriodic for non-periodic beta.
bool star_identity_check(const FiniteSystem& s, std::size_t beta);

// Collapsing nonzero entries to 1 must interchange the weighted shift and the
// unweighted two-element shift. Requires all weights nonzero (HypothesisNotMet).
bool indicator_conjugacy_check(const FiniteSystem& s);

// Flattens a presentation whose components are all finite. Throws SpecMismatch
// when an infinite component is present.
FiniteSystem finite_system_from_presentation(const Presentation& p);
Presentation presentation_from_finite_system(const FiniteSystem& s);

} // namespace wgs

#endif
