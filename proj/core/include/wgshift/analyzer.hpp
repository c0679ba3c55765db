#ifndef WGSHIFT_ANALYZER_HPP
#define WGSHIFT_ANALYZER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wgshift/presentation.hpp"

namespace wgs {

enum class EntropyClass { Zero, Infinite };
enum class CsetClass { Zero, Infinite, NotFiniteFibre };

const char* to_string(EntropyClass c);
const char* to_string(CsetClass c);

// Exact supremum of injective all-nonzero orbit segment lengths, or a proof of
// unboundedness. horizon is a conservative cover radius: segments realizing the
// bounded supremum exist with every node weight pattern represented inside it.
struct TauBound {
  bool unbounded = false;
  std::uint64_t value = 0;
  std::uint64_t horizon = 0;
  std::string reason; // rule that forced unboundedness, empty when bounded
};

// Membership description for the set of nodes whose whole forward orbit
// carries nonzero weights. One rule per component.
struct LambdaDescription {
  struct RayRule {
    bool has_members = false;   // block zero-free
    std::int64_t threshold = 0; // member iff position >= threshold
  };
  struct BiRayRule {
    bool all = false; // whole component in or out
  };
  struct TailRule {
    // depth j qualifies iff j <= max_depth (no cap when unset); the tail node
    // is a member iff its depth qualifies and the attachment target is one
    std::optional<std::uint64_t> max_depth;
  };
  struct FamilyRule {
    // member k in iff its length fits before the first weight zero
    std::optional<std::uint64_t> first_word_zero;
  };
  struct FiniteRule {
    std::vector<bool> in_lambda;
  };
  using Rule = std::variant<RayRule, BiRayRule, TailRule, FamilyRule, FiniteRule>;

  std::vector<Rule> per_component; // parallel to presentation components

  bool in_lambda(const Presentation& p, const NodeAddress& a) const;
};

LambdaDescription compute_lambda(const Presentation& p, bool use_weights);

// The set of nodes every preimage of which carries weight zero (no preimage
// counts as covered vacuously). The shift has finite fibres iff this is finite.
struct FibreGapSummary {
  bool finite = true;
  std::vector<NodeAddress> members;          // exact set when finite, sorted
  std::vector<std::string> infinite_reasons; // offending components otherwise
};

FibreGapSummary is_finite_fibre(const Presentation& p, bool use_weights);

TauBound tau_sup(const Presentation& p, bool use_weights);
EntropyClass ent_set_class(const Presentation& p, bool use_weights);
CsetClass ent_cset_class(const Presentation& p, bool use_weights);

// Predicate indices into EntropyReport::predicates.
enum Predicate : std::size_t {
  PI1 = 0, // unweighted set entropy zero
  PI2 = 1, // unweighted set entropy infinite
  PI3 = 2, // weighted set entropy zero
  PI4 = 3, // weighted set entropy infinite
  RHO1 = 4, // unweighted cset entropy zero
  RHO2 = 5, // unweighted cset entropy infinite
  RHO3 = 6, // weighted cset entropy zero
  RHO4 = 7, // weighted cset entropy infinite
};

struct EntropyReport {
  bool finite_fibre_weighted = false;
  bool finite_fibre_unweighted = false;
  EntropyClass ent_set_weighted = EntropyClass::Zero;
  EntropyClass ent_set_unweighted = EntropyClass::Zero;
  CsetClass ent_cset_weighted = CsetClass::Zero;
  CsetClass ent_cset_unweighted = CsetClass::Zero;
  TauBound tau; // weighted map
  // pi1..pi4 always set; rho entries unset when the matching cset class is
  // NotFiniteFibre
  std::array<std::optional<bool>, 8> predicates;
};

// Full classification. Throws InternalInconsistency if the computed classes
// contradict the finite-fibre transfer law (finite fibres force equal weighted
// and unweighted set entropy classes).
EntropyReport predicate_vector(const Presentation& p);

// Names of violated implications (empty when the table holds). Requires
// finite_fibre_weighted; throws HypothesisNotMet otherwise.
std::vector<std::string> implication_check(const EntropyReport& r);

} // namespace wgs

#endif
