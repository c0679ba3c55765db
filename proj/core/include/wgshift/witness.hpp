#ifndef WGSHIFT_WITNESS_HPP
#define WGSHIFT_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wgshift/presentation.hpp"

namespace wgs {

// Definitional searches over concrete orbit segments. These never consult the
// structural classifier, so their results corroborate (or refute) it.

struct TauWitness {
  bool reached_target = false;       // found a segment with index >= target_n
  bool any_segment = false;          // at least one start carried weight
  std::uint64_t best_n = 0;          // largest segment index found
  std::optional<NodeAddress> best_start;
  std::uint64_t scanned = 0;         // start nodes examined
};

// Walks forward from every node within the enumeration radius, extending each
// segment while nodes stay distinct and (under weights) nonzero. Stops early
// at the first segment reaching target_n.
TauWitness tau_witness_search(const Presentation& p, bool use_weights,
                              std::uint64_t target_n, std::uint64_t radius);

// One walked cycle: a cycle-family member k <= k_max, or a distinct cycle of
// a finite component (k is then its 1-based ordinal, cycles ordered by least
// position). `length` is the measured first-return time and `anchor` names a
// node on the cycle. `in_lambda` holds when every node of the cycle carries an
// all-nonzero weight word along its orbit prefix of length 2*length; with
// use_weights false no weight counts as zero, so the flag is trivially true.
struct PeriodScanRow {
  NodeAddress anchor;
  std::uint64_t k = 1;
  std::uint64_t length = 0;
  bool in_lambda = false;
};

// Walks every periodic node reachable in the presentation's finite components
// plus family members up to k_max, in component order. Throws
// StateSpaceTooLarge when a single cycle exceeds the step cap.
std::vector<PeriodScanRow> period_spectrum_scan(const Presentation& p,
                                                std::uint64_t k_max,
                                                bool use_weights = true);

struct OrbitProbe {
  bool cycle_detected = false;
  std::uint64_t preperiod = 0; // steps taken before the cycle is entered
  std::uint64_t period = 0;    // cycle length when detected
  std::uint64_t steps = 0;     // distinct nodes visited
};

// Follows one orbit until it closes a cycle or max_steps nodes have been seen.
// An orbit that never closes within the cap witnesses an injective prefix.
OrbitProbe orbit_probe(const Presentation& p, const NodeAddress& start,
                       std::uint64_t max_steps);

// Does every preimage of this node carry zero weight (vacuously when there is
// no preimage)? Decided from local structure without materializing preimage
// addresses, so it also works on cycle members of astronomical length.
bool node_in_fibre_gap(const Presentation& p, const NodeAddress& a,
                       bool use_weights);

// First max_count gap nodes among the radius enumeration, in enumeration order.
std::vector<NodeAddress> fibre_gap_scan(const Presentation& p, bool use_weights,
                                        std::size_t max_count,
                                        std::uint64_t radius);

enum class LambdaProbeResult { InLambda, InUpsilon, Unresolved };

// Semi-decides full-orbit nonzero membership by walking: a zero weight settles
// it negatively, a closed all-nonzero cycle settles it positively. With
// use_weights false no weight is ever zero, so only closure can settle it.
LambdaProbeResult lambda_probe(const Presentation& p, const NodeAddress& start,
                               std::uint64_t max_steps, bool use_weights = true);

} // namespace wgs

#endif
