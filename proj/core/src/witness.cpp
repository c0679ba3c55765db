#include "wgshift/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wgshift/errors.hpp"
#include "wgshift/word.hpp"

namespace wgs {

namespace {

constexpr std::uint64_t STEP_CAP = std::uint64_t{1} << 22;

bool weight_is_zero(const Presentation& p, const NodeAddress& a, bool use_weights) {
  if (!use_weights) return false;
  return eval_weight(p, a).is_zero();
}

} // namespace

TauWitness tau_witness_search(const Presentation& p, bool use_weights,
                              std::uint64_t target_n, std::uint64_t radius) {
  TauWitness out;
  for (const NodeAddress& start : enumerate_nodes(p, radius)) {
    ++out.scanned;
    std::set<NodeAddress> visited;
    NodeAddress cur = start;
    std::uint64_t nodes = 0;
    while (nodes <= target_n) {
      if (weight_is_zero(p, cur, use_weights)) break;
      if (!visited.insert(cur).second) break;
      ++nodes;
      cur = eval_phi(p, cur);
    }
    if (nodes == 0) continue;
    out.any_segment = true;
    if (nodes - 1 > out.best_n || !out.best_start) {
      out.best_n = nodes - 1;
      out.best_start = start;
    }
    if (out.best_n >= target_n) {
      out.reached_target = true;
      return out;
    }
  }
  return out;
}

namespace {

// Does every node of the first `steps` orbit nodes from `a` carry weight?
bool prefix_zero_free(const Presentation& p, NodeAddress a, std::uint64_t steps,
                      bool use_weights) {
  for (std::uint64_t s = 0; s < steps; ++s) {
    if (weight_is_zero(p, a, use_weights)) return false;
    a = eval_phi(p, a);
  }
  return true;
}

// Full-weight test for a walked cycle: each of its `len` nodes must carry an
// all-nonzero orbit prefix of length 2*len. Past the quadratic budget one
// sweep decides the same thing, because a cycle node's orbit never leaves the
// cycle: all prefixes are zero-free exactly when the whole cycle is.
bool cycle_in_lambda(const Presentation& p, const NodeAddress& anchor,
                     std::uint64_t len, bool use_weights) {
  if (!use_weights) return true;
  constexpr std::uint64_t QUADRATIC_BUDGET = 1024;
  if (len > QUADRATIC_BUDGET) return prefix_zero_free(p, anchor, len, true);
  NodeAddress node = anchor;
  for (std::uint64_t i = 0; i < len; ++i) {
    if (!prefix_zero_free(p, node, 2 * len, true)) return false;
    node = eval_phi(p, node);
  }
  return true;
}

} // namespace

std::vector<PeriodScanRow> period_spectrum_scan(const Presentation& p,
                                                std::uint64_t k_max,
                                                bool use_weights) {
  std::vector<PeriodScanRow> rows;
  for (const Component& c : p.components) {
    if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) {
      std::map<std::size_t, std::uint64_t> cycles; // least position -> length
      for (std::size_t i = 0; i < f->map.size(); ++i) {
        std::size_t cur = i;
        for (std::size_t s = 0; s < f->map.size(); ++s) cur = f->map[cur];
        // cur now sits on a cycle; measure it and record its least position
        std::size_t least = cur;
        std::size_t walk = cur;
        std::uint64_t len = 0;
        do {
          least = std::min(least, walk);
          walk = f->map[walk];
          ++len;
        } while (walk != cur);
        cycles.emplace(least, len);
      }
      std::uint64_t ordinal = 0;
      for (const auto& [pos, len] : cycles) {
        NodeAddress anchor{c.id, 1, static_cast<std::int64_t>(pos)};
        rows.push_back({anchor, ++ordinal, len,
                        cycle_in_lambda(p, anchor, len, use_weights)});
      }
    } else if (std::holds_alternative<CycleFamilyComponent>(c.kind)) {
      for (std::uint64_t k = 1; k <= k_max; ++k) {
        NodeAddress anchor{c.id, k, 0};
        NodeAddress cur = anchor;
        std::uint64_t len = 0;
        do {
          cur = eval_phi(p, cur);
          ++len;
          if (len > STEP_CAP)
            throw Error(ErrorCode::StateSpaceTooLarge,
                        "cycle walk exceeds step cap in " + c.id);
        } while (!(cur == anchor));
        rows.push_back({anchor, k, len,
                        cycle_in_lambda(p, anchor, len, use_weights)});
      }
    }
  }
  return rows;
}

OrbitProbe orbit_probe(const Presentation& p, const NodeAddress& start,
                       std::uint64_t max_steps) {
  OrbitProbe out;
  std::map<NodeAddress, std::uint64_t> first_seen;
  NodeAddress cur = start;
  while (out.steps < max_steps) {
    auto [it, fresh] = first_seen.emplace(cur, out.steps);
    if (!fresh) {
      out.cycle_detected = true;
      out.preperiod = it->second;
      out.period = out.steps - it->second;
      return out;
    }
    ++out.steps;
    cur = eval_phi(p, cur);
  }
  return out;
}

namespace {

bool node_has_cover(const Presentation& p, const NodeAddress& a, bool use_weights) {
  for (const Component& c : p.components) {
    if (const auto* bt = std::get_if<BackwardTailComponent>(&c.kind)) {
      if (bt->target == a && (!use_weights || !bt->weights.at(0).is_zero()))
        return true;
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      // one tail per target node, so matching the component suffices
      if (tf->target_component == a.component &&
          (!use_weights || !tf->weights.at(0).is_zero()))
        return true;
    }
  }
  return false;
}

} // namespace

bool node_in_fibre_gap(const Presentation& p, const NodeAddress& a,
                       bool use_weights) {
  if (!contains_address(p, a))
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(a));
  const Component& c = *p.find(a.component);
  bool internal_good_pred = false;
  switch (c.kind.index()) {
    case 0: {
      const auto& f = std::get<FiniteComponent>(c.kind);
      for (std::size_t j = 0; j < f.map.size(); ++j) {
        if (f.map[j] != static_cast<std::size_t>(a.position)) continue;
        if (!use_weights || !f.weights[j].is_zero()) {
          internal_good_pred = true;
          break;
        }
      }
      break;
    }
    case 1: {
      const auto& ray = std::get<ForwardRayComponent>(c.kind);
      if (a.position >= 1) {
        internal_good_pred =
            !use_weights ||
            !ray.weights.at(static_cast<std::uint64_t>(a.position) - 1).is_zero();
      }
      break;
    }
    case 2: {
      const auto& br = std::get<BiRayComponent>(c.kind);
      std::int64_t b = static_cast<std::int64_t>(br.block.size());
      std::int64_t off = (((a.position - 1) % b) + b) % b;
      internal_good_pred =
          !use_weights || !br.block[static_cast<std::size_t>(off)].is_zero();
      break;
    }
    case 3: {
      const auto& bt = std::get<BackwardTailComponent>(c.kind);
      internal_good_pred =
          !use_weights ||
          !bt.weights.at(static_cast<std::uint64_t>(a.position)).is_zero();
      break;
    }
    case 4: {
      const auto& cf = std::get<CycleFamilyComponent>(c.kind);
      if (!use_weights) {
        internal_good_pred = true;
        break;
      }
      ZeroPattern pat(cf.weights);
      if (a.position >= 1) {
        internal_good_pred =
            !pat.is_zero_at(static_cast<std::uint64_t>(a.position) - 1);
      } else {
        std::uint64_t len = cf.lengths.length(a.member);
        if (len < LengthSpec::LENGTH_CAP) {
          internal_good_pred = !pat.is_zero_at(len - 1);
        } else {
          // length only known by residue; map position len-1 into the block
          std::uint64_t b = pat.block_len();
          std::uint64_t lm = cf.lengths.length_mod(a.member, b);
          std::uint64_t off = (lm + b - ((pat.prefix_len() + 1) % b)) % b;
          internal_good_pred = !pat.is_zero_at(pat.prefix_len() + off);
        }
      }
      break;
    }
    default: {
      const auto& tf = std::get<TailFamilyComponent>(c.kind);
      internal_good_pred =
          !use_weights ||
          !tf.weights.at(static_cast<std::uint64_t>(a.position)).is_zero();
      break;
    }
  }
  if (internal_good_pred) return false;
  return !node_has_cover(p, a, use_weights);
}

std::vector<NodeAddress> fibre_gap_scan(const Presentation& p, bool use_weights,
                                        std::size_t max_count,
                                        std::uint64_t radius) {
  std::vector<NodeAddress> out;
  for (const NodeAddress& a : enumerate_nodes(p, radius)) {
    if (out.size() >= max_count) break;
    if (node_in_fibre_gap(p, a, use_weights)) out.push_back(a);
  }
  return out;
}

LambdaProbeResult lambda_probe(const Presentation& p, const NodeAddress& start,
                               std::uint64_t max_steps, bool use_weights) {
  std::set<NodeAddress> visited;
  NodeAddress cur = start;
  for (std::uint64_t s = 0; s < max_steps; ++s) {
    if (weight_is_zero(p, cur, use_weights)) return LambdaProbeResult::InUpsilon;
    if (!visited.insert(cur).second) return LambdaProbeResult::InLambda;
    cur = eval_phi(p, cur);
  }
  return LambdaProbeResult::Unresolved;
}

} // namespace wgs
