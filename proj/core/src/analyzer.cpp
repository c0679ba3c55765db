#include "wgshift/analyzer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wgshift/errors.hpp"
#include "wgshift/word.hpp"

namespace wgs {

const char* to_string(EntropyClass c) {
  return c == EntropyClass::Zero ? "zero" : "infinite";
}

const char* to_string(CsetClass c) {
  switch (c) {
    case CsetClass::Zero: return "zero";
    case CsetClass::Infinite: return "infinite";
    case CsetClass::NotFiniteFibre: return "not-finite-fibre";
  }
  return "?";
}

namespace {

ZeroPattern make_pattern(const EventuallyPeriodicWord& w, bool use_weights) {
  return ZeroPattern(w, /*ignore_zeros=*/!use_weights);
}

ZeroPattern block_pattern(const std::vector<FieldElement>& block, bool use_weights) {
  EventuallyPeriodicWord w{{}, block};
  return ZeroPattern(w, /*ignore_zeros=*/!use_weights);
}

// Orbit of a finite-component node stays inside the component. Walks until a
// state repeats and reports whether every visited node carries nonzero weight.
bool finite_orbit_all_nonzero(const FiniteComponent& c, std::size_t start,
                              bool use_weights) {
  std::vector<bool> seen(c.map.size(), false);
  std::size_t cur = start;
  while (!seen[cur]) {
    seen[cur] = true;
    if (use_weights && c.weights[cur].is_zero()) return false;
    cur = c.map[cur];
  }
  return true;
}

std::optional<std::int64_t> last_prefix_zero(const EventuallyPeriodicWord& w) {
  std::optional<std::int64_t> out;
  for (std::size_t i = 0; i < w.prefix.size(); ++i)
    if (w.prefix[i].is_zero()) out = static_cast<std::int64_t>(i);
  return out;
}

} // namespace

bool LambdaDescription::in_lambda(const Presentation& p, const NodeAddress& a) const {
  if (!contains_address(p, a))
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(a));
  std::size_t idx = p.index_of(a.component);
  const Component& c = p.components[idx];
  const Rule& rule = per_component[idx];
  switch (c.kind.index()) {
    case 0: { // finite
      const auto& r = std::get<FiniteRule>(rule);
      return r.in_lambda[static_cast<std::size_t>(a.position)];
    }
    case 1: { // forward ray
      const auto& r = std::get<RayRule>(rule);
      return r.has_members && a.position >= r.threshold;
    }
    case 2: { // bi-ray
      return std::get<BiRayRule>(rule).all;
    }
    case 3: { // backward tail
      const auto& r = std::get<TailRule>(rule);
      auto depth = static_cast<std::uint64_t>(a.position);
      if (r.max_depth && depth > *r.max_depth) return false;
      return in_lambda(p, std::get<BackwardTailComponent>(c.kind).target);
    }
    case 4: { // cycle family
      const auto& r = std::get<FamilyRule>(rule);
      if (!r.first_word_zero) return true;
      std::uint64_t len = std::get<CycleFamilyComponent>(c.kind).lengths.length(a.member);
      return len <= *r.first_word_zero;
    }
    default: { // tail family
      const auto& r = std::get<TailRule>(rule);
      auto depth = static_cast<std::uint64_t>(a.position);
      if (r.max_depth && depth > *r.max_depth) return false;
      const auto& tf = std::get<TailFamilyComponent>(c.kind);
      return in_lambda(p, tail_family_anchor(p, tf, a.member));
    }
  }
}

LambdaDescription compute_lambda(const Presentation& p, bool use_weights) {
  LambdaDescription out;
  out.per_component.reserve(p.components.size());
  for (const Component& c : p.components) {
    switch (c.kind.index()) {
      case 0: {
        const auto& f = std::get<FiniteComponent>(c.kind);
        LambdaDescription::FiniteRule r;
        r.in_lambda.resize(f.map.size());
        for (std::size_t i = 0; i < f.map.size(); ++i)
          r.in_lambda[i] = finite_orbit_all_nonzero(f, i, use_weights);
        out.per_component.emplace_back(std::move(r));
        break;
      }
      case 1: {
        const auto& ray = std::get<ForwardRayComponent>(c.kind);
        ZeroPattern pat = make_pattern(ray.weights, use_weights);
        LambdaDescription::RayRule r;
        r.has_members = pat.block_zero_free();
        if (r.has_members && use_weights) {
          if (auto lz = last_prefix_zero(ray.weights)) r.threshold = *lz + 1;
        }
        out.per_component.emplace_back(r);
        break;
      }
      case 2: {
        const auto& br = std::get<BiRayComponent>(c.kind);
        ZeroPattern pat = block_pattern(br.block, use_weights);
        out.per_component.emplace_back(
            LambdaDescription::BiRayRule{pat.block_zero_free()});
        break;
      }
      case 3: {
        const auto& bt = std::get<BackwardTailComponent>(c.kind);
        ZeroPattern pat = make_pattern(bt.weights, use_weights);
        out.per_component.emplace_back(LambdaDescription::TailRule{pat.first_zero()});
        break;
      }
      case 4: {
        const auto& cf = std::get<CycleFamilyComponent>(c.kind);
        ZeroPattern pat = make_pattern(cf.weights, use_weights);
        out.per_component.emplace_back(LambdaDescription::FamilyRule{pat.first_zero()});
        break;
      }
      default: {
        const auto& tf = std::get<TailFamilyComponent>(c.kind);
        ZeroPattern pat = make_pattern(tf.weights, use_weights);
        out.per_component.emplace_back(LambdaDescription::TailRule{pat.first_zero()});
        break;
      }
    }
  }
  return out;
}

namespace {

// Which components receive blanket tail-family coverage, and which individual
// nodes receive backward-tail coverage. A covering preimage is one whose
// weight counts as nonzero under the chosen weighting.
struct CoverInfo {
  std::set<std::string> whole_component;
  std::set<NodeAddress> node;
};

CoverInfo collect_covers(const Presentation& p, bool use_weights) {
  CoverInfo info;
  for (const Component& c : p.components) {
    if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      if (!use_weights || !tf->weights.at(0).is_zero())
        info.whole_component.insert(tf->target_component);
    } else if (const auto* bt = std::get_if<BackwardTailComponent>(&c.kind)) {
      if (!use_weights || !bt->weights.at(0).is_zero()) info.node.insert(bt->target);
    }
  }
  return info;
}

// Positions j >= 1 with word[j] == 0, valid only when the block is zero-free
// (the list is finite exactly then).
std::vector<std::int64_t> prefix_zero_positions_from_one(const EventuallyPeriodicWord& w) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < w.prefix.size(); ++i)
    if (w.prefix[i].is_zero()) out.push_back(static_cast<std::int64_t>(i));
  return out;
}

} // namespace

FibreGapSummary is_finite_fibre(const Presentation& p, bool use_weights) {
  FibreGapSummary out;
  CoverInfo cover = collect_covers(p, use_weights);
  auto covered_node = [&](const NodeAddress& a) { return cover.node.count(a) > 0; };
  auto covered_whole = [&](const std::string& id) {
    return cover.whole_component.count(id) > 0;
  };
  auto mark_infinite = [&](const Component& c, const std::string& why) {
    out.finite = false;
    out.infinite_reasons.push_back(c.id + ": " + why);
  };

  for (const Component& c : p.components) {
    switch (c.kind.index()) {
      case 0: {
        const auto& f = std::get<FiniteComponent>(c.kind);
        std::vector<bool> has_good_pred(f.map.size(), false);
        for (std::size_t i = 0; i < f.map.size(); ++i) {
          bool good = use_weights ? !f.weights[i].is_zero() : true;
          if (good) has_good_pred[f.map[i]] = true;
        }
        for (std::size_t i = 0; i < f.map.size(); ++i) {
          NodeAddress a{c.id, 1, static_cast<std::int64_t>(i)};
          if (!has_good_pred[i] && !covered_node(a) && !covered_whole(c.id))
            out.members.push_back(a);
        }
        break;
      }
      case 1: {
        const auto& ray = std::get<ForwardRayComponent>(c.kind);
        if (covered_whole(c.id)) break;
        ZeroPattern pat = make_pattern(ray.weights, use_weights);
        if (!pat.block_zero_free()) {
          mark_infinite(c, "infinitely many zero-weight predecessors along the ray");
          break;
        }
        NodeAddress origin{c.id, 1, 0};
        if (!covered_node(origin)) out.members.push_back(origin);
        if (use_weights) {
          for (std::size_t i = 0; i < ray.weights.prefix.size(); ++i) {
            if (!ray.weights.prefix[i].is_zero()) continue;
            NodeAddress a{c.id, 1, static_cast<std::int64_t>(i) + 1};
            if (!covered_node(a)) out.members.push_back(a);
          }
        }
        break;
      }
      case 2: {
        const auto& br = std::get<BiRayComponent>(c.kind);
        if (covered_whole(c.id)) break;
        ZeroPattern pat = block_pattern(br.block, use_weights);
        if (!pat.block_zero_free())
          mark_infinite(c, "infinitely many zero-weight predecessors along the line");
        break;
      }
      case 3: {
        const auto& bt = std::get<BackwardTailComponent>(c.kind);
        if (!use_weights) break;
        ZeroPattern pat = make_pattern(bt.weights, use_weights);
        if (!pat.block_zero_free()) {
          mark_infinite(c, "infinitely many zero-weight predecessors along the tail");
          break;
        }
        for (std::int64_t j : prefix_zero_positions_from_one(bt.weights))
          out.members.push_back(NodeAddress{c.id, 1, j});
        break;
      }
      case 4: {
        const auto& cf = std::get<CycleFamilyComponent>(c.kind);
        if (covered_whole(c.id)) break;
        if (!use_weights) break;
        ZeroPattern pat = make_pattern(cf.weights, use_weights);
        std::optional<std::uint64_t> fz = pat.first_zero();
        bool used_zero = false;
        if (fz) {
          if (cf.lengths.unbounded()) {
            used_zero = true; // lengths pass every bound eventually
          } else {
            used_zero = *fz < cf.lengths.length(1);
          }
        }
        if (used_zero)
          mark_infinite(c, "a zero weight position recurs across infinitely many cycles");
        break;
      }
      default: {
        const auto& tf = std::get<TailFamilyComponent>(c.kind);
        if (!use_weights) break;
        ZeroPattern pat = make_pattern(tf.weights, use_weights);
        auto zeros = prefix_zero_positions_from_one(tf.weights);
        bool block_free = pat.block_zero_free();
        if (block_free && zeros.empty()) break;
        auto member_count =
            component_node_count(*p.find(tf.target_component));
        if (!member_count) {
          mark_infinite(c, "zero-weight tail positions repeat over infinitely many tails");
          break;
        }
        if (!block_free) {
          mark_infinite(c, "infinitely many zero-weight predecessors along each tail");
          break;
        }
        for (std::uint64_t m = 1; m <= *member_count; ++m)
          for (std::int64_t j : zeros)
            out.members.push_back(NodeAddress{c.id, m, j});
        break;
      }
    }
  }

  if (!out.finite) out.members.clear();
  std::sort(out.members.begin(), out.members.end());
  return out;
}

namespace {

// Longest injective all-nonzero segment confined to one component, together
// with the longest run available when an orbit enters the component at a given
// node (for tail-descent combinations).
struct RunFacts {
  std::uint64_t pure = 0; // segments fully inside the component
};

std::uint64_t finite_run_from(const FiniteComponent& f, std::size_t start,
                              bool use_weights) {
  std::vector<bool> seen(f.map.size(), false);
  std::size_t cur = start;
  std::uint64_t n = 0;
  while (!seen[cur]) {
    if (use_weights && f.weights[cur].is_zero()) break;
    seen[cur] = true;
    ++n;
    cur = f.map[cur];
  }
  return n;
}

// Exact supremum of nonzero circular runs over all members of a cycle family.
// Small members are scanned directly; large members share the structural
// formula, which depends on the length only through its block residue, so a
// bounded window of members covers every attained value.
std::uint64_t family_run_sup(const CycleFamilyComponent& cf, const ZeroPattern& pat) {
  std::uint64_t small_cut = pat.prefix_len() + 4 * pat.block_len() + 64;
  std::uint64_t k1 = 1;
  while (cf.lengths.length(k1) <= small_cut && k1 < small_cut + 4) ++k1;
  std::uint64_t window_end = k1 + 2 * pat.block_len() + 64;
  std::uint64_t best = 0;
  for (std::uint64_t k = 1; k <= window_end; ++k) {
    std::uint64_t len = cf.lengths.length(k);
    std::uint64_t lm = cf.lengths.length_mod(k, pat.block_len());
    best = std::max(best, pat.circular_max_run(len, lm));
    if (!cf.lengths.unbounded()) break; // constant lengths: one member suffices
  }
  return best;
}

// Callers have already excluded every unbounded rule, so the optional run
// queries below are all engaged; value() makes a miss loud instead of silent.
RunFacts component_run_facts(const Component& c, bool use_weights) {
  RunFacts out;
  switch (c.kind.index()) {
    case 0: {
      const auto& f = std::get<FiniteComponent>(c.kind);
      for (std::size_t i = 0; i < f.map.size(); ++i)
        out.pure = std::max(out.pure, finite_run_from(f, i, use_weights));
      break;
    }
    case 1: {
      const auto& ray = std::get<ForwardRayComponent>(c.kind);
      ZeroPattern pat = make_pattern(ray.weights, use_weights);
      out.pure = pat.max_nonzero_run().value();
      break;
    }
    case 2: {
      const auto& br = std::get<BiRayComponent>(c.kind);
      ZeroPattern pat = block_pattern(br.block, use_weights);
      out.pure = pat.circular_max_run(pat.block_len(), 0);
      break;
    }
    case 3: {
      const auto& bt = std::get<BackwardTailComponent>(c.kind);
      ZeroPattern pat = make_pattern(bt.weights, use_weights);
      out.pure = pat.max_nonzero_run().value();
      break;
    }
    case 4: {
      const auto& cf = std::get<CycleFamilyComponent>(c.kind);
      ZeroPattern pat = make_pattern(cf.weights, use_weights);
      out.pure = family_run_sup(cf, pat);
      break;
    }
    default: {
      const auto& tf = std::get<TailFamilyComponent>(c.kind);
      ZeroPattern pat = make_pattern(tf.weights, use_weights);
      out.pure = pat.max_nonzero_run().value();
      break;
    }
  }
  return out;
}

// Longest injective all-nonzero segment starting at a concrete node. Only
// needed for tail attachment targets, which are never tails themselves.
std::uint64_t run_from_node(const Presentation& p, const NodeAddress& a,
                            bool use_weights) {
  const Component& c = *p.find(a.component);
  switch (c.kind.index()) {
    case 0: {
      const auto& f = std::get<FiniteComponent>(c.kind);
      return finite_run_from(f, static_cast<std::size_t>(a.position), use_weights);
    }
    case 1: {
      const auto& ray = std::get<ForwardRayComponent>(c.kind);
      ZeroPattern pat = make_pattern(ray.weights, use_weights);
      return pat.run_from(static_cast<std::uint64_t>(a.position)).value();
    }
    case 2: {
      const auto& br = std::get<BiRayComponent>(c.kind);
      ZeroPattern pat = block_pattern(br.block, use_weights);
      std::int64_t b = static_cast<std::int64_t>(pat.block_len());
      std::int64_t m = ((a.position % b) + b) % b;
      return pat.run_from(static_cast<std::uint64_t>(m)).value();
    }
    case 4: {
      const auto& cf = std::get<CycleFamilyComponent>(c.kind);
      ZeroPattern pat = make_pattern(cf.weights, use_weights);
      std::uint64_t len = cf.lengths.length(a.member);
      std::uint64_t lm = cf.lengths.length_mod(a.member, pat.block_len());
      return pat.circular_run_from(len, lm, static_cast<std::uint64_t>(a.position));
    }
    default:
      throw Error(ErrorCode::InternalInconsistency,
                  "tail attachment target may not be a tail");
  }
}

std::optional<std::string> unbounded_reason(const Presentation& p,
                                            bool use_weights) {
  for (const Component& c : p.components) {
    switch (c.kind.index()) {
      case 1: {
        const auto& ray = std::get<ForwardRayComponent>(c.kind);
        if (make_pattern(ray.weights, use_weights).block_zero_free())
          return c.id + ": arbitrarily long nonzero stretches along the ray";
        break;
      }
      case 2: {
        const auto& br = std::get<BiRayComponent>(c.kind);
        if (block_pattern(br.block, use_weights).block_zero_free())
          return c.id + ": arbitrarily long nonzero stretches along the line";
        break;
      }
      case 3: {
        const auto& bt = std::get<BackwardTailComponent>(c.kind);
        if (make_pattern(bt.weights, use_weights).block_zero_free())
          return c.id + ": arbitrarily deep nonzero descents along the tail";
        break;
      }
      case 4: {
        const auto& cf = std::get<CycleFamilyComponent>(c.kind);
        if (cf.lengths.unbounded() &&
            make_pattern(cf.weights, use_weights).block_zero_free())
          return c.id + ": nonzero cycles of unbounded length";
        break;
      }
      case 5: {
        const auto& tf = std::get<TailFamilyComponent>(c.kind);
        if (make_pattern(tf.weights, use_weights).block_zero_free())
          return c.id + ": arbitrarily deep nonzero descents along the tails";
        break;
      }
      default:
        break;
    }
  }
  return std::nullopt;
}

std::uint64_t enumeration_horizon(const Presentation& p) {
  std::uint64_t total = 0;
  std::uint64_t max_gap = 0;
  auto block_gap = [](const ZeroPattern& pat) -> std::uint64_t {
    if (pat.block_zero_free()) return pat.block_len();
    return pat.circular_max_run(pat.block_len(), 0);
  };
  for (const Component& c : p.components) {
    switch (c.kind.index()) {
      case 0:
        total += std::get<FiniteComponent>(c.kind).map.size();
        break;
      case 1: {
        const auto& w = std::get<ForwardRayComponent>(c.kind).weights;
        total += w.prefix.size();
        max_gap = std::max(max_gap, block_gap(ZeroPattern(w)));
        break;
      }
      case 2:
        max_gap = std::max(
            max_gap, block_gap(block_pattern(std::get<BiRayComponent>(c.kind).block, true)));
        break;
      case 3: {
        const auto& w = std::get<BackwardTailComponent>(c.kind).weights;
        total += w.prefix.size();
        max_gap = std::max(max_gap, block_gap(ZeroPattern(w)));
        break;
      }
      case 4: {
        const auto& w = std::get<CycleFamilyComponent>(c.kind).weights;
        total += w.prefix.size();
        max_gap = std::max(max_gap, block_gap(ZeroPattern(w)));
        break;
      }
      default: {
        const auto& w = std::get<TailFamilyComponent>(c.kind).weights;
        total += w.prefix.size();
        max_gap = std::max(max_gap, block_gap(ZeroPattern(w)));
        break;
      }
    }
  }
  return total + (p.components.size() + 1) * (max_gap + 1);
}

} // namespace

TauBound tau_sup(const Presentation& p, bool use_weights) {
  TauBound out;
  out.horizon = enumeration_horizon(p);
  if (auto why = unbounded_reason(p, use_weights)) {
    out.unbounded = true;
    out.reason = *why;
    return out;
  }

  // Every orbit visits at most two components (a tail, then its attachment
  // component), so the exact supremum of segment node counts is the larger of
  // the per-component suprema and the tail-descent combinations.
  std::uint64_t max_nodes = 0;
  std::map<std::string, std::uint64_t> pure;
  for (const Component& c : p.components) {
    RunFacts facts = component_run_facts(c, use_weights);
    pure[c.id] = facts.pure;
    max_nodes = std::max(max_nodes, facts.pure);
  }
  for (const Component& c : p.components) {
    if (const auto* bt = std::get_if<BackwardTailComponent>(&c.kind)) {
      ZeroPattern pat = make_pattern(bt->weights, use_weights);
      std::uint64_t descent = *pat.first_zero(); // block has a zero here
      if (descent == 0) continue;
      max_nodes = std::max(max_nodes, descent + run_from_node(p, bt->target, use_weights));
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      ZeroPattern pat = make_pattern(tf->weights, use_weights);
      std::uint64_t descent = *pat.first_zero();
      if (descent == 0) continue;
      // Anchors sweep the whole target component, so combine with its best run.
      max_nodes = std::max(max_nodes, descent + pure[tf->target_component]);
    }
  }
  out.value = max_nodes == 0 ? 0 : max_nodes - 1;
  return out;
}

EntropyClass ent_set_class(const Presentation& p, bool use_weights) {
  return tau_sup(p, use_weights).unbounded ? EntropyClass::Infinite
                                           : EntropyClass::Zero;
}

CsetClass ent_cset_class(const Presentation& p, bool use_weights) {
  if (!is_finite_fibre(p, use_weights).finite) return CsetClass::NotFiniteFibre;
  for (const Component& c : p.components) {
    switch (c.kind.index()) {
      case 1: { // non-quasi-periodic points exist over a ray with full orbits
        const auto& ray = std::get<ForwardRayComponent>(c.kind);
        if (make_pattern(ray.weights, use_weights).block_zero_free())
          return CsetClass::Infinite;
        break;
      }
      case 2: {
        const auto& br = std::get<BiRayComponent>(c.kind);
        if (block_pattern(br.block, use_weights).block_zero_free())
          return CsetClass::Infinite;
        break;
      }
      case 4: { // unbounded periodic spectrum inside the full-orbit set
        const auto& cf = std::get<CycleFamilyComponent>(c.kind);
        if (cf.lengths.unbounded() &&
            make_pattern(cf.weights, use_weights).zero_free())
          return CsetClass::Infinite;
        break;
      }
      default:
        break;
    }
  }
  return CsetClass::Zero;
}

EntropyReport predicate_vector(const Presentation& p) {
  EntropyReport r;
  r.finite_fibre_weighted = is_finite_fibre(p, true).finite;
  r.finite_fibre_unweighted = is_finite_fibre(p, false).finite;
  r.ent_set_weighted = ent_set_class(p, true);
  r.ent_set_unweighted = ent_set_class(p, false);
  r.ent_cset_weighted = ent_cset_class(p, true);
  r.ent_cset_unweighted = ent_cset_class(p, false);
  r.tau = tau_sup(p, true);

  if (r.finite_fibre_weighted && r.ent_set_weighted != r.ent_set_unweighted)
    throw Error(ErrorCode::InternalInconsistency,
                "finite fibres must equalize weighted and unweighted set entropy");

  r.predicates[PI1] = r.ent_set_unweighted == EntropyClass::Zero;
  r.predicates[PI2] = r.ent_set_unweighted == EntropyClass::Infinite;
  r.predicates[PI3] = r.ent_set_weighted == EntropyClass::Zero;
  r.predicates[PI4] = r.ent_set_weighted == EntropyClass::Infinite;
  if (r.ent_cset_unweighted != CsetClass::NotFiniteFibre) {
    r.predicates[RHO1] = r.ent_cset_unweighted == CsetClass::Zero;
    r.predicates[RHO2] = r.ent_cset_unweighted == CsetClass::Infinite;
  }
  if (r.ent_cset_weighted != CsetClass::NotFiniteFibre) {
    r.predicates[RHO3] = r.ent_cset_weighted == CsetClass::Zero;
    r.predicates[RHO4] = r.ent_cset_weighted == CsetClass::Infinite;
  }
  return r;
}

std::vector<std::string> implication_check(const EntropyReport& r) {
  if (!r.finite_fibre_weighted)
    throw Error(ErrorCode::HypothesisNotMet,
                "implication table assumes finite fibres for the weighted map");
  for (const auto& pred : r.predicates)
    if (!pred)
      throw Error(ErrorCode::InternalInconsistency,
                  "finite fibres leave no predicate undefined");

  auto v = [&](Predicate i) { return *r.predicates[i]; };
  struct Rule {
    const char* name;
    Predicate lhs;
    Predicate rhs;
  };
  static const Rule rules[] = {
      {"i", PI1, PI3},    {"ii", PI3, RHO3},  {"iii", PI1, RHO1},
      {"iv", PI1, RHO3},  {"v", PI4, PI2},    {"vi", RHO4, PI4},
      {"vii", RHO2, PI2}, {"viii", RHO4, PI2}, {"ix", RHO1, RHO3},
      {"x", RHO4, RHO2},  {"xi", PI3, PI1},   {"xii", PI2, PI4},
      {"xiii", RHO2, PI4}, {"xiv", PI3, RHO1},
  };
  std::vector<std::string> violated;
  for (const Rule& rule : rules)
    if (v(rule.lhs) && !v(rule.rhs)) violated.push_back(rule.name);
  return violated;
}

} // namespace wgs
