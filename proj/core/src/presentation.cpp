#include "wgshift/presentation.hpp"

#include <algorithm>

namespace wgs {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > LengthSpec::LENGTH_CAP / b) return LengthSpec::LENGTH_CAP;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  if (a > LengthSpec::LENGTH_CAP - std::min(b, LengthSpec::LENGTH_CAP)) {
    return LengthSpec::LENGTH_CAP;
  }
  return std::min(a + b, LengthSpec::LENGTH_CAP);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) acc = (acc * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return acc;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

} // namespace

std::uint64_t LengthSpec::length(std::uint64_t k) const {
  switch (kind) {
    case Kind::Constant: return c;
    case Kind::Linear: return sat_add(sat_mul(a, k), b);
    case Kind::Geometric: {
      std::uint64_t pw = 1;
      for (std::uint64_t i = 0; i < k; ++i) {
        pw = sat_mul(pw, base);
        if (pw == LENGTH_CAP) break;
      }
      return sat_mul(b, pw);
    }
  }
  return 1;
}

std::uint64_t LengthSpec::length_mod(std::uint64_t k, std::uint64_t m) const {
  if (m == 0) return 0;
  switch (kind) {
    case Kind::Constant: return c % m;
    case Kind::Linear: return ((a % m) * (k % m) + b % m) % m;
    case Kind::Geometric: return ((b % m) * mod_pow(base, k, m)) % m;
  }
  return 0;
}

std::string to_string(const NodeAddress& a) {
  return a.component + "/" + std::to_string(a.member) + "/" + std::to_string(a.position);
}

const char* component_kind_name(const ComponentKind& k) {
  switch (k.index()) {
    case 0: return "finite";
    case 1: return "forward_ray";
    case 2: return "bi_ray";
    case 3: return "backward_tail";
    case 4: return "cycle_family";
    case 5: return "tail_family";
  }
  return "?";
}

const Component* Presentation::find(const std::string& id) const {
  for (const auto& c : components) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::size_t Presentation::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].id == id) return i;
  }
  throw Error(ErrorCode::AddressOutOfRange, "no component with id '" + id + "'");
}

namespace {

bool word_ok(const EventuallyPeriodicWord& w) { return !w.block.empty(); }

bool is_tail_kind(const ComponentKind& k) {
  return std::holds_alternative<BackwardTailComponent>(k) ||
         std::holds_alternative<TailFamilyComponent>(k);
}

} // namespace

std::vector<Violation> validate(const Presentation& p) {
  std::vector<Violation> out;
  auto bad = [&](const std::string& code, const std::string& comp, const std::string& detail) {
    out.push_back({code, comp, detail});
  };

  if (p.components.empty()) {
    bad("EmptyComponents", "", "presentation has no components");
    return out;
  }
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    for (std::size_t j = i + 1; j < p.components.size(); ++j) {
      if (p.components[i].id == p.components[j].id) {
        bad("DuplicateId", p.components[i].id, "component id used twice");
      }
    }
  }

  auto check_weights = [&](const std::string& id, const std::vector<FieldElement>& ws) {
    for (const auto& w : ws) {
      if (w.p() != p.field.p()) {
        bad("FieldMismatch", id, "weight not in the presentation field");
        return;
      }
    }
  };
  auto check_word = [&](const std::string& id, const EventuallyPeriodicWord& w) {
    if (!word_ok(w)) {
      bad("EmptyBlock", id, "weight block must be nonempty");
      return;
    }
    check_weights(id, w.prefix);
    check_weights(id, w.block);
  };

  for (const auto& c : p.components) {
    if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) {
      if (f->map.empty()) {
        bad("EmptyFinite", c.id, "finite component has no nodes");
        continue;
      }
      if (f->weights.size() != f->map.size()) {
        bad("SizeMismatch", c.id, "weights size differs from map size");
      }
      for (auto v : f->map) {
        if (v >= f->map.size()) {
          bad("MapOutOfRange", c.id, "map image " + std::to_string(v) + " out of range");
          break;
        }
      }
      check_weights(c.id, f->weights);
    } else if (const auto* r = std::get_if<ForwardRayComponent>(&c.kind)) {
      check_word(c.id, r->weights);
    } else if (const auto* b = std::get_if<BiRayComponent>(&c.kind)) {
      if (b->block.empty()) {
        bad("EmptyBlock", c.id, "bi-ray block must be nonempty");
      }
      check_weights(c.id, b->block);
    } else if (const auto* t = std::get_if<BackwardTailComponent>(&c.kind)) {
      check_word(c.id, t->weights);
      const Component* tgt = p.find(t->target.component);
      if (!tgt) {
        bad("UnknownTarget", c.id, "target component '" + t->target.component + "' not found");
      } else if (is_tail_kind(tgt->kind)) {
        bad("BadAttachmentKind", c.id, "tails cannot attach to tail components");
      } else if (!contains_address(p, t->target)) {
        bad("AddressOutOfRange", c.id, "target address " + to_string(t->target) + " invalid");
      }
    } else if (const auto* cf = std::get_if<CycleFamilyComponent>(&c.kind)) {
      check_word(c.id, cf->weights);
      const auto& ls = cf->lengths;
      bool ok = true;
      switch (ls.kind) {
        case LengthSpec::Kind::Constant: ok = ls.c >= 1 && ls.c <= (1u << 30); break;
        case LengthSpec::Kind::Linear: ok = ls.a >= 1 && ls.a <= (1u << 30) && ls.b <= (1u << 30); break;
        case LengthSpec::Kind::Geometric:
          ok = ls.base >= 2 && ls.base <= (1u << 30) && ls.b >= 1 && ls.b <= (1u << 30);
          break;
      }
      if (!ok) bad("BadLengthSpec", c.id, "length parameters out of range");
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      check_word(c.id, tf->weights);
      const Component* tgt = p.find(tf->target_component);
      if (!tgt) {
        bad("UnknownTarget", c.id, "target component '" + tf->target_component + "' not found");
      } else if (is_tail_kind(tgt->kind)) {
        bad("BadAttachmentKind", c.id, "tail family cannot attach to tail components");
      }
    }
  }
  return out;
}

bool contains_address(const Presentation& p, const NodeAddress& a) {
  const Component* c = p.find(a.component);
  if (!c) return false;
  if (const auto* f = std::get_if<FiniteComponent>(&c->kind)) {
    return a.member == 1 && a.position >= 0 &&
           static_cast<std::uint64_t>(a.position) < f->map.size();
  }
  if (std::holds_alternative<ForwardRayComponent>(c->kind)) {
    return a.member == 1 && a.position >= 0;
  }
  if (std::holds_alternative<BiRayComponent>(c->kind)) {
    return a.member == 1;
  }
  if (std::holds_alternative<BackwardTailComponent>(c->kind)) {
    return a.member == 1 && a.position >= 1;
  }
  if (const auto* cf = std::get_if<CycleFamilyComponent>(&c->kind)) {
    if (a.member < 1 || a.position < 0) return false;
    return static_cast<std::uint64_t>(a.position) < cf->lengths.length(a.member);
  }
  if (const auto* tf = std::get_if<TailFamilyComponent>(&c->kind)) {
    if (a.member < 1 || a.position < 1) return false;
    const Component* tgt = p.find(tf->target_component);
    if (!tgt) return false;
    auto count = component_node_count(*tgt);
    return !count.has_value() || a.member <= *count;
  }
  return false;
}

std::optional<std::uint64_t> component_node_count(const Component& c) {
  if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) return f->map.size();
  return std::nullopt;
}

namespace {

// Prefix sum of cycle-family lengths: sum of len_j for j in [1, m]. Throws on
// values beyond the addressable range instead of silently saturating.
std::uint64_t family_prefix_sum(const LengthSpec& ls, std::uint64_t m) {
  using u128 = unsigned __int128;
  u128 total = 0;
  switch (ls.kind) {
    case LengthSpec::Kind::Constant:
      total = static_cast<u128>(ls.c) * m;
      break;
    case LengthSpec::Kind::Linear:
      total = static_cast<u128>(ls.a) * m * (m + 1) / 2 + static_cast<u128>(ls.b) * m;
      break;
    case LengthSpec::Kind::Geometric: {
      for (std::uint64_t j = 1; j <= m; ++j) {
        u128 len = ls.length(j);
        total += len;
        if (total > LengthSpec::LENGTH_CAP) break;
        if (len >= LengthSpec::LENGTH_CAP) break;
      }
      break;
    }
  }
  if (total > LengthSpec::LENGTH_CAP) {
    throw Error(ErrorCode::AddressOutOfRange, "cycle family index exceeds addressable range");
  }
  return static_cast<std::uint64_t>(total);
}

// Member/offset of the k-th node (1-based) in member-major order.
std::pair<std::uint64_t, std::uint64_t> family_node_at(const LengthSpec& ls, std::uint64_t k) {
  switch (ls.kind) {
    case LengthSpec::Kind::Constant:
      return {(k - 1) / ls.c + 1, (k - 1) % ls.c};
    case LengthSpec::Kind::Linear: {
      std::uint64_t lo = 1, hi = 1;
      while (family_prefix_sum(ls, hi) < k) {
        lo = hi + 1;
        hi *= 2;
      }
      while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (family_prefix_sum(ls, mid) >= k) hi = mid; else lo = mid + 1;
      }
      return {lo, k - 1 - family_prefix_sum(ls, lo - 1)};
    }
    case LengthSpec::Kind::Geometric: {
      std::uint64_t m = 1;
      while (family_prefix_sum(ls, m) < k) ++m;
      return {m, k - 1 - family_prefix_sum(ls, m - 1)};
    }
  }
  return {1, 0};
}

} // namespace

NodeAddress tail_family_anchor(const Presentation& p, const TailFamilyComponent& tf,
                               std::uint64_t k) {
  const Component* tgt = p.find(tf.target_component);
  if (!tgt || k < 1) {
    throw Error(ErrorCode::AddressOutOfRange, "bad tail family member");
  }
  if (const auto* f = std::get_if<FiniteComponent>(&tgt->kind)) {
    if (k > f->map.size()) {
      throw Error(ErrorCode::AddressOutOfRange, "tail family member beyond target size");
    }
    return {tgt->id, 1, static_cast<std::int64_t>(k - 1)};
  }
  if (std::holds_alternative<ForwardRayComponent>(tgt->kind)) {
    return {tgt->id, 1, static_cast<std::int64_t>(k - 1)};
  }
  if (std::holds_alternative<BiRayComponent>(tgt->kind)) {
    if (k == 1) return {tgt->id, 1, 0};
    if (k % 2 == 0) return {tgt->id, 1, static_cast<std::int64_t>(k / 2)};
    return {tgt->id, 1, -static_cast<std::int64_t>((k - 1) / 2)};
  }
  if (const auto* cf = std::get_if<CycleFamilyComponent>(&tgt->kind)) {
    auto [m, off] = family_node_at(cf->lengths, k);
    return {tgt->id, m, static_cast<std::int64_t>(off)};
  }
  throw Error(ErrorCode::AddressOutOfRange, "tail family target has no node order");
}

std::uint64_t flat_node_index(const Presentation& p, const NodeAddress& target) {
  const Component* c = p.find(target.component);
  if (!c || !contains_address(p, target)) {
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(target));
  }
  if (std::holds_alternative<FiniteComponent>(c->kind) ||
      std::holds_alternative<ForwardRayComponent>(c->kind)) {
    return static_cast<std::uint64_t>(target.position) + 1;
  }
  if (std::holds_alternative<BiRayComponent>(c->kind)) {
    if (target.position == 0) return 1;
    if (target.position > 0) return 2 * static_cast<std::uint64_t>(target.position);
    return 2 * static_cast<std::uint64_t>(-target.position) + 1;
  }
  if (const auto* cf = std::get_if<CycleFamilyComponent>(&c->kind)) {
    std::uint64_t before = family_prefix_sum(cf->lengths, target.member - 1);
    return before + static_cast<std::uint64_t>(target.position) + 1;
  }
  throw Error(ErrorCode::AddressOutOfRange, "component has no flat node order");
}

NodeAddress eval_phi(const Presentation& p, const NodeAddress& a) {
  const Component* c = p.find(a.component);
  if (!c || !contains_address(p, a)) {
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(a));
  }
  if (const auto* f = std::get_if<FiniteComponent>(&c->kind)) {
    return {c->id, 1, static_cast<std::int64_t>(f->map[a.position])};
  }
  if (std::holds_alternative<ForwardRayComponent>(c->kind) ||
      std::holds_alternative<BiRayComponent>(c->kind)) {
    return {c->id, 1, a.position + 1};
  }
  if (const auto* t = std::get_if<BackwardTailComponent>(&c->kind)) {
    if (a.position > 1) return {c->id, 1, a.position - 1};
    return t->target;
  }
  if (const auto* cf = std::get_if<CycleFamilyComponent>(&c->kind)) {
    std::uint64_t len = cf->lengths.length(a.member);
    std::uint64_t next = static_cast<std::uint64_t>(a.position) + 1;
    if (next >= len) next = 0;
    return {c->id, a.member, static_cast<std::int64_t>(next)};
  }
  const auto* tf = std::get_if<TailFamilyComponent>(&c->kind);
  if (a.position > 1) return {c->id, a.member, a.position - 1};
  return tail_family_anchor(p, *tf, a.member);
}

FieldElement eval_weight(const Presentation& p, const NodeAddress& a) {
  const Component* c = p.find(a.component);
  if (!c || !contains_address(p, a)) {
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(a));
  }
  if (const auto* f = std::get_if<FiniteComponent>(&c->kind)) {
    return f->weights[a.position];
  }
  if (const auto* r = std::get_if<ForwardRayComponent>(&c->kind)) {
    return r->weights.at(static_cast<std::uint64_t>(a.position));
  }
  if (const auto* b = std::get_if<BiRayComponent>(&c->kind)) {
    auto len = static_cast<std::int64_t>(b->block.size());
    return b->block[floor_mod(a.position, len)];
  }
  if (const auto* t = std::get_if<BackwardTailComponent>(&c->kind)) {
    return t->weights.at(static_cast<std::uint64_t>(a.position) - 1);
  }
  if (const auto* cf = std::get_if<CycleFamilyComponent>(&c->kind)) {
    return cf->weights.at(static_cast<std::uint64_t>(a.position));
  }
  const auto* tf = std::get_if<TailFamilyComponent>(&c->kind);
  return tf->weights.at(static_cast<std::uint64_t>(a.position) - 1);
}

std::vector<NodeAddress> enumerate_nodes(const Presentation& p, std::uint64_t radius) {
  std::vector<NodeAddress> out;
  auto r = static_cast<std::int64_t>(radius);
  for (const auto& c : p.components) {
    if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) {
      for (std::size_t i = 0; i < f->map.size(); ++i) {
        out.push_back({c.id, 1, static_cast<std::int64_t>(i)});
      }
    } else if (std::holds_alternative<ForwardRayComponent>(c.kind)) {
      for (std::int64_t i = 0; i <= r; ++i) out.push_back({c.id, 1, i});
    } else if (std::holds_alternative<BiRayComponent>(c.kind)) {
      for (std::int64_t i = -r; i <= r; ++i) out.push_back({c.id, 1, i});
    } else if (std::holds_alternative<BackwardTailComponent>(c.kind)) {
      for (std::int64_t j = 1; j <= r; ++j) out.push_back({c.id, 1, j});
    } else if (const auto* cf = std::get_if<CycleFamilyComponent>(&c.kind)) {
      for (std::uint64_t k = 1; k <= radius; ++k) {
        std::uint64_t len = cf->lengths.length(k);
        std::uint64_t top = std::min(len, radius + 1);
        for (std::uint64_t i = 0; i < top; ++i) {
          out.push_back({c.id, k, static_cast<std::int64_t>(i)});
        }
      }
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      std::uint64_t members = radius;
      if (const Component* tgt = p.find(tf->target_component)) {
        if (auto count = component_node_count(*tgt)) members = std::min(members, *count);
      }
      for (std::uint64_t k = 1; k <= members; ++k) {
        for (std::int64_t j = 1; j <= r; ++j) out.push_back({c.id, k, j});
      }
    }
  }
  return out;
}

std::vector<std::pair<NodeAddress, FieldElement>> structural_preimages(const Presentation& p,
                                                                       const NodeAddress& a) {
  const Component* c = p.find(a.component);
  if (!c || !contains_address(p, a)) {
    throw Error(ErrorCode::AddressOutOfRange, "no node " + to_string(a));
  }
  std::vector<std::pair<NodeAddress, FieldElement>> out;
  if (const auto* f = std::get_if<FiniteComponent>(&c->kind)) {
    for (std::size_t u = 0; u < f->map.size(); ++u) {
      if (f->map[u] == static_cast<std::uint32_t>(a.position)) {
        out.push_back({{c->id, 1, static_cast<std::int64_t>(u)}, f->weights[u]});
      }
    }
  } else if (std::holds_alternative<ForwardRayComponent>(c->kind)) {
    if (a.position >= 1) {
      NodeAddress pre{c->id, 1, a.position - 1};
      out.push_back({pre, eval_weight(p, pre)});
    }
  } else if (std::holds_alternative<BiRayComponent>(c->kind)) {
    NodeAddress pre{c->id, 1, a.position - 1};
    out.push_back({pre, eval_weight(p, pre)});
  } else if (std::holds_alternative<BackwardTailComponent>(c->kind) ||
             std::holds_alternative<TailFamilyComponent>(c->kind)) {
    NodeAddress pre{c->id, a.member, a.position + 1};
    out.push_back({pre, eval_weight(p, pre)});
  } else if (const auto* cf = std::get_if<CycleFamilyComponent>(&c->kind)) {
    std::uint64_t len = cf->lengths.length(a.member);
    std::uint64_t prev =
        a.position == 0 ? len - 1 : static_cast<std::uint64_t>(a.position) - 1;
    NodeAddress pre{c->id, a.member, static_cast<std::int64_t>(prev)};
    // exact weight offset for huge members needs the true residue, not the cap
    if (a.position == 0 && len == LengthSpec::LENGTH_CAP) {
      throw Error(ErrorCode::AddressOutOfRange, "member too large for offset arithmetic");
    }
    out.push_back({pre, eval_weight(p, pre)});
  }
  // tails attached at this node
  for (const auto& t : p.components) {
    if (const auto* bt = std::get_if<BackwardTailComponent>(&t.kind)) {
      if (bt->target == a) {
        out.push_back({{t.id, 1, 1}, bt->weights.at(0)});
      }
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&t.kind)) {
      if (tf->target_component == a.component) {
        std::uint64_t member = flat_node_index(p, a);
        out.push_back({{t.id, member, 1}, tf->weights.at(0)});
      }
    }
  }
  return out;
}

ZeroSetSummary zero_set_summary(const Presentation& p) {
  ZeroSetSummary s;
  for (const auto& c : p.components) {
    ComponentZeroSummary cs;
    cs.component = c.id;
    bool finite = true;
    if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) {
      for (std::size_t i = 0; i < f->weights.size(); ++i) {
        if (f->weights[i].is_zero()) cs.finite_zero_positions.push_back(i);
      }
    } else if (const auto* r = std::get_if<ForwardRayComponent>(&c.kind)) {
      ZeroPattern zp(r->weights, false);
      for (std::uint64_t i = 0; i < zp.prefix_len(); ++i) {
        if (zp.is_zero_at(i)) cs.finite_zero_positions.push_back(i);
      }
      for (std::uint64_t o = 0; o < r->weights.block.size(); ++o) {
        if (r->weights.block[o].is_zero()) cs.block_zero_offsets.push_back(o);
      }
      finite = cs.block_zero_offsets.empty();
    } else if (const auto* b = std::get_if<BiRayComponent>(&c.kind)) {
      for (std::uint64_t o = 0; o < b->block.size(); ++o) {
        if (b->block[o].is_zero()) cs.block_zero_offsets.push_back(o);
      }
      finite = cs.block_zero_offsets.empty();
    } else if (const auto* t = std::get_if<BackwardTailComponent>(&c.kind)) {
      ZeroPattern zp(t->weights, false);
      for (std::uint64_t i = 0; i < zp.prefix_len(); ++i) {
        if (zp.is_zero_at(i)) cs.finite_zero_positions.push_back(i);
      }
      for (std::uint64_t o = 0; o < t->weights.block.size(); ++o) {
        if (t->weights.block[o].is_zero()) cs.block_zero_offsets.push_back(o);
      }
      finite = cs.block_zero_offsets.empty();
    } else if (const auto* cf = std::get_if<CycleFamilyComponent>(&c.kind)) {
      ZeroPattern zp(cf->weights, false);
      std::uint64_t used = cf->lengths.unbounded()
                               ? LengthSpec::LENGTH_CAP
                               : cf->lengths.c;
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(zp.prefix_len(), used); ++i) {
        if (zp.is_zero_at(i)) cs.finite_zero_positions.push_back(i);
      }
      for (std::uint64_t o = 0; o < cf->weights.block.size(); ++o) {
        std::uint64_t pos = zp.prefix_len() + o;
        if (pos < used && cf->weights.block[o].is_zero()) cs.block_zero_offsets.push_back(o);
      }
      // a used zero repeats across infinitely many members
      finite = cs.finite_zero_positions.empty() && cs.block_zero_offsets.empty();
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      ZeroPattern zp(tf->weights, false);
      for (std::uint64_t i = 0; i < zp.prefix_len(); ++i) {
        if (zp.is_zero_at(i)) cs.finite_zero_positions.push_back(i);
      }
      for (std::uint64_t o = 0; o < tf->weights.block.size(); ++o) {
        if (tf->weights.block[o].is_zero()) cs.block_zero_offsets.push_back(o);
      }
      bool target_finite = false;
      if (const Component* tgt = p.find(tf->target_component)) {
        target_finite = component_node_count(*tgt).has_value();
      }
      finite = zp.zero_free() || (target_finite && cs.block_zero_offsets.empty());
    }
    if (!cs.finite_zero_positions.empty() || !cs.block_zero_offsets.empty()) {
      s.zero_set_empty = false;
    }
    if (!finite) s.zero_set_finite = false;
    s.per_component.push_back(std::move(cs));
  }
  return s;
}

} // namespace wgs
