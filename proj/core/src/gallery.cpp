#include "wgshift/gallery.hpp"

#include <random>

#include "wgshift/errors.hpp"

namespace wgs {

namespace {

EventuallyPeriodicWord make_word(const FieldSpec& f,
                                 const std::vector<std::uint32_t>& prefix,
                                 const std::vector<std::uint32_t>& block) {
  EventuallyPeriodicWord w;
  for (std::uint32_t v : prefix) w.prefix.emplace_back(f, v);
  for (std::uint32_t v : block) w.block.emplace_back(f, v);
  return w;
}

Component finite_comp(const FieldSpec& f, std::string id,
                      std::vector<std::uint32_t> map,
                      const std::vector<std::uint32_t>& weights) {
  FiniteComponent c;
  c.map = std::move(map);
  for (std::uint32_t v : weights) c.weights.emplace_back(f, v);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

Component ray_comp(const FieldSpec& f, std::string id,
                   const std::vector<std::uint32_t>& prefix,
                   const std::vector<std::uint32_t>& block) {
  ForwardRayComponent c;
  c.weights = make_word(f, prefix, block);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

Component biray_comp(const FieldSpec& f, std::string id,
                     const std::vector<std::uint32_t>& block) {
  BiRayComponent c;
  for (std::uint32_t v : block) c.block.emplace_back(f, v);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

Component tail_comp(const FieldSpec& f, std::string id, NodeAddress target,
                    const std::vector<std::uint32_t>& prefix,
                    const std::vector<std::uint32_t>& block) {
  BackwardTailComponent c;
  c.target = std::move(target);
  c.weights = make_word(f, prefix, block);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

Component family_comp(const FieldSpec& f, std::string id, LengthSpec lengths,
                      const std::vector<std::uint32_t>& prefix,
                      const std::vector<std::uint32_t>& block) {
  CycleFamilyComponent c;
  c.lengths = lengths;
  c.weights = make_word(f, prefix, block);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

Component tail_family_comp(const FieldSpec& f, std::string id,
                           std::string target_component,
                           const std::vector<std::uint32_t>& prefix,
                           const std::vector<std::uint32_t>& block) {
  TailFamilyComponent c;
  c.target_component = std::move(target_component);
  c.weights = make_word(f, prefix, block);
  return Component{std::move(id), ComponentKind{std::move(c)}};
}

LengthSpec constant_lengths(std::uint64_t c) {
  LengthSpec l;
  l.kind = LengthSpec::Kind::Constant;
  l.c = c;
  return l;
}

LengthSpec geometric_lengths(std::uint64_t base, std::uint64_t b) {
  LengthSpec l;
  l.kind = LengthSpec::Kind::Geometric;
  l.base = base;
  l.b = b;
  return l;
}

LengthSpec linear_lengths(std::uint64_t a, std::uint64_t b) {
  LengthSpec l;
  l.kind = LengthSpec::Kind::Linear;
  l.a = a;
  l.b = b;
  return l;
}

std::vector<GalleryEntry> build_gallery() {
  std::vector<GalleryEntry> out;

  {
    // doubly infinite chain, weights vanishing on every second node
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(biray_comp(f, "line", {0, 1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = false;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Zero;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::NotFiniteFibre;
    e.ent_cset_unweighted = CsetClass::Infinite;
    e.tau_unbounded = false;
    e.tau_value = 0;
    out.push_back({"counterexample_3_4",
                   "two-sided chain, alternating zero weights", std::move(p), e});
  }

  {
    // one-way chain with alternating zero weights, everything else fixed
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(ray_comp(f, "ray", {}, {1, 0}));
    p.components.push_back(family_comp(f, "rest", constant_lengths(1), {}, {1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = false;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Zero;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::NotFiniteFibre;
    e.ent_cset_unweighted = CsetClass::Infinite;
    e.tau_unbounded = false;
    e.tau_value = 0;
    out.push_back({"badr5000",
                   "one-way chain with alternating zero weights over fixed points",
                   std::move(p), e});
  }

  auto theta1 = [](std::uint32_t cycle_w, std::uint32_t seed_w) {
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(
        family_comp(f, "cycles", geometric_lengths(2, 1), {}, {cycle_w}));
    p.components.push_back(tail_family_comp(f, "onto_cycles", "cycles", {}, {1}));
    p.components.push_back(finite_comp(f, "seed", {0}, {seed_w}));
    p.components.push_back(
        tail_comp(f, "onto_seed", NodeAddress{"seed", 1, 0}, {}, {1}));
    p.components.push_back(family_comp(f, "rest", constant_lengths(1), {}, {1}));
    return p;
  };

  {
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Infinite;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::Infinite;
    e.ent_cset_unweighted = CsetClass::Infinite;
    e.tau_unbounded = true;
    out.push_back({"theta1_u",
                   "doubling cycles fed by tails, unit weights", theta1(1, 1), e});
  }

  {
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Infinite;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::Zero;
    e.ent_cset_unweighted = CsetClass::Infinite;
    e.tau_unbounded = true;
    out.push_back({"theta1_v",
                   "doubling cycles fed by tails, weights vanish on the cycles",
                   theta1(0, 0), e});
  }

  {
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(finite_comp(f, "seed", {0}, {1}));
    p.components.push_back(
        tail_comp(f, "stem", NodeAddress{"seed", 1, 0}, {}, {1}));
    p.components.push_back(family_comp(f, "rest", constant_lengths(1), {}, {1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Infinite;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::Zero;
    e.ent_cset_unweighted = CsetClass::Zero;
    e.tau_unbounded = true;
    out.push_back({"theta2",
                   "one tail collapsing onto a fixed point", std::move(p), e});
  }

  {
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(ray_comp(f, "ray", {}, {1}));
    p.components.push_back(
        tail_comp(f, "feed", NodeAddress{"ray", 1, 0}, {}, {1}));
    p.components.push_back(family_comp(f, "rest", constant_lengths(1), {}, {1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Infinite;
    e.ent_set_unweighted = EntropyClass::Infinite;
    e.ent_cset_weighted = CsetClass::Infinite;
    e.ent_cset_unweighted = CsetClass::Infinite;
    e.tau_unbounded = true;
    out.push_back({"theta3",
                   "one-way chain fed through a tail at its origin", std::move(p), e});
  }

  {
    FieldSpec f(3);
    Presentation p;
    p.field = f;
    p.components.push_back(finite_comp(f, "gamma", {1, 0}, {1, 1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Zero;
    e.ent_set_unweighted = EntropyClass::Zero;
    e.ent_cset_weighted = CsetClass::Zero;
    e.ent_cset_unweighted = CsetClass::Zero;
    e.tau_unbounded = false;
    e.tau_value = 1;
    out.push_back({"finite_demo_swap",
                   "two indices swapped, unit weights", std::move(p), e});
  }

  {
    FieldSpec f(2);
    Presentation p;
    p.field = f;
    p.components.push_back(finite_comp(f, "gamma", {0, 0, 0}, {1, 1, 1}));
    ExpectedFragment e;
    e.finite_fibre_weighted = true;
    e.finite_fibre_unweighted = true;
    e.ent_set_weighted = EntropyClass::Zero;
    e.ent_set_unweighted = EntropyClass::Zero;
    e.ent_cset_weighted = CsetClass::Zero;
    e.ent_cset_unweighted = CsetClass::Zero;
    e.tau_unbounded = false;
    e.tau_value = 1;
    out.push_back({"finite_demo_collapse",
                   "three indices collapsing to one", std::move(p), e});
  }

  return out;
}

} // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = build_gallery();
  return entries;
}

const GalleryEntry* find_entry(const std::string& name) {
  for (const GalleryEntry& e : gallery())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> fragment_mismatches(const ExpectedFragment& e,
                                             const EntropyReport& r) {
  std::vector<std::string> out;
  auto check = [&](const char* field, auto expected, auto actual) {
    if (expected && !(*expected == actual))
      out.push_back(std::string(field) + " differs");
  };
  check("finiteFibreWeighted", e.finite_fibre_weighted, r.finite_fibre_weighted);
  check("finiteFibreUnweighted", e.finite_fibre_unweighted,
        r.finite_fibre_unweighted);
  check("entSetWeighted", e.ent_set_weighted, r.ent_set_weighted);
  check("entSetUnweighted", e.ent_set_unweighted, r.ent_set_unweighted);
  check("entCsetWeighted", e.ent_cset_weighted, r.ent_cset_weighted);
  check("entCsetUnweighted", e.ent_cset_unweighted, r.ent_cset_unweighted);
  check("tauBound.unbounded", e.tau_unbounded, r.tau.unbounded);
  if (e.tau_value && !r.tau.unbounded && *e.tau_value != r.tau.value)
    out.push_back("tauBound.value differs");
  return out;
}

namespace {

// bounded draws; keeps generated words and components small
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::vector<std::uint32_t> draw_entries(std::mt19937_64& rng, const FieldSpec& f,
                                        std::size_t count, unsigned zero_percent) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (draw(rng, 1, 100) <= zero_percent) {
      out.push_back(0);
    } else {
      out.push_back(static_cast<std::uint32_t>(draw(rng, 1, f.p() - 1)));
    }
  }
  return out;
}

} // namespace

Presentation random_presentation(std::uint64_t seed, std::uint64_t budget) {
  if (budget == 0)
    throw Error(ErrorCode::ParseError, "budget must be positive");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  static const std::uint32_t primes[] = {2, 3, 5};
  FieldSpec f(primes[rng() % 3]);
  Presentation p;
  p.field = f;

  std::uint64_t count = draw(rng, 1, budget);
  std::vector<std::string> attachable; // non-tail component ids
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string id = "c" + std::to_string(i);
    std::uint64_t kind = draw(rng, 1, 100);
    unsigned zp = 20; // zero weight percentage
    auto prefix = draw_entries(rng, f, draw(rng, 0, 3), zp);
    auto block = draw_entries(rng, f, draw(rng, 1, 3), zp);
    if (kind <= 35) {
      std::size_t n = static_cast<std::size_t>(draw(rng, 1, 4));
      std::vector<std::uint32_t> map;
      for (std::size_t j = 0; j < n; ++j)
        map.push_back(static_cast<std::uint32_t>(draw(rng, 0, n - 1)));
      p.components.push_back(
          finite_comp(f, id, std::move(map), draw_entries(rng, f, n, zp)));
      attachable.push_back(id);
    } else if (kind <= 45) {
      p.components.push_back(ray_comp(f, id, prefix, block));
      attachable.push_back(id);
    } else if (kind <= 55) {
      p.components.push_back(biray_comp(f, id, block));
      attachable.push_back(id);
    } else if (kind <= 70 && !attachable.empty()) {
      const std::string& tid = attachable[rng() % attachable.size()];
      const Component& target = *p.find(tid);
      NodeAddress a{tid, 1, 0};
      if (const auto* fin = std::get_if<FiniteComponent>(&target.kind)) {
        a.position = static_cast<std::int64_t>(draw(rng, 0, fin->map.size() - 1));
      } else if (std::holds_alternative<BiRayComponent>(target.kind)) {
        a.position = static_cast<std::int64_t>(draw(rng, 0, 6)) - 3;
      } else if (std::holds_alternative<CycleFamilyComponent>(target.kind)) {
        a.member = draw(rng, 1, 3);
        a.position = 0;
      } else {
        a.position = static_cast<std::int64_t>(draw(rng, 0, 3));
      }
      p.components.push_back(tail_comp(f, id, a, prefix, block));
    } else if (kind <= 85) {
      LengthSpec l;
      std::uint64_t lk = draw(rng, 1, 10);
      if (lk <= 5) {
        l = constant_lengths(draw(rng, 1, 6));
      } else if (lk <= 8) {
        l = linear_lengths(draw(rng, 1, 3), draw(rng, 0, 4));
      } else {
        l = geometric_lengths(draw(rng, 2, 3), draw(rng, 1, 2));
      }
      p.components.push_back(family_comp(f, id, l, prefix, block));
      attachable.push_back(id);
    } else if (!attachable.empty()) {
      const std::string& tid = attachable[rng() % attachable.size()];
      p.components.push_back(tail_family_comp(f, id, tid, prefix, block));
    } else {
      p.components.push_back(finite_comp(f, id, {0}, draw_entries(rng, f, 1, zp)));
      attachable.push_back(id);
    }
  }
  std::vector<Violation> v = validate(p);
  if (!v.empty())
    throw Error(ErrorCode::InternalInconsistency,
                "generator produced an invalid presentation: " + v.front().detail);
  return p;
}

FiniteSystem random_finite_system(std::uint64_t seed, std::uint32_t p,
                                  std::size_t max_indices) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 7);
  FiniteSystem s;
  s.field = FieldSpec(p);
  std::size_t n = 1 + rng() % max_indices;
  for (std::size_t i = 0; i < n; ++i) {
    s.map.push_back(rng() % n);
    std::uint64_t v = rng() % 100 < 25 ? 0 : 1 + rng() % (p - 1);
    s.weights.emplace_back(s.field, v);
  }
  return s;
}

} // namespace wgs
