#include "wgshift/finite_lab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wgshift/errors.hpp"

namespace wgs {

namespace {

constexpr std::uint64_t STATE_CAP = std::uint64_t{1} << 20;
constexpr std::uint64_t ITERATE_CAP = std::uint64_t{1} << 16;

void check_shape(const FiniteSystem& s) {
  if (s.map.empty() || s.map.size() != s.weights.size())
    throw Error(ErrorCode::SizeMismatch, "map and weights must be nonempty and equal length");
  for (std::size_t t : s.map)
    if (t >= s.map.size())
      throw Error(ErrorCode::AddressOutOfRange, "map leaves the index set");
}

} // namespace

std::uint64_t state_count(const FiniteSystem& s) {
  check_shape(s);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    n *= s.field.p();
    if (n > STATE_CAP)
      throw Error(ErrorCode::StateSpaceTooLarge,
                  "configuration space exceeds enumeration cap");
  }
  return n;
}

std::vector<FieldElement> decode_state(const FiniteSystem& s, std::uint64_t code) {
  std::vector<FieldElement> x;
  x.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    x.emplace_back(s.field, code % s.field.p());
    code /= s.field.p();
  }
  return x;
}

std::uint64_t encode_state(const FiniteSystem& s, const std::vector<FieldElement>& x) {
  if (x.size() != s.size())
    throw Error(ErrorCode::SizeMismatch, "configuration length mismatch");
  std::uint64_t code = 0;
  for (std::size_t i = x.size(); i-- > 0;) code = code * s.field.p() + x[i].value();
  return code;
}

std::vector<FieldElement> apply_shift(const FiniteSystem& s,
                                      const std::vector<FieldElement>& x) {
  std::vector<FieldElement> y;
  y.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) y.push_back(s.weights[i] * x[s.map[i]]);
  return y;
}

std::vector<std::uint32_t> transition_table(const FiniteSystem& s) {
  std::uint64_t states = state_count(s);
  std::vector<std::uint32_t> t(states);
  for (std::uint64_t c = 0; c < states; ++c)
    t[c] = static_cast<std::uint32_t>(encode_state(s, apply_shift(s, decode_state(s, c))));
  return t;
}

bool check_composition_law(const FiniteSystem& f, const FiniteSystem& g) {
  if (!(f.field == g.field) || f.size() != g.size())
    throw Error(ErrorCode::SpecMismatch, "composition needs matching field and index set");
  FiniteSystem fg;
  fg.field = f.field;
  fg.map.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    fg.map[i] = f.map[g.map[i]];
    fg.weights.push_back(g.weights[i] * f.weights[g.map[i]]);
  }
  std::vector<std::uint32_t> tf = transition_table(f);
  std::vector<std::uint32_t> tg = transition_table(g);
  std::vector<std::uint32_t> tfg = transition_table(fg);
  for (std::uint64_t c = 0; c < tf.size(); ++c)
    if (tg[tf[c]] != tfg[c]) return false;
  return true;
}

bool iterate_formula_check(const FiniteSystem& s, unsigned k) {
  std::uint64_t states = state_count(s);
  std::vector<std::uint32_t> t = transition_table(s);
  for (std::uint64_t c = 0; c < states; ++c) {
    std::uint64_t it = c;
    for (unsigned j = 0; j < k; ++j) it = t[it];
    std::vector<FieldElement> x = decode_state(s, c);
    std::vector<FieldElement> y;
    for (std::size_t i = 0; i < s.size(); ++i) {
      FieldElement prod(s.field, 1);
      std::size_t cur = i;
      for (unsigned j = 0; j < k; ++j) {
        prod = prod * s.weights[cur];
        cur = s.map[cur];
      }
      y.push_back(prod * x[cur]);
    }
    if (encode_state(s, y) != it) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> quasi_period_pair(const FiniteSystem& s) {
  std::vector<std::uint32_t> t = transition_table(s);
  std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
  std::vector<std::uint32_t> cur = t;
  for (std::uint64_t k = 1; k <= ITERATE_CAP; ++k) {
    auto [it, fresh] = seen.emplace(cur, k);
    if (!fresh) return {it->second, k};
    for (auto& v : cur) v = t[v];
  }
  throw Error(ErrorCode::StateSpaceTooLarge, "iterate sequence did not repeat in cap");
}

bool quasi_period_identity_check(const FiniteSystem& s, std::uint64_t n,
                                 std::uint64_t m) {
  check_shape(s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::size_t cn = a, cm = a;
    for (std::uint64_t j = 0; j < n; ++j) cn = s.map[cn];
    for (std::uint64_t j = 0; j < m; ++j) cm = s.map[cm];
    if (cn == cm) continue;
    FieldElement prod(s.field, 1);
    std::size_t cur = a;
    for (std::uint64_t j = 0; j < n; ++j) {
      prod = prod * s.weights[cur];
      cur = s.map[cur];
    }
    if (!prod.is_zero()) return false;
  }
  return true;
}

std::uint64_t tau_sup_exhaustive(const FiniteSystem& s) {
  check_shape(s);
  std::uint64_t best_nodes = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::vector<bool> seen(s.size(), false);
    std::size_t cur = a;
    std::uint64_t nodes = 0;
    while (!seen[cur] && !s.weights[cur].is_zero()) {
      seen[cur] = true;
      ++nodes;
      cur = s.map[cur];
    }
    best_nodes = std::max(best_nodes, nodes);
  }
  return best_nodes == 0 ? 0 : best_nodes - 1;
}

FibreCheck fibre_size_check(const FiniteSystem& s) {
  std::uint64_t states = state_count(s);
  std::vector<std::uint32_t> t = transition_table(s);
  std::vector<std::uint64_t> count(states, 0);
  for (std::uint64_t c = 0; c < states; ++c) ++count[t[c]];

  FibreCheck out;
  std::vector<bool> hit(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s.weights[i].is_zero()) hit[s.map[i]] = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!hit[i]) out.gap.push_back(i);

  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < out.gap.size(); ++i) expected *= s.field.p();
  out.fibre_size = expected;
  out.uniform = true;
  for (std::uint64_t c = 0; c < states; ++c) {
    if (count[c] != 0 && count[c] != expected) {
      out.uniform = false;
      break;
    }
  }
  return out;
}

CoverResult surjective_cover(const FiniteSystem& s) {
  std::uint64_t states = state_count(s);
  std::vector<std::uint32_t> t = transition_table(s);
  std::vector<bool> cur(states, true);
  std::uint64_t cur_size = states;
  CoverResult out;
  for (std::uint64_t k = 1;; ++k) {
    std::vector<bool> next(states, false);
    std::uint64_t next_size = 0;
    for (std::uint64_t c = 0; c < states; ++c) {
      if (!cur[c]) continue;
      if (!next[t[c]]) {
        next[t[c]] = true;
        ++next_size;
      }
    }
    out.image_sizes.push_back(next_size);
    if (next_size == cur_size && next == cur) {
      out.stabilized_after = k;
      break;
    }
    cur = std::move(next);
    cur_size = next_size;
  }
  for (std::uint64_t c = 0; c < states; ++c)
    if (cur[c]) out.cover.push_back(static_cast<std::uint32_t>(c));
  return out;
}

bool cover_vanishes_outside_lambda(const FiniteSystem& s, const CoverResult& c) {
  std::vector<bool> orbit_hits_zero(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t cur = i;
    for (std::size_t step = 0; step <= s.size(); ++step) {
      if (s.weights[cur].is_zero()) {
        orbit_hits_zero[i] = true;
        break;
      }
      cur = s.map[cur];
    }
  }
  for (std::uint32_t code : c.cover) {
    std::vector<FieldElement> x = decode_state(s, code);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (orbit_hits_zero[i] && !x[i].is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> fixed_points_of(const FiniteSystem& s) {
  std::vector<std::size_t> fix;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.map[i] == i) fix.push_back(i);
  return fix;
}

bool index_is_periodic(const FiniteSystem& s, std::size_t i) {
  std::size_t cur = i;
  for (std::size_t step = 1; step <= s.size(); ++step) {
    cur = s.map[cur];
    if (cur == i) return true;
  }
  return false;
}

} // namespace

FixBijectionResult fix_bijection_check(const FiniteSystem& s) {
  check_shape(s);
  for (const FieldElement& w : s.weights)
    if (w.is_zero())
      throw Error(ErrorCode::HypothesisNotMet, "all weights must be nonzero");
  std::vector<std::size_t> fix = fixed_points_of(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (index_is_periodic(s, i) &&
        !std::binary_search(fix.begin(), fix.end(), i))
      throw Error(ErrorCode::HypothesisNotMet,
                  "periodic indices must all be fixed");
  }

  FixBijectionResult out;
  out.fixed_points = fix;

  // x_t -> w_t x_t coordinatewise on fixed coordinates: check permutation
  std::uint64_t fix_states = 1;
  for (std::size_t i = 0; i < fix.size(); ++i) {
    fix_states *= s.field.p();
    if (fix_states > STATE_CAP)
      throw Error(ErrorCode::StateSpaceTooLarge, "too many fixed coordinates");
  }
  std::set<std::vector<std::uint32_t>> images;
  for (std::uint64_t c = 0; c < fix_states; ++c) {
    std::uint64_t rem = c;
    std::vector<std::uint32_t> y;
    for (std::size_t t : fix) {
      FieldElement xt(s.field, rem % s.field.p());
      rem /= s.field.p();
      y.push_back((s.weights[t] * xt).value());
    }
    images.insert(y);
  }
  out.fixed_restriction_bijective = images.size() == fix_states;

  CoverResult cover = surjective_cover(s);
  std::set<std::vector<std::uint32_t>> projections;
  for (std::uint32_t code : cover.cover) {
    std::vector<FieldElement> x = decode_state(s, code);
    std::vector<std::uint32_t> proj;
    for (std::size_t t : fix) proj.push_back(x[t].value());
    projections.insert(proj);
  }
  out.projection_bijective =
      projections.size() == cover.cover.size() && projections.size() == fix_states;
  return out;
}

QuotientResult quotient_check(const FiniteSystem& s) {
  check_shape(s);
  std::size_t n = s.size();
  // two indices merge iff the n-th map iterate agrees on them (merges happen
  // within n steps and persist)
  std::vector<std::size_t> iter(n);
  for (std::size_t i = 0; i < n; ++i) iter[i] = i;
  for (std::size_t step = 0; step < n; ++step)
    for (std::size_t i = 0; i < n; ++i) iter[i] = s.map[iter[i]];

  QuotientResult out;
  out.class_of.resize(n);
  std::map<std::size_t, std::size_t> rep; // iterate value -> representative
  for (std::size_t i = 0; i < n; ++i)
    out.class_of[i] = rep.emplace(iter[i], i).first->second;
  out.class_count = rep.size();

  // induced map on classes: class_of(i) -> class_of(map(i))
  std::map<std::size_t, std::size_t> induced;
  bool well_defined = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = induced.emplace(out.class_of[i], out.class_of[s.map[i]]);
    if (!fresh && it->second != out.class_of[s.map[i]]) well_defined = false;
  }
  std::set<std::size_t> induced_images;
  for (const auto& [from, to] : induced) induced_images.insert(to);
  out.induced_map_injective = well_defined && induced_images.size() == induced.size();

  out.periods_match = true;
  for (std::size_t i = 0; i < n && out.periods_match; ++i) {
    if (!index_is_periodic(s, i)) continue;
    std::size_t q = 0, cur = i;
    do {
      cur = s.map[cur];
      ++q;
    } while (cur != i);
    // period of the class under the induced map
    std::size_t cls = out.class_of[i], cc = cls, qq = 0;
    do {
      cc = induced.at(cc);
      ++qq;
      if (qq > n) break;
    } while (cc != cls);
    if (qq != q) out.periods_match = false;
  }
  return out;
}

bool star_identity_check(const FiniteSystem& s, std::size_t beta) {
  check_shape(s);
  if (beta >= s.size() || !index_is_periodic(s, beta))
    throw Error(ErrorCode::NotPeriodic, "star identity needs a periodic index");
  std::size_t q = 0, cur = beta;
  do {
    cur = s.map[cur];
    ++q;
  } while (cur != beta);

  auto product_over = [&](std::uint64_t steps) {
    FieldElement prod(s.field, 1);
    std::size_t c = beta;
    for (std::uint64_t j = 0; j < steps; ++j) {
      prod = prod * s.weights[c];
      c = s.map[c];
    }
    return prod;
  };
  return product_over(static_cast<std::uint64_t>(s.field.p()) * q) == product_over(q);
}

bool indicator_conjugacy_check(const FiniteSystem& s) {
  for (const FieldElement& w : s.weights)
    if (w.is_zero())
      throw Error(ErrorCode::HypothesisNotMet, "all weights must be nonzero");
  FiniteSystem two;
  two.field = FieldSpec(2);
  two.map = s.map;
  for (std::size_t i = 0; i < s.size(); ++i) two.weights.emplace_back(two.field, 1);

  std::uint64_t states = state_count(s);
  auto indicator = [&](const std::vector<FieldElement>& x) {
    std::vector<FieldElement> y;
    for (const FieldElement& v : x) y.emplace_back(two.field, v.is_zero() ? 0 : 1);
    return y;
  };
  for (std::uint64_t c = 0; c < states; ++c) {
    std::vector<FieldElement> x = decode_state(s, c);
    std::vector<FieldElement> lhs = indicator(apply_shift(s, x));
    std::vector<FieldElement> rhs = apply_shift(two, indicator(x));
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) return false;
  }
  return true;
}

FiniteSystem finite_system_from_presentation(const Presentation& p) {
  FiniteSystem s;
  s.field = p.field;
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const Component& c : p.components) {
    const auto* f = std::get_if<FiniteComponent>(&c.kind);
    if (!f)
      throw Error(ErrorCode::SpecMismatch,
                  "flattening requires every component finite, got " +
                      std::string(component_kind_name(c.kind)) + " " + c.id);
    offset[c.id] = total;
    total += f->map.size();
  }
  s.map.resize(total);
  s.weights.reserve(total);
  for (const Component& c : p.components) {
    const auto& f = std::get<FiniteComponent>(c.kind);
    std::size_t base = offset[c.id];
    for (std::size_t i = 0; i < f.map.size(); ++i) {
      s.map[base + i] = base + f.map[i];
      s.weights.push_back(f.weights[i]);
    }
  }
  return s;
}

Presentation presentation_from_finite_system(const FiniteSystem& s) {
  check_shape(s);
  Presentation p;
  p.field = s.field;
  FiniteComponent f;
  f.map.assign(s.map.begin(), s.map.end());
  f.weights = s.weights;
  p.components.push_back(Component{"gamma", ComponentKind{std::move(f)}});
  return p;
}

} // namespace wgs
