#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "wgshift/analyzer.hpp"
#include "wgshift/errors.hpp"
#include "wgshift/finite_lab.hpp"
#include "wgshift/gallery.hpp"

using namespace wgs;

namespace {

FiniteSystem sys(std::uint32_t p, std::vector<std::size_t> map,
                 std::vector<int> weights) {
  FiniteSystem s;
  s.field = FieldSpec(p);
  s.map = std::move(map);
  for (int w : weights)
    s.weights.push_back(FieldElement(s.field, static_cast<std::uint64_t>(w)));
  return s;
}

bool code_in(const std::vector<std::uint32_t>& cover, std::uint64_t code) {
  return std::find(cover.begin(), cover.end(),
                   static_cast<std::uint32_t>(code)) != cover.end();
}

} // namespace

TEST_CASE("state codec round-trips every configuration") {
  FiniteSystem s = sys(3, {1, 0, 2}, {1, 2, 0});
  REQUIRE(state_count(s) == 27);
  std::set<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < 27; ++c) {
    std::vector<FieldElement> x = decode_state(s, c);
    REQUIRE(x.size() == 3);
    CHECK(encode_state(s, x) == c);
    seen.insert(c);
  }
  CHECK(seen.size() == 27);
}

TEST_CASE("state space cap throws") {
  FiniteSystem s = sys(5, std::vector<std::size_t>(10, 0),
                       std::vector<int>(10, 1));
  CHECK_THROWS_AS((void)state_count(s), Error);
  try {
    (void)state_count(s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
}

TEST_CASE("shift application matches the coordinate formula") {
  FiniteSystem s = sys(5, {2, 0, 1}, {2, 3, 1});
  std::vector<FieldElement> x = {FieldElement(s.field, 1),
                                 FieldElement(s.field, 4),
                                 FieldElement(s.field, 2)};
  std::vector<FieldElement> y = apply_shift(s, x);
  REQUIRE(y.size() == 3);
  CHECK(y[0].value() == (2 * 2) % 5);
  CHECK(y[1].value() == (3 * 1) % 5);
  CHECK(y[2].value() == (1 * 4) % 5);
}

TEST_CASE("transition table is the encoded shift") {
  FiniteSystem s = sys(2, {1, 0, 1}, {1, 1, 0});
  std::vector<std::uint32_t> t = transition_table(s);
  REQUIRE(t.size() == state_count(s));
  for (std::uint64_t c = 0; c < t.size(); ++c)
    CHECK(t[c] == encode_state(s, apply_shift(s, decode_state(s, c))));
}

TEST_CASE("collapse map gives uniform fibres over its gap") {
  FiniteSystem s = sys(2, {0, 0, 0}, {1, 1, 1});
  FibreCheck f = fibre_size_check(s);
  CHECK(f.gap == std::vector<std::size_t>{1, 2});
  CHECK(f.fibre_size == 4);
  CHECK(f.uniform);
}

TEST_CASE("zero weights enlarge the gap") {
  FiniteSystem s = sys(2, {1, 0}, {1, 0});
  // index 0 is hit only through weight zero, so it joins the gap
  FibreCheck f = fibre_size_check(s);
  CHECK(f.gap == std::vector<std::size_t>{0});
  CHECK(f.fibre_size == 2);
  CHECK(f.uniform);
}

TEST_CASE("swap quasi-period pair") {
  FiniteSystem s = sys(3, {1, 0}, {1, 1});
  auto [n, m] = quasi_period_pair(s);
  CHECK(n == 1);
  CHECK(m == 3);
  CHECK(quasi_period_identity_check(s, n, m));
}

TEST_CASE("quotient merges indices with a common image") {
  FiniteSystem s = sys(3, {1, 2, 1}, {1, 1, 1});
  QuotientResult q = quotient_check(s);
  REQUIRE(q.class_of.size() == 3);
  CHECK(q.class_of[0] == q.class_of[2]);
  CHECK(q.class_of[0] != q.class_of[1]);
  CHECK(q.class_count == 2);
  CHECK(q.induced_map_injective);
  CHECK(q.periods_match);
}

TEST_CASE("cycle weight product identity") {
  FiniteSystem s = sys(3, {1, 2, 0, 3}, {1, 2, 2, 1});
  for (std::size_t beta : {0u, 1u, 2u, 3u}) CHECK(star_identity_check(s, beta));
  FiniteSystem t = sys(3, {1, 1}, {1, 1});
  CHECK_THROWS_AS((void)star_identity_check(t, 0), Error);
  try {
    (void)star_identity_check(t, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPeriodic);
  }
}

TEST_CASE("indicator conjugacy needs nonzero weights") {
  CHECK(indicator_conjugacy_check(sys(3, {1, 0, 2}, {1, 2, 2})));
  CHECK(indicator_conjugacy_check(sys(5, {2, 2, 1}, {3, 4, 1})));
  CHECK_THROWS_AS((void)indicator_conjugacy_check(sys(3, {1, 0}, {1, 0})),
                  Error);
}

TEST_CASE("fixed-coordinate bijection") {
  FiniteSystem good = sys(3, {0, 0, 1}, {1, 2, 2});
  // map: 0 fixed; 1 -> 0; 2 -> 1; only index 0 is periodic and it is fixed
  FixBijectionResult r = fix_bijection_check(good);
  CHECK(r.fixed_points == std::vector<std::size_t>{0});
  CHECK(r.fixed_restriction_bijective);
  CHECK(r.projection_bijective);

  // a swap has periodic indices that are not fixed
  CHECK_THROWS_AS((void)fix_bijection_check(sys(3, {1, 0}, {1, 1})), Error);
  // zero weights void the hypothesis
  CHECK_THROWS_AS((void)fix_bijection_check(sys(3, {0, 0}, {1, 0})), Error);
  try {
    (void)fix_bijection_check(sys(3, {1, 0}, {1, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisNotMet);
  }
}

TEST_CASE("surjective core vanishes where orbits die") {
  FiniteSystem s = sys(2, {0, 0, 1}, {1, 0, 1});
  CoverResult c = surjective_cover(s);
  REQUIRE_FALSE(c.image_sizes.empty());
  // image sizes never grow
  for (std::size_t i = 1; i < c.image_sizes.size(); ++i)
    CHECK(c.image_sizes[i] <= c.image_sizes[i - 1]);
  CHECK(cover_vanishes_outside_lambda(s, c));
  // the shift must permute its stable core
  std::vector<std::uint32_t> t = transition_table(s);
  std::set<std::uint32_t> image;
  for (std::uint32_t code : c.cover) image.insert(t[code]);
  CHECK(image.size() == c.cover.size());
  for (std::uint32_t code : image) CHECK(code_in(c.cover, code));
}

TEST_CASE("round trip through a presentation preserves the analysis") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CAPTURE(seed);
    FiniteSystem s = random_finite_system(seed, 3, 6);
    Presentation p = presentation_from_finite_system(s);
    REQUIRE(validate(p).empty());
    FiniteSystem back = finite_system_from_presentation(p);
    REQUIRE(back.map == s.map);
    REQUIRE(back.weights.size() == s.weights.size());
    for (std::size_t i = 0; i < s.weights.size(); ++i)
      CHECK(back.weights[i] == s.weights[i]);
  }
}

TEST_CASE("flattening rejects infinite components") {
  const GalleryEntry* e = find_entry("theta3");
  REQUIRE(e != nullptr);
  CHECK_THROWS_AS((void)finite_system_from_presentation(e->presentation),
                  Error);
}

TEST_CASE("operator identities hold on generated systems") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    std::uint32_t p = (seed % 3 == 0) ? 5 : (seed % 3 == 1 ? 2 : 3);
    std::size_t cap = p == 5 ? 5 : (p == 3 ? 7 : 10);
    FiniteSystem s = random_finite_system(seed, p, cap);
    FiniteSystem g = random_finite_system(seed + 1000, p, s.size());

    CHECK(check_composition_law(s, s));
    if (g.size() == s.size()) CHECK(check_composition_law(s, g));
    for (unsigned k = 1; k <= 4; ++k) CHECK(iterate_formula_check(s, k));

    auto [n, m] = quasi_period_pair(s);
    CHECK(1 <= n);
    CHECK(n < m);
    CHECK(quasi_period_identity_check(s, n, m));

    CoverResult c = surjective_cover(s);
    CHECK(cover_vanishes_outside_lambda(s, c));
  }
}

TEST_CASE("exhaustive tau matches the structural classifier") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    FiniteSystem s = random_finite_system(seed, 3, 7);
    Presentation p = presentation_from_finite_system(s);
    TauBound t = tau_sup(p, true);
    REQUIRE_FALSE(t.unbounded);
    CHECK(t.value == tau_sup_exhaustive(s));
  }
}

TEST_CASE("fibre gaps match the structural summary") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    FiniteSystem s = random_finite_system(seed, 2, 8);
    Presentation p = presentation_from_finite_system(s);
    FibreGapSummary g = is_finite_fibre(p, true);
    REQUIRE(g.finite);
    FibreCheck f = fibre_size_check(s);
    CHECK(f.uniform);
    std::vector<std::size_t> from_summary;
    for (const NodeAddress& a : g.members)
      from_summary.push_back(static_cast<std::size_t>(a.position));
    CHECK(from_summary == f.gap);
    // fibre sizes are the configuration count of the gap coordinates
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < f.gap.size(); ++i) expect *= 2;
    CHECK(f.fibre_size == expect);
  }
}

TEST_CASE("generated systems are deterministic") {
  for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
    FiniteSystem a = random_finite_system(seed, 3, 8);
    FiniteSystem b = random_finite_system(seed, 3, 8);
    CHECK(a.map == b.map);
    REQUIRE(a.weights.size() == b.weights.size());
    for (std::size_t i = 0; i < a.weights.size(); ++i)
      CHECK(a.weights[i] == b.weights[i]);
  }
}
