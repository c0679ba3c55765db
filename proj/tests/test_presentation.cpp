#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "wgshift/presentation.hpp"
#include "wgshift/presentation_io.hpp"

using namespace wgs;

namespace {

FieldElement fe(const FieldSpec& f, std::uint64_t v) { return FieldElement(f, v); }

EventuallyPeriodicWord word(const FieldSpec& f, std::vector<int> pre,
                            std::vector<int> blk) {
  EventuallyPeriodicWord w;
  for (int v : pre) w.prefix.push_back(fe(f, static_cast<std::uint64_t>(v)));
  for (int v : blk) w.block.push_back(fe(f, static_cast<std::uint64_t>(v)));
  return w;
}

// One presentation exercising every component kind at once.
Presentation sample() {
  FieldSpec f(3);
  Presentation p{f, {}};

  FiniteComponent fin;
  fin.map = {1, 0, 2};
  fin.weights = {fe(f, 1), fe(f, 2), fe(f, 0)};
  p.components.push_back({"fin", std::move(fin)});

  ForwardRayComponent ray;
  ray.weights = word(f, {0, 1}, {2});
  p.components.push_back({"ray", std::move(ray)});

  BiRayComponent line;
  line.block = {fe(f, 1), fe(f, 0)};
  p.components.push_back({"line", std::move(line)});

  BackwardTailComponent tail;
  tail.target = {"fin", 1, 2};
  tail.weights = word(f, {2}, {1, 0});
  p.components.push_back({"tail", std::move(tail)});

  CycleFamilyComponent fam;
  fam.lengths.kind = LengthSpec::Kind::Linear;
  fam.lengths.a = 2;
  fam.lengths.b = 1; // member k is a cycle of length 2k+1
  fam.weights = word(f, {1}, {1, 0});
  p.components.push_back({"fam", std::move(fam)});

  TailFamilyComponent onto;
  onto.target_component = "fin";
  onto.weights = word(f, {}, {1});
  p.components.push_back({"onto_fin", std::move(onto)});

  return p;
}

bool throws_code(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

std::uint64_t modexp(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (__uint128_t(r) * b) % m;
    b = (__uint128_t(b) * b) % m;
    e >>= 1;
  }
  return r;
}

} // namespace

TEST_CASE("length specs evaluate, saturate, and reduce exactly") {
  LengthSpec cst;
  cst.kind = LengthSpec::Kind::Constant;
  cst.c = 5;
  CHECK(!cst.unbounded());
  CHECK(cst.length(1) == 5);
  CHECK(cst.length(999) == 5);

  LengthSpec lin;
  lin.kind = LengthSpec::Kind::Linear;
  lin.a = 2;
  lin.b = 1;
  CHECK(lin.unbounded());
  CHECK(lin.length(3) == 7);
  for (std::uint64_t k = 1; k < 40; ++k)
    for (std::uint64_t m : {2ull, 3ull, 7ull, 10ull})
      CHECK(lin.length_mod(k, m) == (2 * k + 1) % m);

  LengthSpec geo;
  geo.kind = LengthSpec::Kind::Geometric;
  geo.base = 3;
  geo.b = 2;
  CHECK(geo.unbounded());
  CHECK(geo.length(4) == 162);
  CHECK(geo.length(200) == LengthSpec::LENGTH_CAP);
  for (std::uint64_t k : {1ull, 5ull, 40ull, 100ull, 200ull})
    for (std::uint64_t m : {2ull, 3ull, 5ull, 7ull, 12ull})
      CHECK(geo.length_mod(k, m) == (2 * modexp(3, k, m)) % m);

  LengthSpec lin_big;
  lin_big.kind = LengthSpec::Kind::Linear;
  lin_big.a = std::uint64_t(1) << 40;
  lin_big.b = 0;
  CHECK(lin_big.length(std::uint64_t(1) << 40) == LengthSpec::LENGTH_CAP);
}

TEST_CASE("phi follows the arrows of every component kind") {
  Presentation p = sample();
  auto step = [&](const char* c, std::uint64_t m, std::int64_t pos) {
    return eval_phi(p, {c, m, pos});
  };
  CHECK(step("fin", 1, 0) == NodeAddress{"fin", 1, 1});
  CHECK(step("fin", 1, 1) == NodeAddress{"fin", 1, 0});
  CHECK(step("fin", 1, 2) == NodeAddress{"fin", 1, 2});
  CHECK(step("ray", 1, 0) == NodeAddress{"ray", 1, 1});
  CHECK(step("ray", 1, 7) == NodeAddress{"ray", 1, 8});
  CHECK(step("line", 1, -2) == NodeAddress{"line", 1, -1});
  CHECK(step("line", 1, 3) == NodeAddress{"line", 1, 4});
  CHECK(step("tail", 1, 3) == NodeAddress{"tail", 1, 2});
  CHECK(step("tail", 1, 1) == NodeAddress{"fin", 1, 2});
  CHECK(step("fam", 1, 2) == NodeAddress{"fam", 1, 0});  // member 1: length 3
  CHECK(step("fam", 2, 3) == NodeAddress{"fam", 2, 4});
  CHECK(step("fam", 2, 4) == NodeAddress{"fam", 2, 0});  // member 2: length 5
  CHECK(step("onto_fin", 2, 3) == NodeAddress{"onto_fin", 2, 2});
  CHECK(step("onto_fin", 2, 1) == NodeAddress{"fin", 1, 1});
}

TEST_CASE("weights read the component words at the right offsets") {
  Presentation p = sample();
  auto wt = [&](const char* c, std::uint64_t m, std::int64_t pos) {
    return eval_weight(p, {c, m, pos}).value();
  };
  CHECK(wt("fin", 1, 0) == 1);
  CHECK(wt("fin", 1, 2) == 0);
  CHECK(wt("ray", 1, 0) == 0);
  CHECK(wt("ray", 1, 1) == 1);
  CHECK(wt("ray", 1, 2) == 2);
  CHECK(wt("ray", 1, 9) == 2);
  CHECK(wt("line", 1, 0) == 1);
  CHECK(wt("line", 1, 1) == 0);
  CHECK(wt("line", 1, -1) == 0); // floor residue: -1 mod 2 is offset 1
  CHECK(wt("line", 1, -2) == 1);
  CHECK(wt("tail", 1, 1) == 2); // depth j reads word position j-1
  CHECK(wt("tail", 1, 2) == 1);
  CHECK(wt("tail", 1, 3) == 0);
  CHECK(wt("fam", 3, 0) == 1);
  CHECK(wt("fam", 3, 2) == 0);
  CHECK(wt("onto_fin", 3, 5) == 1);
}

TEST_CASE("address membership separates valid from invalid nodes") {
  Presentation p = sample();
  CHECK(contains_address(p, {"fin", 1, 2}));
  CHECK(!contains_address(p, {"fin", 1, 3}));
  CHECK(!contains_address(p, {"fin", 2, 0}));
  CHECK(contains_address(p, {"ray", 1, 0}));
  CHECK(!contains_address(p, {"ray", 1, -1}));
  CHECK(contains_address(p, {"line", 1, -100}));
  CHECK(contains_address(p, {"tail", 1, 1}));
  CHECK(!contains_address(p, {"tail", 1, 0}));
  CHECK(contains_address(p, {"fam", 2, 4}));
  CHECK(!contains_address(p, {"fam", 2, 5}));
  CHECK(!contains_address(p, {"nope", 1, 0}));
  CHECK(throws_code(ErrorCode::AddressOutOfRange,
                    [&] { eval_phi(p, {"fin", 1, 9}); }));
}

TEST_CASE("node enumeration is duplicate-free, valid, and monotone") {
  Presentation p = sample();
  auto small = enumerate_nodes(p, 3);
  auto large = enumerate_nodes(p, 5);
  std::set<NodeAddress> small_set(small.begin(), small.end());
  std::set<NodeAddress> large_set(large.begin(), large.end());
  CHECK(small_set.size() == small.size());
  CHECK(large_set.size() == large.size());
  for (const auto& a : small) {
    CHECK(contains_address(p, a));
    CHECK(large_set.count(a) == 1);
  }
  CHECK(large.size() > small.size());
}

TEST_CASE("structural preimages are exactly the brute-force preimages") {
  Presentation p = sample();
  std::map<NodeAddress, std::set<NodeAddress>> brute;
  for (const auto& b : enumerate_nodes(p, 12)) brute[eval_phi(p, b)].insert(b);
  for (const auto& a : enumerate_nodes(p, 4)) {
    std::set<NodeAddress> got;
    for (const auto& [pre, w] : structural_preimages(p, a)) {
      CHECK(eval_phi(p, pre) == a);
      CHECK(eval_weight(p, pre) == w);
      CHECK(got.insert(pre).second);
    }
    CHECK(got == brute[a]);
  }
}

TEST_CASE("tail family anchors invert the flat node order") {
  Presentation p = sample();
  const auto& tf = std::get<TailFamilyComponent>(p.find("onto_fin")->kind);
  CHECK(tail_family_anchor(p, tf, 1) == NodeAddress{"fin", 1, 0});
  CHECK(tail_family_anchor(p, tf, 2) == NodeAddress{"fin", 1, 1});
  CHECK(tail_family_anchor(p, tf, 3) == NodeAddress{"fin", 1, 2});
  for (std::uint64_t k = 1; k <= 3; ++k)
    CHECK(flat_node_index(p, tail_family_anchor(p, tf, k)) == k);

  // bi-ray targets zigzag outward
  TailFamilyComponent onto_line;
  onto_line.target_component = "line";
  onto_line.weights = word(p.field, {}, {1});
  CHECK(tail_family_anchor(p, onto_line, 1) == NodeAddress{"line", 1, 0});
  CHECK(tail_family_anchor(p, onto_line, 2) == NodeAddress{"line", 1, 1});
  CHECK(tail_family_anchor(p, onto_line, 3) == NodeAddress{"line", 1, -1});
  CHECK(tail_family_anchor(p, onto_line, 4) == NodeAddress{"line", 1, 2});
  CHECK(tail_family_anchor(p, onto_line, 5) == NodeAddress{"line", 1, -2});

  // cycle family targets run member-major
  TailFamilyComponent onto_fam;
  onto_fam.target_component = "fam";
  onto_fam.weights = word(p.field, {}, {1});
  CHECK(tail_family_anchor(p, onto_fam, 1) == NodeAddress{"fam", 1, 0});
  CHECK(tail_family_anchor(p, onto_fam, 3) == NodeAddress{"fam", 1, 2});
  CHECK(tail_family_anchor(p, onto_fam, 4) == NodeAddress{"fam", 2, 0});
  CHECK(tail_family_anchor(p, onto_fam, 8) == NodeAddress{"fam", 2, 4});
  CHECK(tail_family_anchor(p, onto_fam, 9) == NodeAddress{"fam", 3, 0});
}

TEST_CASE("component node counts distinguish finite from infinite") {
  Presentation p = sample();
  CHECK(component_node_count(*p.find("fin")) == 3);
  for (const char* id : {"ray", "line", "tail", "fam", "onto_fin"})
    CHECK(!component_node_count(*p.find(id)).has_value());
}

TEST_CASE("zero set summary sees finite and infinite zero sets") {
  Presentation p = sample();
  auto s = zero_set_summary(p);
  CHECK(!s.zero_set_empty);
  CHECK(!s.zero_set_finite); // the bi-ray block and family block contain zeros

  FieldSpec f(2);
  Presentation q{f, {}};
  FiniteComponent fin;
  fin.map = {0};
  fin.weights = {fe(f, 1)};
  q.components.push_back({"a", std::move(fin)});
  auto t = zero_set_summary(q);
  CHECK(t.zero_set_empty);
  CHECK(t.zero_set_finite);
}

TEST_CASE("validation flags every malformed shape") {
  FieldSpec f(3);
  auto has = [](const std::vector<Violation>& vs, const std::string& code) {
    return std::any_of(vs.begin(), vs.end(),
                       [&](const Violation& v) { return v.code == code; });
  };

  CHECK(has(validate(Presentation{f, {}}), "EmptyComponents"));

  {
    Presentation p{f, {}};
    FiniteComponent a;
    a.map = {0};
    a.weights = {fe(f, 1)};
    FiniteComponent b = a;
    p.components.push_back({"x", std::move(a)});
    p.components.push_back({"x", std::move(b)});
    CHECK(has(validate(p), "DuplicateId"));
  }
  {
    Presentation p{f, {}};
    p.components.push_back({"x", FiniteComponent{}});
    CHECK(has(validate(p), "EmptyFinite"));
  }
  {
    Presentation p{f, {}};
    FiniteComponent a;
    a.map = {0, 1};
    a.weights = {fe(f, 1)};
    p.components.push_back({"x", std::move(a)});
    CHECK(has(validate(p), "SizeMismatch"));
  }
  {
    Presentation p{f, {}};
    FiniteComponent a;
    a.map = {5};
    a.weights = {fe(f, 1)};
    p.components.push_back({"x", std::move(a)});
    CHECK(has(validate(p), "MapOutOfRange"));
  }
  {
    Presentation p{f, {}};
    p.components.push_back({"x", ForwardRayComponent{}});
    CHECK(has(validate(p), "EmptyBlock"));
  }
  {
    Presentation p{f, {}};
    p.components.push_back({"x", BiRayComponent{}});
    CHECK(has(validate(p), "EmptyBlock"));
  }
  {
    Presentation p{f, {}};
    BackwardTailComponent t;
    t.target = {"nope", 1, 0};
    t.weights = word(f, {}, {1});
    p.components.push_back({"x", std::move(t)});
    CHECK(has(validate(p), "UnknownTarget"));
  }
  {
    Presentation p = sample();
    BackwardTailComponent t;
    t.target = {"tail", 1, 1};
    t.weights = word(p.field, {}, {1});
    p.components.push_back({"x", std::move(t)});
    CHECK(has(validate(p), "BadAttachmentKind"));
  }
  {
    Presentation p = sample();
    BackwardTailComponent t;
    t.target = {"fin", 1, 9};
    t.weights = word(p.field, {}, {1});
    p.components.push_back({"x", std::move(t)});
    CHECK(has(validate(p), "AddressOutOfRange"));
  }
  {
    Presentation p{f, {}};
    CycleFamilyComponent c;
    c.lengths.kind = LengthSpec::Kind::Constant;
    c.lengths.c = 0;
    c.weights = word(f, {}, {1});
    p.components.push_back({"x", std::move(c)});
    CHECK(has(validate(p), "BadLengthSpec"));
  }
  {
    Presentation p{f, {}};
    CycleFamilyComponent c;
    c.lengths.kind = LengthSpec::Kind::Geometric;
    c.lengths.base = 1;
    c.lengths.b = 1;
    c.weights = word(f, {}, {1});
    p.components.push_back({"x", std::move(c)});
    CHECK(has(validate(p), "BadLengthSpec"));
  }
  {
    Presentation p{f, {}};
    TailFamilyComponent t;
    t.target_component = "x"; // a tail family may not target itself
    t.weights = word(f, {}, {1});
    p.components.push_back({"x", std::move(t)});
    CHECK(has(validate(p), "BadAttachmentKind"));
  }
  {
    Presentation p{f, {}};
    FiniteComponent a;
    a.map = {0};
    a.weights = {FieldElement(FieldSpec(5), 1)};
    p.components.push_back({"x", std::move(a)});
    CHECK(has(validate(p), "FieldMismatch"));
  }
  CHECK(validate(sample()).empty());
}

TEST_CASE("canonical save and strict load round-trip byte for byte") {
  Presentation p = sample();
  std::string text = save_presentation(p);
  Presentation back = load_presentation(text);
  CHECK(save_presentation(back) == text);
  CHECK(validate(back).empty());
  CHECK(back.field.p() == 3);
  CHECK(back.components.size() == p.components.size());
}

TEST_CASE("loader rejects unknown keys, bad fields, and junk") {
  const char* unknown_top = R"({"field": {"p": 2}, "components": [], "extra": 1})";
  CHECK(throws_code(ErrorCode::ParseError,
                    [&] { load_presentation(unknown_top); }));
  const char* unknown_comp =
      R"({"field": {"p": 2}, "components": [
          {"id": "a", "kind": "finite", "map": [0], "weights": [1], "foo": 2}]})";
  CHECK(throws_code(ErrorCode::ParseError,
                    [&] { load_presentation(unknown_comp); }));
  const char* missing =
      R"({"field": {"p": 2}, "components": [{"id": "a", "kind": "finite", "map": [0]}]})";
  CHECK(throws_code(ErrorCode::ParseError, [&] { load_presentation(missing); }));
  CHECK(throws_code(ErrorCode::ParseError, [&] { load_presentation("{nope"); }));
  const char* composite = R"({"field": {"p": 9}, "components": []})";
  CHECK(throws_code(ErrorCode::NotPrime, [&] { load_presentation(composite); }));
  const char* huge = R"({"field": {"p": 10007}, "components": []})";
  CHECK(throws_code(ErrorCode::ParseError, [&] { load_presentation(huge); }));
}

TEST_CASE("loader reduces weight integers into the field") {
  const char* text =
      R"({"field": {"p": 5}, "components": [
          {"id": "a", "kind": "finite", "map": [0, 0], "weights": [7, -1]}]})";
  Presentation p = load_presentation(text);
  CHECK(eval_weight(p, {"a", 1, 0}).value() == 2);
  CHECK(eval_weight(p, {"a", 1, 1}).value() == 4);
}
