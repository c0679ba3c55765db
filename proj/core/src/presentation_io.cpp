#include "wgshift/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wgs {

namespace {

using nlohmann::ordered_json;

constexpr std::uint32_t MAX_FIELD_ORDER = 997;

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::ParseError, msg);
}

void expect_keys(const ordered_json& obj, std::initializer_list<const char*> keys,
                 const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown key '" + it.key() + "' in " + where);
  }
  for (const char* k : keys) {
    if (!obj.contains(k)) fail("missing key '" + std::string(k) + "' in " + where);
  }
}

FieldElement to_weight(const ordered_json& v, const FieldSpec& f, const std::string& where) {
  if (!v.is_number_integer()) fail("weight must be an integer in " + where);
  long long raw = v.get<long long>();
  long long p = f.p();
  long long r = raw % p;
  if (r < 0) r += p;
  return FieldElement(f, static_cast<std::uint64_t>(r));
}

std::vector<FieldElement> to_weights(const ordered_json& arr, const FieldSpec& f,
                                     const std::string& where) {
  if (!arr.is_array()) fail("expected an array of weights in " + where);
  std::vector<FieldElement> out;
  for (const auto& v : arr) out.push_back(to_weight(v, f, where));
  return out;
}

EventuallyPeriodicWord to_word(const ordered_json& obj, const FieldSpec& f,
                               const std::string& where) {
  if (!obj.is_object()) fail("expected {prefix, block} weights in " + where);
  expect_keys(obj, {"prefix", "block"}, where);
  EventuallyPeriodicWord w;
  w.prefix = to_weights(obj["prefix"], f, where + ".prefix");
  w.block = to_weights(obj["block"], f, where + ".block");
  if (w.block.empty()) fail("weight block must be nonempty in " + where);
  return w;
}

NodeAddress to_address(const ordered_json& obj, const std::string& where) {
  if (!obj.is_object()) fail("expected a node address in " + where);
  expect_keys(obj, {"component", "member", "position"}, where);
  NodeAddress a;
  if (!obj["component"].is_string()) fail("address component must be a string in " + where);
  a.component = obj["component"].get<std::string>();
  if (!obj["member"].is_number_integer()) fail("address member must be an integer in " + where);
  long long m = obj["member"].get<long long>();
  if (m < 1) fail("address member must be >= 1 in " + where);
  a.member = static_cast<std::uint64_t>(m);
  if (!obj["position"].is_number_integer()) fail("address position must be an integer in " + where);
  a.position = obj["position"].get<std::int64_t>();
  return a;
}

LengthSpec to_lengths(const ordered_json& obj, const std::string& where) {
  if (!obj.is_object() || !obj.contains("kind") || !obj["kind"].is_string()) {
    fail("expected a lengths object with a kind in " + where);
  }
  LengthSpec ls;
  std::string kind = obj["kind"].get<std::string>();
  auto field_u64 = [&](const char* key) {
    if (!obj[key].is_number_integer()) fail(std::string(key) + " must be an integer in " + where);
    long long v = obj[key].get<long long>();
    if (v < 0) fail(std::string(key) + " must be nonnegative in " + where);
    return static_cast<std::uint64_t>(v);
  };
  if (kind == "constant") {
    expect_keys(obj, {"kind", "c"}, where);
    ls.kind = LengthSpec::Kind::Constant;
    ls.c = field_u64("c");
  } else if (kind == "linear") {
    expect_keys(obj, {"kind", "a", "b"}, where);
    ls.kind = LengthSpec::Kind::Linear;
    ls.a = field_u64("a");
    ls.b = field_u64("b");
  } else if (kind == "geometric") {
    expect_keys(obj, {"kind", "base", "b"}, where);
    ls.kind = LengthSpec::Kind::Geometric;
    ls.base = field_u64("base");
    ls.b = field_u64("b");
  } else {
    fail("unknown lengths kind '" + kind + "' in " + where);
  }
  return ls;
}

} // namespace

Presentation load_presentation(const std::string& json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  expect_keys(root, {"field", "components"}, "top level");

  const auto& fld = root["field"];
  if (!fld.is_object()) fail("field must be an object");
  expect_keys(fld, {"p"}, "field");
  if (!fld["p"].is_number_integer()) fail("field.p must be an integer");
  long long praw = fld["p"].get<long long>();
  if (praw < 2 || praw > MAX_FIELD_ORDER) {
    fail("field.p must be a prime in [2, " + std::to_string(MAX_FIELD_ORDER) + "]");
  }
  Presentation p{FieldSpec(static_cast<std::uint32_t>(praw)), {}};

  if (!root["components"].is_array()) fail("components must be an array");
  for (const auto& cj : root["components"]) {
    if (!cj.is_object() || !cj.contains("id") || !cj.contains("kind")) {
      fail("each component needs id and kind");
    }
    if (!cj["id"].is_string() || !cj["kind"].is_string()) {
      fail("component id and kind must be strings");
    }
    Component c;
    c.id = cj["id"].get<std::string>();
    std::string kind = cj["kind"].get<std::string>();
    const std::string where = "component '" + c.id + "'";
    if (kind == "finite") {
      expect_keys(cj, {"id", "kind", "map", "weights"}, where);
      FiniteComponent f;
      if (!cj["map"].is_array()) fail("map must be an array in " + where);
      for (const auto& v : cj["map"]) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          fail("map entries must be nonnegative integers in " + where);
        }
        f.map.push_back(static_cast<std::uint32_t>(v.get<long long>()));
      }
      f.weights = to_weights(cj["weights"], p.field, where);
      c.kind = std::move(f);
    } else if (kind == "forward_ray") {
      expect_keys(cj, {"id", "kind", "weights"}, where);
      c.kind = ForwardRayComponent{to_word(cj["weights"], p.field, where)};
    } else if (kind == "bi_ray") {
      expect_keys(cj, {"id", "kind", "block"}, where);
      BiRayComponent b;
      b.block = to_weights(cj["block"], p.field, where);
      if (b.block.empty()) fail("bi-ray block must be nonempty in " + where);
      c.kind = std::move(b);
    } else if (kind == "backward_tail") {
      expect_keys(cj, {"id", "kind", "target", "weights"}, where);
      BackwardTailComponent t;
      t.target = to_address(cj["target"], where);
      t.weights = to_word(cj["weights"], p.field, where);
      c.kind = std::move(t);
    } else if (kind == "cycle_family") {
      expect_keys(cj, {"id", "kind", "lengths", "weights"}, where);
      CycleFamilyComponent f;
      f.lengths = to_lengths(cj["lengths"], where);
      f.weights = to_word(cj["weights"], p.field, where);
      c.kind = std::move(f);
    } else if (kind == "tail_family") {
      expect_keys(cj, {"id", "kind", "target_component", "weights"}, where);
      TailFamilyComponent t;
      if (!cj["target_component"].is_string()) {
        fail("target_component must be a string in " + where);
      }
      t.target_component = cj["target_component"].get<std::string>();
      t.weights = to_word(cj["weights"], p.field, where);
      c.kind = std::move(t);
    } else {
      fail("unknown component kind '" + kind + "' in " + where);
    }
    p.components.push_back(std::move(c));
  }
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_presentation(buf.str());
}

namespace {

ordered_json from_weights(const std::vector<FieldElement>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws) arr.push_back(w.value());
  return arr;
}

ordered_json from_word(const EventuallyPeriodicWord& w) {
  ordered_json obj;
  obj["prefix"] = from_weights(w.prefix);
  obj["block"] = from_weights(w.block);
  return obj;
}

} // namespace

std::string save_presentation(const Presentation& p) {
  ordered_json root;
  root["field"] = ordered_json{{"p", p.field.p()}};
  ordered_json comps = ordered_json::array();
  for (const auto& c : p.components) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["kind"] = component_kind_name(c.kind);
    if (const auto* f = std::get_if<FiniteComponent>(&c.kind)) {
      cj["map"] = f->map;
      cj["weights"] = from_weights(f->weights);
    } else if (const auto* r = std::get_if<ForwardRayComponent>(&c.kind)) {
      cj["weights"] = from_word(r->weights);
    } else if (const auto* b = std::get_if<BiRayComponent>(&c.kind)) {
      cj["block"] = from_weights(b->block);
    } else if (const auto* t = std::get_if<BackwardTailComponent>(&c.kind)) {
      cj["target"] = ordered_json{{"component", t->target.component},
                                  {"member", t->target.member},
                                  {"position", t->target.position}};
      cj["weights"] = from_word(t->weights);
    } else if (const auto* cf = std::get_if<CycleFamilyComponent>(&c.kind)) {
      ordered_json ls;
      switch (cf->lengths.kind) {
        case LengthSpec::Kind::Constant:
          ls = ordered_json{{"kind", "constant"}, {"c", cf->lengths.c}};
          break;
        case LengthSpec::Kind::Linear:
          ls = ordered_json{{"kind", "linear"}, {"a", cf->lengths.a}, {"b", cf->lengths.b}};
          break;
        case LengthSpec::Kind::Geometric:
          ls = ordered_json{{"kind", "geometric"},
                            {"base", cf->lengths.base},
                            {"b", cf->lengths.b}};
          break;
      }
      cj["lengths"] = ls;
      cj["weights"] = from_word(cf->weights);
    } else if (const auto* tf = std::get_if<TailFamilyComponent>(&c.kind)) {
      cj["target_component"] = tf->target_component;
      cj["weights"] = from_word(tf->weights);
    }
    comps.push_back(std::move(cj));
  }
  root["components"] = std::move(comps);
  return root.dump(2) + "\n";
}

} // namespace wgs
