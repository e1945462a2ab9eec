#include "valchain/io.hpp"

#include <fstream>

namespace valchain {

namespace {

// Cursor into a document that remembers its JSON pointer for error messages.
struct Node {
  const Json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& message) const { throw InputError(path.empty() ? "/" : path, message); }

  bool has(const char* key) const { return j.is_object() && j.contains(key); }

  Node at(const char* key) const {
    if (!j.is_object()) fail("expected an object");
    if (!j.contains(key)) throw InputError(path + "/" + key, "missing field");
    return {j.at(key), path + "/" + key};
  }

  Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }

  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }

  std::string string() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }

  // Exact scalars are written as strings; integers are accepted too.
  std::string scalar_text() const {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    return string();
  }

  long integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long>();
  }

  std::size_t count() const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      fail("expected a non-negative integer");
    return j.get<std::size_t>();
  }

  template <class F>
  auto guarded(F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  Rational rational() const {
    return guarded([&] { return parse_rational(scalar_text()); });
  }
  GroupValue value() const {
    return guarded([&] { return GroupValue::parse(scalar_text()); });
  }
  Poly poly() const {
    return guarded([&] { return Poly::parse(string()); });
  }
};

void check_format(const Node& n, const char* expected) {
  if (n.has("format") && n.at("format").string() != expected)
    n.at("format").fail(std::string("expected format '") + expected + "'");
  if (n.has("version") && n.at("version").integer() != kFormatVersion) n.at("version").fail("unsupported version");
}

ContinuousFamily family_from(const Node& n, const BaseField& field) {
  FamilySpec spec;
  const Node kind = n.at("kind");
  spec.kind = kind.guarded([&] { return family_kind_from_string(kind.string()); });
  if (n.has("window")) spec.window = n.at("window").count();
  const Node params = n.has("params") ? n.at("params") : n;
  if (params.has("start")) spec.start = params.at("start").count();
  switch (spec.kind) {
    case FamilyKind::ExplicitList: {
      const Node items = params.at("items");
      for (std::size_t i = 0; i < items.size(); ++i) {
        const Node it = items.at(i);
        spec.items.push_back({it.at("chi").poly(), it.at("gamma").value()});
      }
      break;
    }
    case FamilyKind::HenselDigits:
      spec.target = params.at("target").poly();
      spec.root = params.at("root").rational();
      break;
    case FamilyKind::DigitStream:
      spec.rule = params.at("rule").string();
      break;
  }
  return n.guarded([&] {
    ContinuousFamily family(field, std::move(spec));
    family.item(0);  // surfaces bad parameters here rather than at evaluation
    return family;
  });
}

Step step_from(const Node& n, const BaseField& field) {
  const std::string type = n.at("type").string();
  if (type == "ordinary") return OrdinaryStep{n.at("phi").poly(), n.at("gamma").value()};
  if (type == "limit") return LimitStep{family_from(n.at("family"), field), n.at("phi").poly(), n.at("gamma").value()};
  if (type == "stable_limit") return StableLimitStep{family_from(n.at("family"), field)};
  n.at("type").fail("unknown step type '" + type + "'");
}

Json generator_json(const ChainGenerator& g) { return Json{{"kind", g.kind()}}; }

}  // namespace

Json to_json(const BaseField& field) {
  Json j{{"p", field.prime()}};
  if (field.offset() != 0) j["offset"] = field.offset();
  return j;
}

Json to_json(const ContinuousFamily& family) {
  const FamilySpec& s = family.spec();
  Json params = Json::object();
  switch (s.kind) {
    case FamilyKind::ExplicitList: {
      Json items = Json::array();
      for (const auto& it : s.items) items.push_back({{"chi", it.chi.str()}, {"gamma", it.gamma.str()}});
      params["items"] = std::move(items);
      break;
    }
    case FamilyKind::HenselDigits:
      params["target"] = s.target.str();
      params["root"] = to_string(s.root);
      break;
    case FamilyKind::DigitStream:
      params["rule"] = s.rule;
      break;
  }
  params["start"] = s.start;
  return Json{{"kind", to_string(s.kind)}, {"params", std::move(params)}, {"window", s.window}};
}

Json to_json(const Step& step) {
  Json j{{"type", step_type_name(step)}};
  if (const auto* o = std::get_if<OrdinaryStep>(&step)) {
    j["phi"] = o->phi.str();
    j["gamma"] = o->gamma.str();
  } else if (const auto* l = std::get_if<LimitStep>(&step)) {
    j["family"] = to_json(l->family);
    j["phi"] = l->phi.str();
    j["gamma"] = l->gamma.str();
  } else {
    j["family"] = to_json(std::get<StableLimitStep>(step).family);
  }
  return j;
}

Json to_json(const MLVChain& chain) {
  Json j{{"format", "valchain-chain"}, {"version", kFormatVersion}, {"field", to_json(chain.field())}};
  if (chain.is_infinite()) {
    j["generator"] = generator_json(*chain.generator());
    return j;
  }
  const InductiveValuation& w = chain.chain();
  j["seed"] = {{"alpha", to_string(w.seed().alpha)}, {"delta", w.seed().delta.str()}};
  Json steps = Json::array();
  for (const auto& s : w.steps()) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const ABKPSequence& seq) {
  Json j{{"format", "valchain-sequence"},
         {"version", kFormatVersion},
         {"field", to_json(seq.field())},
         {"shape", to_string(seq.shape())}};
  if (seq.generator()) {
    j["generator"] = generator_json(*seq.generator());
    return j;
  }
  Json blocks = Json::array();
  for (const auto& b : seq.blocks()) {
    Json jb{{"Q", b.head.str()}, {"gamma", b.gamma.str()}};
    if (b.tail) jb["tail"] = to_json(*b.tail);
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const ValidationReport& report) {
  Json findings = Json::array();
  for (const auto& f : report.findings)
    findings.push_back({{"axiom", f.axiom}, {"location", f.location}, {"detail", f.detail}});
  return Json{{"status", report.passed() ? "pass" : "fail"},
              {"inspected_depth", report.inspected_depth},
              {"findings", std::move(findings)}};
}

BaseField field_from_json(const Json& j) {
  const Node n{j, "/field"};
  const Node pn = n.at("p");
  const long p = pn.integer();
  pn.guarded([&] { return BaseField(p); });
  const std::size_t offset = n.has("offset") ? n.at("offset").count() : 0;
  return n.guarded([&] { return BaseField(p, offset); });
}

MLVChain chain_from_json(const Json& j) {
  const Node root{j, ""};
  check_format(root, "valchain-chain");
  const BaseField field = field_from_json(root.at("field").j);
  if (root.has("generator")) {
    const Node g = root.at("generator");
    return g.guarded([&] { return MLVChain(ChainGenerator(field, g.at("kind").string())); });
  }
  const Node seed = root.at("seed");
  Seed s{seed.at("alpha").rational(), seed.at("delta").value()};
  std::vector<Step> steps;
  if (root.has("steps")) {
    const Node list = root.at("steps");
    for (std::size_t i = 0; i < list.size(); ++i) steps.push_back(step_from(list.at(i), field));
  }
  return root.guarded([&] { return MLVChain(InductiveValuation(field, std::move(s), std::move(steps))); });
}

ABKPSequence sequence_from_json(const Json& j) {
  const Node root{j, ""};
  check_format(root, "valchain-sequence");
  const BaseField field = field_from_json(root.at("field").j);
  const Node shape_node = root.at("shape");
  const SequenceShape shape = shape_node.guarded([&] { return sequence_shape_from_string(shape_node.string()); });
  if (root.has("generator")) {
    if (shape != SequenceShape::Infinite) shape_node.fail("a generator requires shape 'infinite'");
    const Node g = root.at("generator");
    return g.guarded([&] { return ABKPSequence(field, ChainGenerator(field, g.at("kind").string())); });
  }
  if (shape == SequenceShape::Infinite) shape_node.fail("shape 'infinite' requires a generator");
  const Node list = root.at("blocks");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Node b = list.at(i);
    Block block{b.at("Q").poly(), b.at("gamma").value(), std::nullopt};
    if (b.has("tail")) block.tail = family_from(b.at("tail"), field);
    blocks.push_back(std::move(block));
  }
  return list.guarded([&] { return ABKPSequence(field, std::move(blocks), shape); });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string(), std::string("malformed JSON (") + e.what() + ")");
  }
}

MLVChain read_chain_file(const std::filesystem::path& path) {
  try {
    return chain_from_json(read_json_file(path));
  } catch (const InputError& e) {
    if (e.location() == path.string()) throw;
    throw InputError(path.string() + ":" + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

ABKPSequence read_sequence_file(const std::filesystem::path& path) {
  try {
    return sequence_from_json(read_json_file(path));
  } catch (const InputError& e) {
    if (e.location() == path.string()) throw;
    throw InputError(path.string() + ":" + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

}  // namespace valchain
