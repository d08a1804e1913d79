#include "qhent/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "qhent/builders.hpp"

namespace qhent::io {
namespace {

void add(ValidationReport& r, std::string loc, std::string msg) {
  if (loc.empty()) loc = "/";
  r.violations.push_back({std::move(loc), std::move(msg)});
}

bool is_uint(const Json& j) {
  return j.is_number_unsigned() ||
         (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

bool is_hex_code(const Json& j) {
  if (!j.is_string()) return false;
  const auto& s = j.get_ref<const std::string&>();
  if (s.size() % 2 != 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

/// "type" of an object document, or nullopt with a violation recorded.
std::optional<std::string> doc_type(const Json& doc, const std::string& at,
                                    ValidationReport& r) {
  if (!doc.is_object()) {
    add(r, at, "expected an object");
    return std::nullopt;
  }
  if (!doc.contains("type") || !doc["type"].is_string()) {
    add(r, at + "/type", "missing or non-string \"type\"");
    return std::nullopt;
  }
  return doc["type"].get<std::string>();
}

bool field_uint(const Json& doc, const char* key, const std::string& at,
                ValidationReport& r) {
  if (!doc.contains(key)) {
    add(r, at + "/" + key, "missing field");
    return false;
  }
  if (!is_uint(doc[key])) {
    add(r, at + "/" + key, "expected a non-negative integer");
    return false;
  }
  return true;
}

void check_table_images(const Json& doc, const std::string& at,
                        ValidationReport& r) {
  if (!doc.contains("images") || !doc["images"].is_array()) {
    add(r, at + "/images", "expected an array of [from, to] pairs");
    return;
  }
  std::size_t i = 0;
  for (const auto& pair : doc["images"]) {
    std::string here = at + "/images/" + std::to_string(i++);
    if (!pair.is_array() || pair.size() != 2 || !is_hex_code(pair[0]) ||
        !is_hex_code(pair[1]))
      add(r, here, "expected a pair of hex element codes");
  }
}

void group_node(const Json& doc, const std::string& at, ValidationReport& r);
DescriptorPtr parse_node(const Json& doc);

/// Parse a subtree that already validated cleanly; used for cross-field
/// semantic checks on the sugar constructors.
std::optional<DescriptorPtr> try_subtree(const Json& doc) {
  ValidationReport sub;
  group_node(doc, "", sub);
  if (!sub.ok()) return std::nullopt;
  return parse_node(doc);
}

void group_node(const Json& doc, const std::string& at, ValidationReport& r) {
  auto type = doc_type(doc, at, r);
  if (!type) return;

  if (*type == "cyclic") {
    if (field_uint(doc, "n", at, r) && doc["n"].get<std::uint64_t>() < 1)
      add(r, at + "/n", "modulus must be >= 1");
  } else if (*type == "q8") {
    // no parameters
  } else if (*type == "product") {
    if (!doc.contains("factors") || !doc["factors"].is_array() ||
        doc["factors"].empty()) {
      add(r, at + "/factors", "expected a non-empty array of groups");
    } else {
      std::size_t i = 0;
      for (const auto& f : doc["factors"])
        group_node(f, at + "/factors/" + std::to_string(i++), r);
    }
  } else if (*type == "restricted_sum") {
    if (!doc.contains("component"))
      add(r, at + "/component", "missing field");
    else
      group_node(doc["component"], at + "/component", r);
    if (!doc.contains("index_set") || !doc["index_set"].is_string() ||
        (doc["index_set"] != "N" && doc["index_set"] != "Z"))
      add(r, at + "/index_set", "expected \"N\" or \"Z\"");
    else if (doc.contains("component")) {
      if (auto comp = try_subtree(doc["component"]);
          comp && !descriptor_order(**comp))
        add(r, at + "/component", "sum component must be finite");
    }
  } else if (*type == "semidirect") {
    if (!doc.contains("normal_part"))
      add(r, at + "/normal_part", "missing field");
    else
      group_node(doc["normal_part"], at + "/normal_part", r);
    if (field_uint(doc, "acting_modulus", at, r) &&
        doc["acting_modulus"].get<std::uint64_t>() < 1)
      add(r, at + "/acting_modulus", "acting modulus must be >= 1");
    if (!doc.contains("action") || !doc["action"].is_object() ||
        !doc["action"].contains("kind") || !doc["action"]["kind"].is_string()) {
      add(r, at + "/action", "expected an object with a \"kind\"");
    } else {
      const auto& action = doc["action"];
      std::string kind = action["kind"].get<std::string>();
      if (kind == "power") {
        if (field_uint(action, "u", at + "/action", r) &&
            action["u"].get<std::uint64_t>() < 1)
          add(r, at + "/action/u", "power action exponent must be >= 1");
      } else if (kind == "table") {
        check_table_images(action, at + "/action", r);
      } else {
        add(r, at + "/action/kind", "expected \"power\" or \"table\"");
      }
    }
  } else if (*type == "iwasawa") {
    bool have = field_uint(doc, "p", at, r);
    have &= field_uint(doc, "n", at, r);
    have &= field_uint(doc, "m", at, r);
    have &= field_uint(doc, "s", at, r);
    if (have) {
      auto p = doc["p"].get<std::uint64_t>();
      auto n = doc["n"].get<std::uint64_t>();
      auto m = doc["m"].get<std::uint64_t>();
      auto s = doc["s"].get<std::uint64_t>();
      if (!is_prime_u64(p)) add(r, at + "/p", "p must be prime");
      if (s < 1) add(r, at + "/s", "s must be >= 1");
      if (s >= n) add(r, at + "/s", "s must be < n");
      if (n > s + m) add(r, at + "/n", "n must be <= s + m");
      if (p == 2 && s < 2) add(r, at + "/s", "p = 2 requires s >= 2");
      if (doc.contains("normal_part")) {
        group_node(doc["normal_part"], at + "/normal_part", r);
        if (auto a = try_subtree(doc["normal_part"])) {
          if (!descriptor_abelian(**a))
            add(r, at + "/normal_part", "normal part must be abelian");
          else if (is_prime_u64(p) && n >= 1 &&
                   abelian_exponent(**a) != ipow_u64(p, n))
            add(r, at + "/normal_part",
                "normal part must have exponent exactly p^n");
        }
      }
    }
  } else if (*type == "hamiltonian") {
    for (const char* key : {"b", "d"}) {
      std::string here = at + "/" + key;
      if (!doc.contains(key)) {
        add(r, here, "missing field");
        continue;
      }
      group_node(doc[key], here, r);
      auto part = try_subtree(doc[key]);
      if (!part) continue;
      if (!descriptor_abelian(**part)) {
        add(r, here, "factor must be abelian");
      } else if (key == std::string("b")) {
        if (abelian_exponent(**part) > 2)
          add(r, here, "elementary factor must have exponent <= 2");
      } else if (abelian_exponent(**part) % 2 == 0) {
        add(r, here, "odd factor must have odd element orders");
      }
    }
  } else {
    add(r, at + "/type",
        "unknown group type \"" + *type +
            "\" (expected cyclic, q8, product, restricted_sum, semidirect, "
            "iwasawa, hamiltonian)");
  }
}

std::vector<std::pair<ElementCode, ElementCode>> parse_pairs(const Json& arr) {
  std::vector<std::pair<ElementCode, ElementCode>> out;
  for (const auto& p : arr)
    out.emplace_back(ElementCode::from_hex(p[0].get<std::string>()),
                     ElementCode::from_hex(p[1].get<std::string>()));
  return out;
}

DescriptorPtr parse_node(const Json& doc) {
  std::string type = doc["type"].get<std::string>();
  if (type == "cyclic") return cyclic(doc["n"].get<std::uint64_t>());
  if (type == "q8") return quaternion8();
  if (type == "product") {
    std::vector<DescriptorPtr> factors;
    for (const auto& f : doc["factors"]) factors.push_back(parse_node(f));
    return product(std::move(factors));
  }
  if (type == "restricted_sum")
    return restricted_sum(parse_node(doc["component"]),
                          doc["index_set"] == "Z" ? IndexSet::integers
                                                  : IndexSet::naturals);
  if (type == "semidirect") {
    const auto& action = doc["action"];
    ActionDesc act;
    if (action["kind"] == "power")
      act = PowerActionDesc{action["u"].get<std::uint64_t>()};
    else
      act = TableActionDesc{parse_pairs(action["images"])};
    return semidirect(parse_node(doc["normal_part"]),
                      doc["acting_modulus"].get<std::uint64_t>(),
                      std::move(act));
  }
  if (type == "iwasawa") {
    auto p = doc["p"].get<std::uint64_t>();
    auto n = doc["n"].get<std::uint64_t>();
    auto m = doc["m"].get<std::uint64_t>();
    auto s = doc["s"].get<std::uint64_t>();
    DescriptorPtr a = doc.contains("normal_part")
                          ? parse_node(doc["normal_part"])
                          : cyclic(ipow_u64(p, n));
    return semidirect(std::move(a), ipow_u64(p, m),
                      PowerActionDesc{1 + ipow_u64(p, s)});
  }
  if (type == "hamiltonian")
    return product({quaternion8(), parse_node(doc["b"]), parse_node(doc["d"])});
  throw DecodeError("unknown group type " + type);
}

void endo_node(const Json& doc, const std::string& at, ValidationReport& r) {
  auto type = doc_type(doc, at, r);
  if (!type) return;

  if (*type == "identity" || *type == "trivial") {
    // no parameters
  } else if (*type == "shift") {
    if (!doc.contains("k") || !doc["k"].is_number_integer())
      add(r, at + "/k", "expected an integer");
  } else if (*type == "power") {
    field_uint(doc, "u", at, r);
  } else if (*type == "element_table") {
    check_table_images(doc, at, r);
  } else if (*type == "coordinate_permutation") {
    if (!doc.contains("perm") || !doc["perm"].is_array())
      add(r, at + "/perm", "expected an array of coordinate indices");
    else {
      std::size_t i = 0;
      for (const auto& x : doc["perm"])
        if (!is_uint(x))
          add(r, at + "/perm/" + std::to_string(i), "expected an index");
        else
          ++i;
    }
  } else if (*type == "diagonal") {
    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty()) {
      add(r, at + "/components", "expected a non-empty array of maps");
    } else {
      std::size_t i = 0;
      for (const auto& c : doc["components"])
        endo_node(c, at + "/components/" + std::to_string(i++), r);
    }
  } else if (*type == "compose") {
    for (const char* key : {"outer", "inner"}) {
      if (!doc.contains(key))
        add(r, at + "/" + key, "missing field");
      else
        endo_node(doc[key], at + "/" + key, r);
    }
  } else if (*type == "automorphism") {
    for (const char* key : {"forward", "backward"}) {
      if (!doc.contains(key))
        add(r, at + "/" + key, "missing field");
      else
        endo_node(doc[key], at + "/" + key, r);
    }
  } else if (*type == "iterate") {
    if (!doc.contains("base"))
      add(r, at + "/base", "missing field");
    else
      endo_node(doc["base"], at + "/base", r);
    field_uint(doc, "m", at, r);
  } else {
    add(r, at + "/type",
        "unknown map type \"" + *type +
            "\" (expected identity, trivial, shift, power, element_table, "
            "coordinate_permutation, diagonal, compose, automorphism, "
            "iterate)");
  }
}

void witness_node(const Json& doc, const std::string& at, ValidationReport& r) {
  auto type = doc_type(doc, at, r);
  if (!type) return;
  if (*type == "full") {
    // no parameters
  } else if (*type == "finite") {
    if (!doc.contains("generators") || !doc["generators"].is_array()) {
      add(r, at + "/generators", "expected an array of hex element codes");
    } else {
      std::size_t i = 0;
      for (const auto& gjson : doc["generators"]) {
        if (!is_hex_code(gjson))
          add(r, at + "/generators/" + std::to_string(i),
              "expected a hex element code");
        ++i;
      }
    }
  } else if (*type == "component_torsion") {
    if (field_uint(doc, "exponent", at, r) &&
        doc["exponent"].get<std::uint64_t>() < 1)
      add(r, at + "/exponent", "exponent must be >= 1");
  } else if (*type == "tail") {
    field_uint(doc, "start", at, r);
  } else if (*type == "product_factor") {
    field_uint(doc, "index", at, r);
  } else {
    add(r, at + "/type",
        "unknown witness type \"" + *type +
            "\" (expected full, finite, component_torsion, tail, "
            "product_factor)");
  }
}

std::string first_violation(const ValidationReport& r) {
  return r.violations.front().location + ": " + r.violations.front().message;
}

} // namespace

ValidationReport validate_group(const Json& doc, const std::string& at) {
  ValidationReport r;
  group_node(doc, at, r);
  return r;
}

ValidationReport validate_endo(const Json& doc, const std::string& at) {
  ValidationReport r;
  endo_node(doc, at, r);
  return r;
}

ValidationReport validate_witness(const Json& doc, const std::string& at) {
  ValidationReport r;
  witness_node(doc, at, r);
  return r;
}

DescriptorPtr parse_descriptor(const Json& doc) {
  auto rep = validate_group(doc);
  if (!rep.ok()) throw DecodeError(first_violation(rep));
  return parse_node(doc);
}

std::shared_ptr<const DescriptorGroup> parse_group(const Json& doc,
                                                   std::uint64_t seed) {
  return build_group(parse_descriptor(doc), seed);
}

EndoPtr parse_endo(const Json& doc,
                   const std::shared_ptr<const DescriptorGroup>& g) {
  auto rep = validate_endo(doc);
  if (!rep.ok()) throw DecodeError(first_violation(rep));

  std::string type = doc["type"].get<std::string>();
  if (type == "identity") return Endomorphism::identity(g);
  if (type == "trivial") return Endomorphism::trivial(g);
  if (type == "shift")
    return Endomorphism::shift(g, doc["k"].get<std::int64_t>());
  if (type == "power")
    return Endomorphism::power_map(g, doc["u"].get<std::uint64_t>());
  if (type == "element_table")
    return Endomorphism::element_table(g, parse_pairs(doc["images"]));
  if (type == "coordinate_permutation") {
    std::vector<std::size_t> perm;
    for (const auto& x : doc["perm"]) perm.push_back(x.get<std::size_t>());
    return Endomorphism::coordinate_permutation(g, std::move(perm));
  }
  if (type == "diagonal") {
    const auto* prod = std::get_if<ProductDesc>(&g->descriptor()->node);
    if (!prod)
      throw DomainError("diagonal map requires a direct product domain");
    if (doc["components"].size() != prod->factors.size())
      throw DecodeError("diagonal map must cover every product factor");
    std::vector<EndoPtr> comps;
    for (std::size_t i = 0; i < prod->factors.size(); ++i)
      comps.push_back(
          parse_endo(doc["components"][i], make_group(prod->factors[i])));
    return Endomorphism::diagonal(g, std::move(comps));
  }
  if (type == "compose")
    return Endomorphism::compose(parse_endo(doc["outer"], g),
                                 parse_endo(doc["inner"], g));
  if (type == "automorphism")
    return Endomorphism::declared_automorphism(parse_endo(doc["forward"], g),
                                               parse_endo(doc["backward"], g));
  if (type == "iterate")
    return parse_endo(doc["base"], g)->iterate(doc["m"].get<std::uint64_t>());
  throw DecodeError("unknown map type " + type);
}

SubgroupWitness parse_witness(const Json& doc,
                              const std::shared_ptr<const DescriptorGroup>& g) {
  auto rep = validate_witness(doc);
  if (!rep.ok()) throw DecodeError(first_violation(rep));

  std::string type = doc["type"].get<std::string>();
  if (type == "full") return SubgroupWitness::full(g);
  if (type == "finite") {
    std::vector<ElementCode> gens;
    for (const auto& h : doc["generators"])
      gens.push_back(ElementCode::from_hex(h.get<std::string>()));
    for (const auto& x : gens)
      if (!g->contains(x))
        throw DecodeError("witness generator is not a group element: " +
                          x.hex());
    return SubgroupWitness::finite(FiniteSubgroup::closure(g, std::move(gens)));
  }
  if (type == "component_torsion")
    return SubgroupWitness::component_torsion(
        g, doc["exponent"].get<std::uint64_t>());
  if (type == "tail")
    return SubgroupWitness::tail(g, doc["start"].get<std::uint64_t>());
  if (type == "product_factor")
    return SubgroupWitness::product_factor(g, doc["index"].get<std::size_t>());
  throw DecodeError("unknown witness type " + type);
}

namespace {

/// Generating values for the block-j subgroup of the described group: all of
/// every finite part, the first j indices of every restricted sum.
std::vector<Value> block_generators(const Descriptor& d, std::uint64_t j) {
  return std::visit(
      [&](const auto& node) -> std::vector<Value> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          if (node.modulus <= 1) return {};
          return {scalar_value(1)};
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return {scalar_value(2), scalar_value(4)}; // i and j
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          std::vector<Value> out;
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            for (auto& gen : block_generators(*node.factors[i], j)) {
              std::vector<Value> tuple;
              for (std::size_t t = 0; t < node.factors.size(); ++t)
                tuple.push_back(t == i ? std::move(gen)
                                       : identity_value(*node.factors[t]));
              out.push_back(tuple_value(std::move(tuple)));
            }
          }
          return out;
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          std::vector<Value> out;
          std::int64_t lo = node.indices == IndexSet::naturals
                                ? 0
                                : -static_cast<std::int64_t>(j) + 1;
          std::int64_t hi = static_cast<std::int64_t>(j) - 1;
          for (std::int64_t idx = lo; idx <= hi; ++idx)
            for (auto& gen : block_generators(*node.component, j))
              out.push_back(support_value({{idx, std::move(gen)}}));
          return out;
        } else {
          static_assert(std::is_same_v<T, SemidirectDesc>);
          std::vector<Value> out;
          for (auto& gen : block_generators(*node.normal_part, j))
            out.push_back(tuple_value({std::move(gen), scalar_value(0)}));
          if (node.acting_modulus > 1)
            out.push_back(tuple_value(
                {identity_value(*node.normal_part), scalar_value(1)}));
          return out;
        }
      },
      d.node);
}

std::vector<FiniteSubgroup> block_bases(
    const std::shared_ptr<const DescriptorGroup>& g, std::uint64_t k) {
  std::vector<FiniteSubgroup> out;
  for (std::uint64_t j = 1; j <= k; ++j) {
    std::vector<ElementCode> gens;
    for (const auto& v : block_generators(*g->descriptor(), j))
      gens.push_back(g->encode(v));
    FiniteSubgroup block = FiniteSubgroup::closure(g, std::move(gens));
    if (!out.empty() && out.back() == block) break; // group exhausted
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<FiniteSubgroup> cyclic_bases(const GroupPtr& g) {
  if (!g->order())
    throw DomainError("cyclic base family requires a finite group");
  std::vector<FiniteSubgroup> out;
  std::set<std::vector<ElementCode>> seen;
  for (const auto& x : g->elements()) {
    FiniteSubgroup c = FiniteSubgroup::closure(g, {x});
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  return out;
}

} // namespace

std::vector<FiniteSubgroup> parse_bases(
    const Json& spec, const std::shared_ptr<const DescriptorGroup>& g) {
  if (spec.is_string())
    return parse_bases_string(spec.get<std::string>(), g);
  if (!spec.is_array())
    throw DecodeError("bases: expected a spec string or generator lists");
  std::vector<FiniteSubgroup> out;
  for (const auto& gens_json : spec) {
    if (!gens_json.is_array())
      throw DecodeError("bases: each entry must be a generator list");
    std::vector<ElementCode> gens;
    for (const auto& h : gens_json) {
      if (!is_hex_code(h))
        throw DecodeError("bases: generators must be hex element codes");
      auto x = ElementCode::from_hex(h.get<std::string>());
      if (!g->contains(x))
        throw DecodeError("bases: generator is not a group element: " +
                          x.hex());
      gens.push_back(std::move(x));
    }
    out.push_back(FiniteSubgroup::closure(g, std::move(gens)));
  }
  if (out.empty()) throw DecodeError("bases: empty family");
  return out;
}

std::vector<FiniteSubgroup> parse_bases_string(
    const std::string& spec, const std::shared_ptr<const DescriptorGroup>& g) {
  if (spec.rfind("blocks:", 0) == 0) {
    std::uint64_t k = 0;
    try {
      k = std::stoull(spec.substr(7));
    } catch (const std::exception&) {
      throw DecodeError("bases: bad block count in \"" + spec + "\"");
    }
    if (k < 1) throw DecodeError("bases: block count must be >= 1");
    return block_bases(g, k);
  }
  if (spec == "cyclic") return cyclic_bases(g);
  if (!spec.empty() && spec[0] == '@')
    return parse_bases(load_json_file(spec.substr(1)), g);
  if (!spec.empty() && spec[0] == '[') {
    Json doc = Json::parse(spec, nullptr, false);
    if (doc.is_discarded())
      throw DecodeError("bases: inline JSON did not parse");
    return parse_bases(doc, g);
  }
  throw DecodeError("bases: unknown family spec \"" + spec +
                    "\" (expected blocks:K, cyclic, @file, or inline JSON)");
}

Json descriptor_to_json(const Descriptor& d) {
  return std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicDesc>) {
          return Json{{"type", "cyclic"}, {"n", node.modulus}};
        } else if constexpr (std::is_same_v<T, QuaternionDesc>) {
          return Json{{"type", "q8"}};
        } else if constexpr (std::is_same_v<T, ProductDesc>) {
          Json factors = Json::array();
          for (const auto& f : node.factors)
            factors.push_back(descriptor_to_json(*f));
          return Json{{"type", "product"}, {"factors", std::move(factors)}};
        } else if constexpr (std::is_same_v<T, SumDesc>) {
          return Json{
              {"type", "restricted_sum"},
              {"component", descriptor_to_json(*node.component)},
              {"index_set", node.indices == IndexSet::integers ? "Z" : "N"}};
        } else {
          static_assert(std::is_same_v<T, SemidirectDesc>);
          Json action;
          if (const auto* p = std::get_if<PowerActionDesc>(&node.action)) {
            action = Json{{"kind", "power"}, {"u", p->exponent}};
          } else {
            const auto& t = std::get<TableActionDesc>(node.action);
            Json images = Json::array();
            for (const auto& [from, to] : t.images)
              images.push_back(Json::array({from.hex(), to.hex()}));
            action = Json{{"kind", "table"}, {"images", std::move(images)}};
          }
          return Json{{"type", "semidirect"},
                      {"normal_part", descriptor_to_json(*node.normal_part)},
                      {"acting_modulus", node.acting_modulus},
                      {"action", std::move(action)}};
        }
      },
      d.node);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DecodeError("cannot open " + path);
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw DecodeError("not valid JSON: " + path);
  return doc;
}

} // namespace qhent::io
