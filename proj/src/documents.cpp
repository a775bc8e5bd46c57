#include "coarse/documents.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coarse::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& source,
                  const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(source, where, std::string("missing '") + key + "'");
  return obj.at(key);
}

void checkSchema(const json& doc, const char* expected, const std::string& source) {
  if (!doc.is_object()) fail(source, "/", "document must be a JSON object");
  const json& schema = field(doc, "schema", source, "/");
  if (!schema.is_string() || schema.get<std::string>() != expected) {
    fail(source, "/schema", std::string("expected \"") + expected + "\"");
  }
}

DomainPtr parseDomain(const json& doc, const std::string& source) {
  const json& labels = field(doc, "domain", source, "/");
  if (!labels.is_array()) fail(source, "/domain", "must be an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) fail(source, "/domain/" + std::to_string(i), "label must be a string");
    out.push_back(labels[i].get<std::string>());
  }
  try {
    return makeDomain(std::move(out));
  } catch (const InputError& e) {
    fail(source, "/domain", e.what());
  }
}

std::size_t labelIndex(const Domain& d, const json& label, const std::string& source,
                       const std::string& where) {
  if (!label.is_string()) fail(source, where, "label must be a string");
  const std::string s = label.get<std::string>();
  if (!d.contains(s)) fail(source, where, "unknown label '" + s + "'");
  return d.indexOf(s);
}

Relation parsePairsCriterion(const DomainPtr& domain, const json& pairs, const std::string& source,
                             const std::string& where) {
  if (!pairs.is_array()) fail(source, where, "must be an array of [superior, inferior] pairs");
  std::vector<Relation::Pair> idx;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!pairs[k].is_array() || pairs[k].size() != 2) fail(source, at, "pair must have two labels");
    idx.emplace_back(labelIndex(*domain, pairs[k][0], source, at + "/0"),
                     labelIndex(*domain, pairs[k][1], source, at + "/1"));
  }
  Relation rel(domain, std::move(idx));
  for (const auto& [x, y] : rel.pairs()) {
    if (x == y) fail(source, where, "reflexive pair (" + domain->label(x) + "," + domain->label(x) + ")");
    if (rel.related(y, x)) {
      fail(source, where,
           "symmetric pair (" + domain->label(x) + "," + domain->label(y) + ") violates asymmetry");
    }
  }
  return rel;
}

Relation parseCategoryCriterion(const DomainPtr& domain, const json& crit, const std::string& source,
                                const std::string& where) {
  const json& cats = field(crit, "categories", source, where);
  if (!cats.is_array() || cats.empty()) fail(source, where + "/categories", "must be a nonempty array");
  std::vector<std::size_t> cellOf(domain->size(), kNoCell);
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t j = 0; j < cats.size(); ++j) {
    const std::string at = where + "/categories/" + std::to_string(j);
    if (!cats[j].is_array() || cats[j].empty()) fail(source, at, "category must be a nonempty array");
    cells.emplace_back();
    for (std::size_t k = 0; k < cats[j].size(); ++k) {
      const std::size_t x = labelIndex(*domain, cats[j][k], source, at + "/" + std::to_string(k));
      if (cellOf[x] != kNoCell) fail(source, at, "label '" + domain->label(x) + "' appears twice");
      cellOf[x] = j;
      cells.back().push_back(x);
    }
  }
  for (std::size_t x = 0; x < domain->size(); ++x) {
    if (cellOf[x] == kNoCell) {
      fail(source, where + "/categories", "label '" + domain->label(x) + "' is in no category");
    }
  }

  DenseRelation order(cells.size());
  if (crit.contains("order")) {
    const json& pairs = crit.at("order");
    if (!pairs.is_array()) fail(source, where + "/order", "must be an array of index pairs");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string at = where + "/order/" + std::to_string(k);
      auto index = [](const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; };
      if (!pairs[k].is_array() || pairs[k].size() != 2 || !index(pairs[k][0]) || !index(pairs[k][1])) {
        fail(source, at, "order entry must be [superior index, inferior index]");
      }
      const auto a = pairs[k][0].get<std::size_t>();
      const auto b = pairs[k][1].get<std::size_t>();
      if (a >= cells.size() || b >= cells.size()) fail(source, at, "category index out of range");
      order.set(a, b);
    }
  }
  if (!order.asymmetric()) fail(source, where + "/order", "category order is not asymmetric");

  std::vector<Relation::Pair> idx;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (!order(a, b)) continue;
      for (std::size_t x : cells[a]) {
        for (std::size_t y : cells[b]) idx.emplace_back(x, y);
      }
    }
  }
  Relation rel(domain, std::move(idx));

  // Declared categories must be the categories the order induces.
  const CategoryStructure derived = categories(rel);
  if (derived.e() != cells.size()) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        if (derived.cellOf[cells[a].front()] == derived.cellOf[cells[b].front()]) {
          fail(source, where,
               "categories " + std::to_string(a) + " and " + std::to_string(b) +
                   " are not distinguished by the declared order");
        }
      }
    }
  }
  return rel;
}

}  // namespace

json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

CriteriaSet parseCriteria(const json& doc, const std::string& source) {
  checkSchema(doc, kCriteriaSchema, source);
  DomainPtr domain = parseDomain(doc, source);
  const json& list = field(doc, "criteria", source, "/");
  if (!list.is_array() || list.empty()) fail(source, "/criteria", "must be a nonempty array");

  std::vector<Relation> relations;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "/criteria/" + std::to_string(i);
    const json& crit = list[i];
    if (!crit.is_object()) fail(source, where, "criterion must be an object");
    std::string name = "C" + std::to_string(i + 1);
    if (crit.contains("name")) {
      if (!crit.at("name").is_string()) fail(source, where + "/name", "must be a string");
      name = crit.at("name").get<std::string>();
    }
    const bool hasPairs = crit.contains("pairs");
    const bool hasCategories = crit.contains("categories");
    if (hasPairs == hasCategories) fail(source, where, "give exactly one of 'pairs' or 'categories'");
    relations.push_back(hasPairs ? parsePairsCriterion(domain, crit.at("pairs"), source, where + "/pairs")
                                 : parseCategoryCriterion(domain, crit, source, where));
    names.push_back(std::move(name));
  }
  return CriteriaSet(domain, std::move(relations), std::move(names));
}

CriteriaSet loadCriteria(const std::string& path) {
  return parseCriteria(readJsonFile(path), path);
}

json criteriaToJson(const CriteriaSet& cs) {
  json doc;
  doc["schema"] = kCriteriaSchema;
  doc["domain"] = cs.domain().labels();
  json list = json::array();
  for (const auto& c : cs.criteria()) {
    json crit;
    crit["name"] = c.name;
    json cats = json::array();
    for (const auto& cell : c.structure.cells) {
      json members = json::array();
      for (std::size_t x : cell) members.push_back(cs.domain().label(x));
      cats.push_back(std::move(members));
    }
    crit["categories"] = std::move(cats);
    json order = json::array();
    for (std::size_t a = 0; a < c.structure.e(); ++a) {
      for (std::size_t b = 0; b < c.structure.e(); ++b) {
        if (c.structure.order(a, b)) order.push_back({a, b});
      }
    }
    crit["order"] = std::move(order);
    list.push_back(std::move(crit));
  }
  doc["criteria"] = std::move(list);
  return doc;
}

ChoiceFunction parseChoice(const json& doc, const std::string& source) {
  checkSchema(doc, kChoiceSchema, source);
  DomainPtr domain = parseDomain(doc, source);
  if (domain->size() > kMaxChoiceDocumentDomain) {
    fail(source, "/domain",
         "choice documents are limited to " + std::to_string(kMaxChoiceDocumentDomain) +
             " alternatives");
  }
  const json& list = field(doc, "choices", source, "/");
  if (!list.is_array()) fail(source, "/choices", "must be an array");

  auto toMask = [&](const json& labels, const std::string& where) {
    if (!labels.is_array()) fail(source, where, "must be an array of labels");
    Subset m = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      m |= singleton(labelIndex(*domain, labels[k], source, where + "/" + std::to_string(k)));
    }
    return m;
  };
  std::vector<std::pair<Subset, Subset>> entries;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "/choices/" + std::to_string(k);
    const Subset menu = toMask(field(list[k], "menu", source, where), where + "/menu");
    const Subset chosen = toMask(field(list[k], "chosen", source, where), where + "/chosen");
    entries.emplace_back(menu, chosen);
  }
  try {
    return ChoiceFunction::explicitMenus(domain, std::move(entries));
  } catch (const InputError& e) {
    fail(source, "/choices", e.what());
  }
}

ChoiceFunction loadChoice(const std::string& path) {
  return parseChoice(readJsonFile(path), path);
}

json choiceToJson(const ChoiceFunction& c) {
  if (c.domain().size() > kMaxChoiceDocumentDomain) {
    throw ResourceError("choice documents are limited to " +
                        std::to_string(kMaxChoiceDocumentDomain) + " alternatives");
  }
  json doc;
  doc["schema"] = kChoiceSchema;
  doc["domain"] = c.domain().labels();
  json list = json::array();
  auto labels = [&](Subset s) {
    json out = json::array();
    for (std::size_t x = 0; x < c.domain().size(); ++x) {
      if (contains(s, x)) out.push_back(c.domain().label(x));
    }
    return out;
  };
  for (const auto& [menu, chosen] : c.entries()) {
    list.push_back({{"menu", labels(menu)}, {"chosen", labels(chosen)}});
  }
  doc["choices"] = std::move(list);
  return doc;
}

CostModel parseCostSpec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InputError("cost spec '" + spec + "' must look like kind:argument");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "power") return CostModel::power(parseRational(arg));
  if (kind == "linear") return CostModel::linear(parseRational(arg));
  if (kind == "ceillog2") return CostModel::scaledCeilLog2(parseRational(arg));
  if (kind == "expr") return CostModel::expression(arg);
  if (kind == "table") {
    const json doc = readJsonFile(arg);
    if (!doc.is_object()) throw InputError(arg + ": cost table must be an object {\"e\": cost}");
    std::map<std::size_t, Rational> entries;
    for (const auto& [key, value] : doc.items()) {
      std::size_t e = 0;
      try {
        std::size_t used = 0;
        e = std::stoul(key, &used);
        if (used != key.size()) throw InputError("bad key");
      } catch (const std::exception&) {
        throw InputError(arg + ": cost table key '" + key + "' is not a category count");
      }
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_number_integer()) {
        text = std::to_string(value.get<long long>());
      } else if (value.is_number()) {
        text = value.dump();
      } else {
        throw InputError(arg + ": cost for e=" + key + " must be a number or rational string");
      }
      entries[e] = parseRational(text);
    }
    try {
      return CostModel::table(std::move(entries));
    } catch (const InputError& e) {
      throw InputError(arg + ": " + e.what());
    }
  }
  throw InputError("unknown cost model kind '" + kind + "'");
}

WeightProfile parseWeights(const std::string& text) {
  WeightProfile w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Rational q = parseRational(item);
    if (q <= 0) throw InputError("weight '" + item + "' must be positive");
    w.weights.push_back(q);
  }
  if (w.weights.empty()) throw InputError("no weights given");
  return w;
}

}  // namespace coarse::io
