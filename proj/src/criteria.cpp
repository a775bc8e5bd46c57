#include "coarse/criteria.hpp"

#include "coarse/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace coarse {

CriteriaSet::CriteriaSet(DomainPtr domain, std::vector<Relation> relations,
                         std::vector<std::string> names)
    : domain_(std::move(domain)) {
  if (relations.empty()) throw InputError("a criteria set needs at least one criterion");
  if (!names.empty() && names.size() != relations.size()) {
    throw InputError("criterion name count does not match criterion count");
  }
  criteria_.reserve(relations.size());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (!(relations[i].domain() == *domain_)) {
      throw InputError("criterion " + std::to_string(i + 1) + " is defined on a different domain");
    }
    std::string name = names.empty() ? "C" + std::to_string(i + 1) : names[i];
    CategoryStructure s = categories(relations[i]);
    criteria_.push_back(Criterion{std::move(name), std::move(relations[i]), std::move(s)});
  }
}

std::uint64_t DiscriminationVector::product() const {
  std::uint64_t p = 1;
  for (std::size_t e : entries) {
    if (e != 0 && p > std::numeric_limits<std::uint64_t>::max() / e) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    p *= e;
  }
  return p;
}

std::string DiscriminationVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

DiscriminationVector discriminationVector(const CriteriaSet& cs) {
  DiscriminationVector v;
  for (const auto& c : cs.criteria()) v.entries.push_back(c.structure.e());
  return v;
}

DiscriminationPartition meetExcluding(const CriteriaSet& cs, std::size_t excluded) {
  const std::size_t n = cs.domain().size();
  DiscriminationPartition p;
  p.cellOf.assign(n, kNoCell);
  std::map<std::vector<std::size_t>, std::size_t> cellBySignature;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> sig(cs.size(), kNoCell);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i != excluded) sig[i] = cs[i].structure.cellOf[x];
    }
    auto [it, inserted] = cellBySignature.emplace(sig, p.cells.size());
    if (inserted) {
      p.cells.emplace_back();
      p.signatures.push_back(std::move(sig));
    }
    p.cells[it->second].push_back(x);
    p.cellOf[x] = it->second;
  }
  return p;
}

DiscriminationPartition discriminationPartition(const CriteriaSet& cs) {
  return meetExcluding(cs, kNoCell);
}

bool maximallyCategorizes(const CriteriaSet& cs) {
  return discriminationPartition(cs).cells.size() == discriminationVector(cs).product();
}

namespace {

// Restriction of C_i to the element mask `inside`.
CategoryStructure restrictTo(const CategoryStructure& full, const std::vector<bool>& inside) {
  CategoryStructure s;
  s.cellOf.assign(full.cellOf.size(), kNoCell);
  std::vector<std::size_t> newIndex(full.e(), kNoCell);
  std::vector<std::size_t> source;
  for (std::size_t j = 0; j < full.e(); ++j) {
    std::vector<std::size_t> members;
    for (std::size_t x : full.cells[j]) {
      if (inside[x]) members.push_back(x);
    }
    if (members.empty()) continue;
    newIndex[j] = s.cells.size();
    source.push_back(j);
    for (std::size_t x : members) s.cellOf[x] = newIndex[j];
    s.cells.push_back(std::move(members));
  }
  s.order = DenseRelation(s.cells.size());
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = 0; b < source.size(); ++b) {
      if (full.order(source[a], source[b])) s.order.set(a, b);
    }
  }
  return s;
}

void checkCriterionIndex(const CriteriaSet& cs, std::size_t i) {
  if (i >= cs.size()) throw InputError("criterion index out of range");
}

// Categories (k, j) of all criteria other than i, in criterion-major order.
std::vector<std::pair<std::size_t, std::size_t>> otherCategories(const CriteriaSet& cs,
                                                                 std::size_t i) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k == i) continue;
    for (std::size_t j = 0; j < cs[k].structure.e(); ++j) units.emplace_back(k, j);
  }
  return units;
}

// Does every element set in `units` meet every category of C_i?
bool everyUnitMeetsEveryCategory(const CategoryStructure& ci,
                                 const std::vector<std::vector<std::size_t>>& units) {
  std::vector<bool> seen(ci.e());
  for (const auto& unit : units) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t hit = 0;
    for (std::size_t x : unit) {
      const std::size_t j = ci.cellOf[x];
      if (!seen[j]) {
        seen[j] = true;
        ++hit;
      }
    }
    if (hit != ci.e()) return false;
  }
  return true;
}

}  // namespace

CategoryStructure restrictedOrder(const CriteriaSet& cs, std::size_t i,
                                  const std::vector<std::size_t>& selector) {
  checkCriterionIndex(cs, i);
  if (selector.empty()) throw InputError("selector must contain at least one cell");
  const DiscriminationPartition others = meetExcluding(cs, i);
  std::vector<bool> inside(cs.domain().size(), false);
  for (std::size_t cell : selector) {
    if (cell >= others.cells.size()) throw InputError("selector cell index out of range");
    for (std::size_t x : others.cells[cell]) inside[x] = true;
  }
  return restrictTo(cs[i].structure, inside);
}

CategoryStructure restrictedOrderByCategories(
    const CriteriaSet& cs, std::size_t i,
    const std::vector<std::pair<std::size_t, std::size_t>>& categoriesOfOthers) {
  checkCriterionIndex(cs, i);
  if (categoriesOfOthers.empty()) throw InputError("selector must contain at least one category");
  std::vector<bool> inside(cs.domain().size(), false);
  for (const auto& [k, j] : categoriesOfOthers) {
    if (k == i) throw InputError("selector categories must come from other criteria");
    checkCriterionIndex(cs, k);
    if (j >= cs[k].structure.e()) throw InputError("selector category index out of range");
    for (std::size_t x : cs[k].structure.cells[j]) inside[x] = true;
  }
  if (std::none_of(inside.begin(), inside.end(), [](bool b) { return b; })) {
    throw InputError("selector union is empty");
  }
  return restrictTo(cs[i].structure, inside);
}

bool orderIsomorphismProperty(const CriteriaSet& cs, const OrderIsomorphismOptions& options) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const CategoryStructure& full = cs[i].structure;
    if (options.semantics == SelectorSemantics::meetCells) {
      const DiscriminationPartition others = meetExcluding(cs, i);
      if (!options.exhaustive) {
        if (!everyUnitMeetsEveryCategory(full, others.cells)) return false;
        continue;
      }
      const std::size_t m = others.cells.size();
      if (m > options.maxSelectorUnits) {
        throw ResourceError("exhaustive selector check needs 2^" + std::to_string(m) +
                            " selectors; bound is 2^" + std::to_string(options.maxSelectorUnits));
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> selector;
        for (std::size_t c = 0; c < m; ++c) {
          if (mask >> c & 1U) selector.push_back(c);
        }
        if (!orderIsomorphic(restrictedOrder(cs, i, selector), full)) return false;
      }
    } else {
      const auto units = otherCategories(cs, i);
      if (!options.exhaustive) {
        std::vector<std::vector<std::size_t>> sets;
        for (const auto& [k, j] : units) sets.push_back(cs[k].structure.cells[j]);
        if (!everyUnitMeetsEveryCategory(full, sets)) return false;
        continue;
      }
      const std::size_t m = units.size();
      if (m > options.maxSelectorUnits) {
        throw ResourceError("exhaustive selector check needs 2^" + std::to_string(m) +
                            " selectors; bound is 2^" + std::to_string(options.maxSelectorUnits));
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> selector;
        for (std::size_t c = 0; c < m; ++c) {
          if (mask >> c & 1U) selector.push_back(units[c]);
        }
        if (!orderIsomorphic(restrictedOrderByCategories(cs, i, selector), full)) return false;
      }
    }
  }
  return true;
}

namespace {

// Advances a mixed-radix counter; false once it wraps around.
bool nextCombination(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < radix[pos]) return true;
    digits[pos] = 0;
  }
  return false;
}

std::string joinIndices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::optional<ProductRepresentation> productRepresentation(const CriteriaSet& cs) {
  const DiscriminationVector vec = discriminationVector(cs);
  if (vec.product() > cs.domain().size()) return std::nullopt;

  const DiscriminationPartition partition = discriminationPartition(cs);
  const std::set<std::vector<std::size_t>> used(partition.signatures.begin(),
                                                partition.signatures.end());

  ProductRepresentation rep;
  rep.attributeSizes = vec.entries;

  std::vector<std::string> pointLabels;
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> combo(cs.size(), 0);
  do {
    if (!used.count(combo)) return std::nullopt;
    points.push_back(combo);
    pointLabels.push_back(joinIndices(combo));
  } while (nextCombination(combo, rep.attributeSizes));
  rep.productDomain = makeDomain(std::move(pointLabels));

  for (std::size_t x = 0; x < cs.domain().size(); ++x) {
    rep.relabeling.push_back(partition.signatures[partition.cellOf[x]]);
  }

  for (std::size_t i = 0; i < cs.size(); ++i) {
    const DenseRelation& order = cs[i].structure.order;
    std::vector<Relation::Pair> pairs;
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (std::size_t q = 0; q < points.size(); ++q) {
        if (order(points[p][i], points[q][i])) pairs.emplace_back(p, q);
      }
    }
    rep.mirroredCriteria.emplace_back(rep.productDomain, std::move(pairs));

    const CategoryStructure mirrored = categories(rep.mirroredCriteria.back());
    std::vector<std::size_t> f(vec.entries[i], kNoCell);
    for (std::size_t p = 0; p < points.size(); ++p) {
      std::size_t& slot = f[points[p][i]];
      if (slot == kNoCell) slot = mirrored.cellOf[p];
    }
    rep.categoryBijections.push_back(std::move(f));
  }

  if (!verifyProductRepresentation(cs, rep)) return std::nullopt;
  return rep;
}

bool verifyProductRepresentation(const CriteriaSet& cs, const ProductRepresentation& rep) {
  const std::size_t n = cs.size();
  if (rep.attributeSizes.size() != n || rep.mirroredCriteria.size() != n ||
      rep.categoryBijections.size() != n || rep.relabeling.size() != cs.domain().size()) {
    return false;
  }

  // Every attribute combination labels some alternative; labels agree with categories.
  std::set<std::vector<std::size_t>> used;
  for (std::size_t x = 0; x < rep.relabeling.size(); ++x) {
    const auto& sig = rep.relabeling[x];
    if (sig.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (sig[i] != cs[i].structure.cellOf[x]) return false;
    }
    used.insert(sig);
  }
  DiscriminationVector sizes{rep.attributeSizes};
  if (used.size() != sizes.product() || rep.productDomain->size() != used.size()) return false;

  for (std::size_t i = 0; i < n; ++i) {
    const CategoryStructure& original = cs[i].structure;
    const CategoryStructure mirrored = categories(rep.mirroredCriteria[i]);
    const auto& f = rep.categoryBijections[i];
    if (original.e() != rep.attributeSizes[i] || mirrored.e() != original.e() ||
        f.size() != original.e()) {
      return false;
    }
    std::vector<bool> hit(mirrored.e(), false);
    for (std::size_t img : f) {
      if (img >= mirrored.e() || hit[img]) return false;
      hit[img] = true;
    }
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < f.size(); ++b) {
        if (original.order(a, b) != mirrored.order(f[a], f[b])) return false;
      }
    }
    // Mirrored categories must be slabs: fixed coordinate i, free elsewhere.
    const std::size_t slab = sizes.product() / rep.attributeSizes[i];
    for (std::size_t j = 0; j < f.size(); ++j) {
      const auto& cell = mirrored.cells[f[j]];
      if (cell.size() != slab) return false;
    }
  }
  return true;
}

TheoremReport theoremCheck(const CriteriaSet& cs, const OrderIsomorphismOptions& options) {
  TheoremReport r;
  r.maximallyCategorizes = maximallyCategorizes(cs);
  r.orderIsomorphismProperty = orderIsomorphismProperty(cs, options);
  r.productRepresentation = productRepresentation(cs).has_value();
  return r;
}

TheoremBatchSummary theoremBatch(std::span<const CriteriaSet> sets, Exec exec) {
  const auto count = static_cast<std::ptrdiff_t>(sets.size());
  std::vector<TheoremReport> reports(sets.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::ptrdiff_t k = 0; k < count; ++k) reports[k] = theoremCheck(sets[k]);
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) reports[k] = theoremCheck(sets[k]);
  }

  TheoremBatchSummary summary;
  summary.cases = reports.size();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    if (!r.agree()) {
      summary.violations.push_back(k);
    } else if (r.maximallyCategorizes) {
      ++summary.allTrue;
    } else {
      ++summary.allFalse;
    }
  }
  return summary;
}

CriteriaSet productCriteria(const std::vector<Attribute>& attributes,
                            const std::function<bool(const std::vector<std::size_t>&)>& keep,
                            const std::string& separator) {
  if (attributes.empty()) throw InputError("a product needs at least one attribute");
  std::vector<std::size_t> radix;
  for (const auto& a : attributes) {
    if (a.values.empty() || a.rangeOf.size() != a.values.size()) {
      throw InputError("attribute '" + a.name + "' needs one range per value");
    }
    for (std::size_t r : a.rangeOf) {
      if (r >= a.rangeOrder.size()) throw InputError("attribute range index out of range");
    }
    radix.push_back(a.values.size());
  }

  std::vector<std::vector<std::size_t>> points;
  std::vector<std::string> labels;
  std::vector<std::size_t> combo(attributes.size(), 0);
  do {
    if (keep && !keep(combo)) continue;
    std::string label;
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (i) label += separator;
      label += attributes[i].values[combo[i]];
    }
    points.push_back(combo);
    labels.push_back(std::move(label));
  } while (nextCombination(combo, radix));
  if (points.empty()) throw InputError("product filter removed every alternative");

  DomainPtr domain = makeDomain(std::move(labels));
  std::vector<Relation> relations;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    const Attribute& a = attributes[i];
    std::vector<Relation::Pair> pairs;
    for (std::size_t x = 0; x < points.size(); ++x) {
      for (std::size_t y = 0; y < points.size(); ++y) {
        if (a.rangeOrder(a.rangeOf[points[x][i]], a.rangeOf[points[y][i]])) pairs.emplace_back(x, y);
      }
    }
    relations.emplace_back(domain, std::move(pairs));
    names.push_back(a.name.empty() ? "C" + std::to_string(i + 1) : a.name);
  }
  return CriteriaSet(domain, std::move(relations), std::move(names));
}

CriteriaSet bitCubeCriteria(std::size_t n, const std::function<bool(const std::string&)>& keep) {
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < n; ++i) {
    Attribute a{"bit" + std::to_string(i + 1), {"0", "1"}, {0, 1}, DenseRelation(2)};
    a.rangeOrder.set(1, 0);
    attrs.push_back(std::move(a));
  }
  std::function<bool(const std::vector<std::size_t>&)> filter;
  if (keep) {
    filter = [&keep](const std::vector<std::size_t>& combo) {
      std::string label;
      for (std::size_t b : combo) label += static_cast<char>('0' + b);
      return keep(label);
    };
  }
  return productCriteria(attrs, filter);
}

}  // namespace coarse
