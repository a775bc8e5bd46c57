#pragma once

#include "coarse/aggregation.hpp"
#include "coarse/choice.hpp"
#include "coarse/criteria.hpp"
#include "coarse/efficiency.hpp"

#include <json.hpp>

#include <string>

namespace coarse::io {

inline constexpr const char* kCriteriaSchema = "coarse-criteria/1";
inline constexpr const char* kChoiceSchema = "coarse-choice/1";

/// Choice documents enumerate menus explicitly only up to this many alternatives.
inline constexpr std::size_t kMaxChoiceDocumentDomain = 12;

/// Parses a criteria document. Criteria are given either as category lists
/// with category-order index pairs (canonical) or as raw superior/inferior
/// label pairs. Errors carry `source` and a JSON path.
CriteriaSet parseCriteria(const nlohmann::json& doc, const std::string& source = "<input>");
CriteriaSet loadCriteria(const std::string& path);

/// Canonical category-list form.
nlohmann::json criteriaToJson(const CriteriaSet& cs);

ChoiceFunction parseChoice(const nlohmann::json& doc, const std::string& source = "<input>");
ChoiceFunction loadChoice(const std::string& path);
nlohmann::json choiceToJson(const ChoiceFunction& c);

/// table:PATH | power:P | linear:B | ceillog2:A | expr:FORMULA
CostModel parseCostSpec(const std::string& spec);

/// Comma-separated positive rationals, e.g. "4,2,1" or "1/2,3".
WeightProfile parseWeights(const std::string& text);

nlohmann::json readJsonFile(const std::string& path);

}  // namespace coarse::io
