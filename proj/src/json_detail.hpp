#pragma once

// Internal JSON (de)serializers shared between the library translation units.
// Public APIs take and return text; these helpers let composite documents
// (encoding bundles) embed sub-documents without reparsing.

#include <json.hpp>

namespace afa::hyperset {
class HGraph;
namespace detail {
nlohmann::ordered_json graph_to_json(const HGraph& h);
HGraph graph_from_json(const nlohmann::ordered_json& doc);
}  // namespace detail
}  // namespace afa::hyperset

namespace afa::lang {
struct LanguageSpec;
namespace detail {
nlohmann::ordered_json spec_to_json(const LanguageSpec& spec);
LanguageSpec spec_from_json(const nlohmann::ordered_json& doc);
}  // namespace detail
}  // namespace afa::lang

namespace afa::eqsolver {
class Term;
struct EquationSystem;
namespace detail {
nlohmann::ordered_json term_to_json(const Term& t);
Term term_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json system_to_json(const EquationSystem& sys);
EquationSystem system_from_json(const nlohmann::ordered_json& doc);
}  // namespace detail
}  // namespace afa::eqsolver
