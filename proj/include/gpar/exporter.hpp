#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpar/rule.hpp"

namespace gpar {

inline constexpr std::string_view kDefaultNamespace = "http://example.org#";

/// The inequalities that encode nra semantics for the antecedent.
struct Inequalities {
    std::vector<std::pair<Variable, Variable>> pairs;  // every unordered variable pair
    std::vector<std::pair<Variable, Term>> terms;      // every (variable, antecedent term)
};

/// Variables by name, terms by label; pairs in lexicographic order.
Inequalities nra_inequalities(const SimplifiedRule& s);

/// A term as a SPARQL/SWRL token: `<namespace label>` with unsafe IRI characters
/// percent-encoded, or a string literal when the label is itself a quoted literal.
std::string render_term(Term t, std::string_view ns, bool allow_literal = true);

std::string to_sparql_construct(const SimplifiedRule& s, std::string_view ns = kDefaultNamespace);

/// Throws ContractError when a variable occurs in predicate position.
std::string to_swrl(const SimplifiedRule& s, std::string_view ns = kDefaultNamespace);

}  // namespace gpar
