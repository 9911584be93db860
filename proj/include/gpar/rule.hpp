#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpar/pattern.hpp"

namespace gpar {

/// A rule (p1, p2, V1, V2): antecedent, consequent and joining variables.
struct Rule {
    std::string name;
    Pattern p1, p2;
    std::vector<Variable> V1, V2;

    std::size_t n() const { return V1.size(); }
};

/// The two-pattern form where shared variable names carry the join.
struct SimplifiedRule {
    std::string name;
    Pattern p1, p2pp;
};

/// Names of violated well-formedness constraints; empty when the rule is valid.
std::vector<std::string> validate(const Rule& r);

/// Throws ContractError listing every violation.
void require_valid(const Rule& r);

SimplifiedRule to_simplified(const Rule& r);

/// V1 = V2 = shared variables sorted by name. Throws ContractError on an empty join.
Rule from_simplified(const SimplifiedRule& s);

/// Injective m from the consequent's variables and terms into the antecedent's,
/// with m(p2) a subset of p1. Pairs are (p2 node, p1 node), sorted by p2 node text.
struct TrivialityWitness {
    std::vector<std::pair<Node, Node>> m;

    Node apply(Node n) const;
    std::string to_string() const;
};

struct TrivialityResult {
    bool trivial = false;
    std::optional<TrivialityWitness> witness;
};

TrivialityResult is_trivial(const Pattern& p1, const Pattern& p2);
inline TrivialityResult is_trivial(const Rule& r) { return is_trivial(r.p1, r.p2); }

/// Parses `@rule` blocks. A block without `@join` is read as a simplified rule.
std::vector<Rule> parse_rules(std::string_view text);

/// Writes a rule block; `@join` is omitted when the rule is already in simplified form.
std::string serialize_rule(const Rule& r);
std::string serialize_rule(const SimplifiedRule& s);

}  // namespace gpar
